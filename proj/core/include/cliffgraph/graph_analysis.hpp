#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffgraph/group.hpp"
#include "cliffgraph/labeled_graph.hpp"

namespace cliffgraph
{

    /** Cayley edge table as a LabeledGraph with generator-name labels. */
    LabeledGraph cayley_labeled_graph(const CliffordGroup &g, const CayleyGraph &c);

    /**
     * Weakly-connected components of the subgraph restricted to the given
     * labels. Every vertex appears (isolated vertices become singletons);
     * members are sorted and components ordered by least member.
     */
    std::vector<std::vector<std::uint32_t>> components_by_labels(
        const LabeledGraph &g, const std::vector<std::string> &labels);

    struct SuperEdge
    {
        std::uint32_t a;
        std::uint32_t b;
        std::uint64_t multiplicity;

        friend auto operator<=>(const SuperEdge &, const SuperEdge &) = default;
    };

    /**
     * Contraction of the core-label components: one super-vertex per
     * component, one super-edge per unordered component pair linked by
     * overlay-label edges (with multiplicity), and per-component counts of
     * overlay edges that stay inside the component.
     */
    struct ContractionGraph
    {
        std::vector<std::vector<std::uint32_t>> super_vertices;
        std::vector<SuperEdge> super_edges;
        std::vector<std::uint64_t> self_links;
    };

    ContractionGraph overlay_contraction(const LabeledGraph &g,
                                         const std::vector<std::string> &core_labels,
                                         const std::vector<std::string> &overlay_labels);

    struct StrippedGraph
    {
        LabeledGraph graph;
        std::vector<std::uint64_t> removed_per_label;
    };

    /** Removes all self-loop edges, counting removals per label. */
    StrippedGraph strip_trivial_loops(const LabeledGraph &g);

    /**
     * Isomorphism-oriented invariant record. Per-label fields are sorted by
     * content, so renaming or permuting labels never changes the fingerprint;
     * vertex relabelings cannot change it either when the graph is small
     * enough (<= 5000 vertices) for the all-pairs distance field.
     */
    struct GraphFingerprint
    {
        std::string bytes;

        bool operator==(const GraphFingerprint &other) const = default;
    };

    GraphFingerprint fingerprint(const LabeledGraph &g);

    enum class IsoResult
    {
        isomorphic,
        not_isomorphic,
        inconclusive
    };

    struct IsoOutcome
    {
        IsoResult result;
        std::vector<std::uint32_t> mapping;      // vertex of a -> vertex of b
        std::vector<std::uint32_t> label_mapping; // label of a -> label of b
    };

    /**
     * Labeled-graph isomorphism up to a bijection of labels: fingerprint
     * mismatch is a negative certificate; otherwise a backtracking search
     * runs until it finds a verified mapping or exhausts the node budget.
     */
    IsoOutcome iso_test(const LabeledGraph &a, const LabeledGraph &b,
                        std::uint64_t budget = 100'000'000);

} // namespace cliffgraph
