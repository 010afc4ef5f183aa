#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cliffgraph
{

    struct LabeledEdge
    {
        std::uint32_t source;
        std::uint32_t label;
        std::uint32_t target;

        friend auto operator<=>(const LabeledEdge &, const LabeledEdge &) = default;
    };

    /**
     * Directed multigraph with named edge labels. Edges are functional per
     * label: a vertex carries at most one out-edge with a given label, which
     * finalize() enforces after sorting the edge list lexicographically.
     */
    class LabeledGraph
    {
    private:
        std::uint32_t _num_vertices = 0;
        std::vector<std::string> _labels;
        std::vector<LabeledEdge> _edges;

    public:
        LabeledGraph() = default;
        LabeledGraph(std::uint32_t num_vertices, std::vector<std::string> labels);

        void add_edge(std::uint32_t source, std::uint32_t label, std::uint32_t target);

        /** Sorts edges and checks the functional-edge invariant. */
        void finalize();

        std::uint32_t num_vertices() const noexcept { return _num_vertices; }
        const std::vector<std::string> &labels() const noexcept { return _labels; }
        const std::vector<LabeledEdge> &edges() const noexcept { return _edges; }

        /** Index of a label name; std::domain_error when unknown. */
        std::uint32_t label_index(std::string_view name) const;

        bool operator==(const LabeledGraph &other) const = default;
    };

} // namespace cliffgraph
