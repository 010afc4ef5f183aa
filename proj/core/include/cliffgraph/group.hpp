#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliffgraph/gates.hpp"
#include "cliffgraph/matrix.hpp"

namespace cliffgraph
{

    enum class PhaseMode
    {
        exact,
        mod_phase
    };

    std::string phase_mode_name(PhaseMode mode);

    /** Mode-aware canonical encoding: raw bytes in exact mode, the
     *  lexicographically least omega-multiple in mod_phase mode. */
    std::string canonical_key(const UnitaryMatrix &m, PhaseMode mode);

    /**
     * Finite matrix group generated by a gate list, with dense element IDs in
     * breadth-first discovery order. Within each BFS level the newly found
     * encodings are sorted by bytes before IDs are assigned, so the numbering
     * is reproducible regardless of how the frontier was expanded.
     */
    class CliffordGroup
    {
    public:
        static constexpr std::size_t kDefaultElementCap = 1'000'000;

        int qubits() const noexcept { return _n; }
        PhaseMode phase_mode() const noexcept { return _mode; }
        const GateWord &generators() const noexcept { return _generators; }
        std::size_t order() const noexcept { return _element_keys.size(); }

        const std::string &element_key(std::uint32_t id) const { return _element_keys.at(id); }
        UnitaryMatrix element_matrix(std::uint32_t id) const;

        /** ID of a matrix's canonical class, if it belongs to the group. */
        std::optional<std::uint32_t> find(const UnitaryMatrix &m) const;
        std::optional<std::uint32_t> find_key(const std::string &key) const;

        /** Shortest generator word reaching the element (BFS witness). */
        GateWord word(std::uint32_t id) const;

    private:
        friend CliffordGroup enumerate(const GateWord &, int, PhaseMode, std::size_t);

        int _n = 1;
        PhaseMode _mode = PhaseMode::exact;
        GateWord _generators;
        std::vector<std::string> _element_keys;
        std::unordered_map<std::string, std::uint32_t> _lookup;
        std::vector<std::uint32_t> _parent;
        std::vector<std::uint8_t> _parent_gen;
    };

    /**
     * Breadth-first closure of the generator list inside n qubits. Duplicate
     * generators are rejected; exceeding the element cap raises
     * ResourceLimitError. An empty list yields the trivial group.
     */
    CliffordGroup enumerate(const GateWord &generators, int n, PhaseMode mode,
                            std::size_t element_cap = CliffordGroup::kDefaultElementCap);

    /**
     * Dense edge table of the left-multiplication Cayley graph: the edge with
     * label g at vertex v points to the element generator_g * element_v.
     */
    struct CayleyGraph
    {
        std::uint32_t num_vertices = 0;
        std::uint32_t num_generators = 0;
        std::vector<std::uint32_t> targets;

        std::uint32_t target(std::uint32_t v, std::uint32_t g) const
        {
            return targets[static_cast<std::size_t>(v) * num_generators + g];
        }
    };

    CayleyGraph build_cayley(const CliffordGroup &g);

    /** Longest directed BFS eccentricity over all sources. Left-multiplication
     *  edge tables are vertex-transitive (right translation is an automorphism
     *  moving any vertex to any other), so large graphs are resolved from a
     *  verified sample of sources; a full scan runs when the sample disagrees.
     *  threads = 0 picks the hardware concurrency. */
    int diameter(const CayleyGraph &g, int threads = 0);

    /** Minimum-length generator word for a member matrix; NotInGroupError otherwise. */
    GateWord shortest_word(const CliffordGroup &g, const UnitaryMatrix &target);

    /** True iff both groups contain exactly the same canonical element set. */
    bool same_element_set(const CliffordGroup &a, const CliffordGroup &b);

} // namespace cliffgraph
