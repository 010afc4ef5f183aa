#pragma once

#include <cstdint>
#include <vector>

#include "cliffgraph/group.hpp"
#include "cliffgraph/labeled_graph.hpp"
#include "cliffgraph/state.hpp"

namespace cliffgraph
{

    /**
     * The elements of a group fixing a state: exactly in exact mode, up to a
     * power of omega in mod_phase mode. Member IDs are sorted and always
     * include the identity.
     */
    struct StabilizerSubgroup
    {
        std::vector<std::uint32_t> members;
        StateVector state;
    };

    StabilizerSubgroup stabilizer_subgroup(const CliffordGroup &g, const StateVector &v);

    /**
     * Orbit graph of a state: one vertex per left stabilizer coset (equally,
     * per reachable state class), edges by generator left action. Cosets are
     * represented by their least element ID and numbered in that order; the
     * state-based construction leaves coset_reps empty and numbers vertices
     * in BFS discovery order instead.
     */
    struct ReachabilityGraph
    {
        PhaseMode phase_mode = PhaseMode::mod_phase;
        LabeledGraph graph;
        std::vector<std::uint32_t> coset_reps;
        std::vector<GateWord> vertex_words;
        std::vector<StateVector> vertex_states;
    };

    /** Quotient of the group's Cayley graph by the stabilizer of v. */
    ReachabilityGraph quotient_graph(const CliffordGroup &g, const StateVector &v);

    /**
     * Independent construction of the same graph by breadth-first search over
     * states only (canonical phase forms as identity), never touching the
     * group. Used as an oracle against quotient_graph.
     */
    ReachabilityGraph orbit_states(const GateWord &generators, const StateVector &v,
                                   std::size_t state_cap = 1'000'000);

} // namespace cliffgraph
