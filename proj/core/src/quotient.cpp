#include "cliffgraph/quotient.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cliffgraph/errors.hpp"

namespace cliffgraph
{

    namespace
    {

        void check_embedding(const CliffordGroup &g, const StateVector &v)
        {
            if (v.qubits() < g.qubits())
            {
                throw std::domain_error(
                    "group acts on more qubits than the state provides");
            }
        }

        void check_generator_fit(const GateWord &generators, const StateVector &v)
        {
            for (const Gate &gen : generators)
            {
                if (std::max(gen.qubit, gen.target) > v.qubits())
                {
                    throw std::domain_error("generator " + gen.name() +
                                            " does not fit the state");
                }
            }
        }

        std::string state_key(const StateVector &s, PhaseMode mode)
        {
            return mode == PhaseMode::exact ? s.encode() : canonical_phase_key(s);
        }

        std::vector<std::string> generator_names(const GateWord &generators)
        {
            std::vector<std::string> names;
            names.reserve(generators.size());
            for (const Gate &g : generators)
            {
                names.push_back(g.name());
            }
            return names;
        }

    } // namespace

    StabilizerSubgroup stabilizer_subgroup(const CliffordGroup &g, const StateVector &v)
    {
        check_embedding(g, v);
        StabilizerSubgroup stab{{}, v};
        const std::string base_key = state_key(v, g.phase_mode());
        for (std::uint32_t id = 0; id < g.order(); ++id)
        {
            const StateVector image = apply_to_leading_qubits(g.element_matrix(id), v);
            if (state_key(image, g.phase_mode()) == base_key)
            {
                stab.members.push_back(id);
            }
        }
        return stab;
    }

    ReachabilityGraph quotient_graph(const CliffordGroup &g, const StateVector &v)
    {
        check_embedding(g, v);
        const PhaseMode mode = g.phase_mode();

        ReachabilityGraph result;
        result.phase_mode = mode;
        result.coset_reps.clear();

        // Two elements share a left stabilizer coset exactly when they send v
        // to the same state class, so the class key indexes cosets directly.
        std::unordered_map<std::string, std::uint32_t> vertex_of;
        for (std::uint32_t id = 0; id < g.order(); ++id)
        {
            const StateVector image = apply_to_leading_qubits(g.element_matrix(id), v);
            std::string key = state_key(image, mode);
            if (vertex_of.contains(key))
            {
                continue;
            }
            vertex_of.emplace(std::move(key), static_cast<std::uint32_t>(result.coset_reps.size()));
            result.coset_reps.push_back(id);
            result.vertex_words.push_back(g.word(id));
            result.vertex_states.push_back(mode == PhaseMode::exact
                                               ? image
                                               : canonical_phase_form(image).representative);
        }

        const auto num_vertices = static_cast<std::uint32_t>(result.coset_reps.size());
        result.graph = LabeledGraph(num_vertices, generator_names(g.generators()));
        for (std::uint32_t vertex = 0; vertex < num_vertices; ++vertex)
        {
            for (std::size_t gi = 0; gi < g.generators().size(); ++gi)
            {
                const StateVector image =
                    apply_gate(g.generators()[gi], result.vertex_states[vertex]);
                result.graph.add_edge(vertex, static_cast<std::uint32_t>(gi),
                                      vertex_of.at(state_key(image, mode)));
            }
        }
        result.graph.finalize();
        return result;
    }

    ReachabilityGraph orbit_states(const GateWord &generators, const StateVector &v,
                                   std::size_t state_cap)
    {
        check_generator_fit(generators, v);

        ReachabilityGraph result;
        result.phase_mode = PhaseMode::mod_phase;

        std::unordered_map<std::string, std::uint32_t> vertex_of;
        std::vector<StateVector> states;
        StateVector start = canonical_phase_form(v).representative;
        vertex_of.emplace(canonical_phase_key(start), 0);
        states.push_back(std::move(start));
        result.vertex_words.emplace_back();

        // Same level discipline as group enumeration: first discovery fixes
        // the witness word, byte order fixes the IDs within a level.
        std::vector<std::uint32_t> frontier{0};
        while (!frontier.empty())
        {
            std::map<std::string, std::pair<StateVector, GateWord>> newly;
            for (std::uint32_t vertex : frontier)
            {
                for (const Gate &gen : generators)
                {
                    const StateVector image = apply_gate(gen, states[vertex]);
                    StatePhaseForm canonical = canonical_phase_form(image);
                    std::string key = canonical.representative.encode();
                    if (vertex_of.contains(key) || newly.contains(key))
                    {
                        continue;
                    }
                    GateWord witness;
                    witness.reserve(result.vertex_words[vertex].size() + 1);
                    witness.push_back(gen);
                    witness.insert(witness.end(), result.vertex_words[vertex].begin(),
                                   result.vertex_words[vertex].end());
                    newly.emplace(std::move(key),
                                  std::make_pair(std::move(canonical.representative),
                                                 std::move(witness)));
                }
            }
            frontier.clear();
            for (auto &[key, value] : newly)
            {
                if (states.size() >= state_cap)
                {
                    throw ResourceLimitError("orbit_states: state cap of " +
                                             std::to_string(state_cap) + " exceeded");
                }
                const auto id = static_cast<std::uint32_t>(states.size());
                vertex_of.emplace(key, id);
                states.push_back(std::move(value.first));
                result.vertex_words.push_back(std::move(value.second));
                frontier.push_back(id);
            }
        }

        const auto num_vertices = static_cast<std::uint32_t>(states.size());
        result.graph = LabeledGraph(num_vertices, generator_names(generators));
        for (std::uint32_t vertex = 0; vertex < num_vertices; ++vertex)
        {
            for (std::size_t gi = 0; gi < generators.size(); ++gi)
            {
                const StateVector image = apply_gate(generators[gi], states[vertex]);
                result.graph.add_edge(vertex, static_cast<std::uint32_t>(gi),
                                      vertex_of.at(canonical_phase_key(image)));
            }
        }
        result.graph.finalize();
        result.vertex_states = std::move(states);
        return result;
    }

} // namespace cliffgraph
