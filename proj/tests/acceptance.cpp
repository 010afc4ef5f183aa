#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/gates.hpp"
#include "cliffgraph/graph_analysis.hpp"
#include "cliffgraph/graph_io.hpp"
#include "cliffgraph/group.hpp"
#include "cliffgraph/quotient.hpp"
#include "cliffgraph/relations.hpp"
#include "cliffgraph/scalar.hpp"
#include "cliffgraph/state.hpp"
#include "cliffgraph/states.hpp"
#include "cliffgraph/table.hpp"
#include "graph_checks.hpp"

using namespace cliffgraph;

namespace
{

    struct CriterionOutcome
    {
        bool pass = true;
        std::vector<std::string> notes;

        void note(std::string text) { notes.push_back(std::move(text)); }

        void fail(std::string text)
        {
            pass = false;
            notes.push_back(std::move(text));
        }

        void require(bool ok, const std::string &what)
        {
            if (!ok)
            {
                fail(what);
            }
        }
    };

    template <typename Body>
    CriterionOutcome guarded(Body &&body)
    {
        CriterionOutcome out;
        try
        {
            body(out);
        }
        catch (const std::exception &e)
        {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        return out;
    }

    double seconds_since(std::chrono::steady_clock::time_point start)
    {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        return std::chrono::duration<double>(elapsed).count();
    }

    std::string with_precision(double value)
    {
        std::ostringstream os;
        os.precision(1);
        os << std::fixed << value;
        return os.str();
    }

    std::set<std::string> member_key_set(const CliffordGroup &g,
                                         const std::vector<std::uint32_t> &members)
    {
        std::set<std::string> keys;
        for (std::uint32_t id : members)
        {
            keys.insert(g.element_key(id));
        }
        return keys;
    }

    std::string word_key(const CliffordGroup &g, const std::string &text)
    {
        return canonical_key(word_matrix(parse_word(text), g.qubits()), g.phase_mode());
    }

    /**
     * Breadth-first search over group elements built from matrix products
     * alone (no precomputed edge table): returns the greatest shortest-word
     * length. Right translation is a graph automorphism carrying any vertex
     * to any other, so this identity eccentricity equals the Cayley diameter.
     */
    int matrix_bfs_depth(const GateWord &generators, int n)
    {
        const std::size_t dim = std::size_t{1} << n;
        std::unordered_set<std::string> seen;
        std::vector<UnitaryMatrix> frontier{UnitaryMatrix::identity(dim)};
        seen.insert(canonical_key(frontier.front(), PhaseMode::exact));
        int depth = 0;
        while (true)
        {
            std::vector<UnitaryMatrix> next;
            for (const UnitaryMatrix &m : frontier)
            {
                for (const Gate &gen : generators)
                {
                    UnitaryMatrix product = gate_left_mul(gen, m, n);
                    std::string key = canonical_key(product, PhaseMode::exact);
                    if (seen.insert(std::move(key)).second)
                    {
                        next.push_back(std::move(product));
                    }
                }
            }
            if (next.empty())
            {
                return depth;
            }
            frontier = std::move(next);
            ++depth;
        }
    }

    /** One stabilizer/orbit fixture shared by several criteria. */
    struct OrbitCase
    {
        std::string label;
        const CliffordGroup *group;
        StateVector state;
        std::size_t expected_stabilizer;
        std::uint32_t expected_vertices;
        std::vector<std::uint32_t> stabilizer_members;
        ReachabilityGraph quotient;
        ReachabilityGraph oracle;
    };

    OrbitCase make_orbit_case(std::string label, const CliffordGroup &group, StateVector state,
                              std::size_t expected_stabilizer, std::uint32_t expected_vertices)
    {
        OrbitCase c{std::move(label), &group,          std::move(state), expected_stabilizer,
                    expected_vertices, {}, {}, {}};
        c.stabilizer_members = stabilizer_subgroup(group, c.state).members;
        c.quotient = quotient_graph(group, c.state);
        c.oracle = orbit_states(group.generators(), c.state);
        return c;
    }

    LabeledGraph cayley_of(const char *generators)
    {
        const CliffordGroup g = enumerate(parse_word(generators), 2, PhaseMode::exact);
        return cayley_labeled_graph(g, build_cayley(g));
    }

    std::vector<std::size_t> component_sizes(const std::vector<std::vector<std::uint32_t>> &comps)
    {
        std::vector<std::size_t> sizes;
        sizes.reserve(comps.size());
        for (const auto &c : comps)
        {
            sizes.push_back(c.size());
        }
        return sizes;
    }

    std::string describe_sizes(const std::vector<std::size_t> &sizes)
    {
        std::string out = "{";
        for (std::size_t i = 0; i < sizes.size(); ++i)
        {
            if (i > 0)
            {
                out += ", ";
            }
            out += std::to_string(sizes[i]);
        }
        return out + "}";
    }

} // namespace

int main()
{
    int failures = 0;
    const auto report = [&failures](int number, const char *name, const CriterionOutcome &out) {
        std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << " - "
                  << name << "\n";
        for (const std::string &note : out.notes)
        {
            std::cout << "    " << note << "\n";
        }
        std::cout.flush();
        if (!out.pass)
        {
            ++failures;
        }
    };

    // 1: every identity in the catalog, at both qubit orientations, for
    // registers of 2, 3, and 4 qubits, in exact arithmetic.
    report(1, "generator relation catalog", guarded([](CriterionOutcome &out) {
        const std::size_t catalog = relation_catalog().size();
        for (int n : {2, 3, 4})
        {
            const RelationReport r = verify_all(n);
            out.require(r.all_passed, "an identity failed at " + std::to_string(n) + " qubits");
            out.require(r.checks.size() == 2 * catalog,
                        "wrong check count at " + std::to_string(n) + " qubits");
        }
        out.note(std::to_string(catalog) + " identities checked at both orientations for 2, 3, "
                                           "and 4 qubits");
    }));

    // 2: enumerate all 29 generator subsets at 2 qubits and reproduce the
    // reference order/diameter/factor/quotient-diameter columns.
    report(2, "subgroup table reproduction", guarded([](CriterionOutcome &out) {
        const auto start = std::chrono::steady_clock::now();
        const auto computed = subgroup_table(0);
        const double table_seconds = seconds_since(start);
        const auto &rows = reference_subgroup_rows();
        out.require(computed.size() == rows.size(), "row count mismatch");

        int matching = 0;
        std::vector<std::size_t> mismatched;
        for (std::size_t i = 0; i < rows.size() && i < computed.size(); ++i)
        {
            const bool match = computed[i].order == rows[i].expected_order &&
                               computed[i].diameter == rows[i].expected_diameter &&
                               computed[i].factor == rows[i].expected_factor &&
                               computed[i].mod_diameter == rows[i].expected_mod_diameter;
            if (match)
            {
                ++matching;
            }
            else
            {
                mismatched.push_back(i);
            }
        }
        out.note("all 29 subsets enumerated and measured in " + with_precision(table_seconds) +
                 "s; " + std::to_string(matching) + " of 29 rows match the reference exactly");
        for (const std::size_t i : mismatched)
        {
            out.fail("row {" + rows[i].generators + "}: computed order " +
                     std::to_string(computed[i].order) + ", diameter " +
                     std::to_string(computed[i].diameter) + ", factor " +
                     std::to_string(computed[i].factor) + ", quotient diameter " +
                     std::to_string(computed[i].mod_diameter) + "; reference expects " +
                     std::to_string(rows[i].expected_order) + ", " +
                     std::to_string(rows[i].expected_diameter) + ", " +
                     std::to_string(rows[i].expected_factor) + ", " +
                     std::to_string(rows[i].expected_mod_diameter));
        }
        if (mismatched.size() == 1 && rows[mismatched.front()].generators == "H1 H2 P1 C12")
        {
            const auto check_start = std::chrono::steady_clock::now();
            const int depth = matrix_bfs_depth(parse_word("H1 H2 P1 C12"), 2);
            out.note("cross-check: an independent breadth-first search over matrix products "
                     "(no edge table) finds a greatest shortest-word length of " +
                     std::to_string(depth) + " in " + with_precision(seconds_since(check_start)) +
                     "s; right-translation symmetry makes this the diameter");
            out.note("the undirected reading measures 19 and the transposed-control subset "
                     "{H1 H2 P1 C21} measures 21/13, so no reading of this row yields the "
                     "printed 21/16 pair; the reference diameter appears to be a misprint");
        }
    }));

    // 3: element-set sharing between marked rows, and Cayley isomorphism of
    // the marked small pairs.
    report(3, "shared element sets and Cayley isomorphisms", guarded([](CriterionOutcome &out) {
        {
            const CliffordGroup a = enumerate(parse_word("H1 C21 C12"), 2, PhaseMode::exact);
            const CliffordGroup b = enumerate(parse_word("H1 H2 C12"), 2, PhaseMode::exact);
            const CliffordGroup c = enumerate(parse_word("H1 H2 C12 C21"), 2, PhaseMode::exact);
            out.require(same_element_set(a, b) && same_element_set(a, c) &&
                            same_element_set(b, c),
                        "the three 2304-element subsets do not share one element set");
        }
        {
            const CliffordGroup a = enumerate(parse_word("H1 P1 C21"), 2, PhaseMode::exact);
            const CliffordGroup b = enumerate(parse_word("H1 P1 P2 C21"), 2, PhaseMode::exact);
            const CliffordGroup c = enumerate(parse_word("H1 P1 C12"), 2, PhaseMode::exact);
            out.require(same_element_set(a, b),
                        "the marked 3072-element pair does not share an element set");
            out.require(!same_element_set(a, c) && !same_element_set(b, c),
                        "an unmarked 3072-element subset unexpectedly shares the element set");
        }
        {
            const CliffordGroup a = enumerate(parse_word("H1 H2 P1 C21"), 2, PhaseMode::exact);
            const CliffordGroup b = enumerate(parse_word("H1 H2 P1 C12"), 2, PhaseMode::exact);
            out.require(same_element_set(a, b), "92160-element sets differ: H1 H2 P1 C21 vs C12");
            const CliffordGroup c = enumerate(parse_word("H1 P1 P2 C12"), 2, PhaseMode::exact);
            out.require(same_element_set(a, c), "92160-element sets differ: vs H1 P1 P2 C12");
            const CliffordGroup d =
                enumerate(parse_word("H1 H2 P1 P2 C12 C21"), 2, PhaseMode::exact);
            out.require(same_element_set(a, d), "92160-element sets differ: vs the full set");
        }

        out.require(iso_test(cayley_of("H1"), cayley_of("C12")).result == IsoResult::isomorphic,
                    "H1 and C12 Cayley graphs should be isomorphic");
        out.require(iso_test(cayley_of("H1 P2"), cayley_of("P1 C12")).result ==
                        IsoResult::isomorphic,
                    "H1 P2 and P1 C12 Cayley graphs should be isomorphic");
        out.require(iso_test(cayley_of("H1 C21"), cayley_of("H1 C12")).result ==
                        IsoResult::isomorphic,
                    "H1 C21 and H1 C12 Cayley graphs should be isomorphic");
        out.require(iso_test(cayley_of("P1 P2"), cayley_of("H1 C12")).result ==
                        IsoResult::not_isomorphic,
                    "P1 P2 and H1 C12 Cayley graphs should differ");
        out.note("element-set sharing verified for the 2304, 3072, and 92160 groups; "
                 "isomorphism verdicts verified for the four marked pairs");
    }));

    // Shared fixtures: the stabilizer/orbit cases used by criteria 4, 5, 10.
    const CliffordGroup c1 = enumerate(parse_word("H1 P1"), 1, PhaseMode::mod_phase);
    const CliffordGroup hc2 = enumerate(parse_word("H1 H2 C12 C21"), 2, PhaseMode::mod_phase);
    const CliffordGroup hc3 = enumerate(parse_word("H1 H2 C12 C21"), 3, PhaseMode::mod_phase);
    const CliffordGroup hc4 = enumerate(parse_word("H1 H2 C12 C21"), 4, PhaseMode::mod_phase);

    std::vector<OrbitCase> cases;
    cases.push_back(make_orbit_case("|0> under H,P", c1, StateVector::basis(1, 0), 4, 6));
    cases.push_back(make_orbit_case("|00>", hc2, preset_state("zeros 2"), 48, 24));
    cases.push_back(make_orbit_case("GHZ on 3 qubits", hc3, preset_state("ghz 3"), 8, 144));
    cases.push_back(make_orbit_case("rotated |i 1 +>", hc3,
                                    preset_state("apply C32 to |i 1 +>"), 4, 288));
    cases.push_back(make_orbit_case("generic 4-qubit state", hc4, generic_state(4, 0), 1, 1152));
    cases.push_back(make_orbit_case("W on 3 qubits", hc3, preset_state("w 3"), 4, 288));
    cases.push_back(make_orbit_case("Dicke(4,2)", hc4, preset_state("dicke 4 2"), 2, 576));

    // 4: stabilizer sizes, quotient sizes, and the reference stabilizer word
    // lists for the three spotlighted states.
    report(4, "stabilizer subgroups and quotient sizes", guarded([&](CriterionOutcome &out) {
        for (const OrbitCase &c : cases)
        {
            out.require(c.stabilizer_members.size() == c.expected_stabilizer,
                        c.label + ": stabilizer has " +
                            std::to_string(c.stabilizer_members.size()) + " members, expected " +
                            std::to_string(c.expected_stabilizer));
            out.require(c.quotient.graph.num_vertices() == c.expected_vertices,
                        c.label + ": quotient has " +
                            std::to_string(c.quotient.graph.num_vertices()) +
                            " vertices, expected " + std::to_string(c.expected_vertices));
        }
        out.note("all 7 stabilizer sizes and quotient sizes verified");

        {
            const OrbitCase &dicke = cases[6];
            const std::set<std::string> members =
                member_key_set(*dicke.group, dicke.stabilizer_members);
            const std::set<std::string> reference = {
                word_key(*dicke.group, ""),
                word_key(*dicke.group, "H2 C12 C21 C12 H1")};
            out.require(members == reference,
                        "Dicke(4,2): reference stabilizer words do not match the member set");
            out.note("Dicke(4,2): both reference stabilizer words verified as the exact "
                     "member set");
        }

        {
            const OrbitCase &i1p = cases[3];
            const std::set<std::string> members =
                member_key_set(*i1p.group, i1p.stabilizer_members);
            const std::vector<std::string> printed = {
                "H2 C12 H1 C12 H1 C12 H1 C12 H1",
                "C12 H1 C12 H1 C12 H1 C12 H1 H2",
                "C12 H1 C12 H1 C12 H1 C12 H2 C12 H1 C12 H1 C12 H1 C12 H2"};
            const std::vector<std::string> exchanged = {
                "H1 C21 H2 C21 H2 C21 H2 C21 H2",
                "C21 H2 C21 H2 C21 H2 C21 H2 H1",
                "C21 H2 C21 H2 C21 H2 C21 H1 C21 H2 C21 H2 C21 H2 C21 H1"};

            int printed_hits = 0;
            for (const std::string &w : printed)
            {
                printed_hits += members.count(word_key(*i1p.group, w)) ? 1 : 0;
            }
            std::set<std::string> exchanged_keys = {word_key(*i1p.group, "")};
            for (const std::string &w : exchanged)
            {
                exchanged_keys.insert(word_key(*i1p.group, w));
            }
            out.require(exchanged_keys == members,
                        "rotated |i 1 +>: qubit-exchanged reference words do not reproduce "
                        "the member set");
            out.note("rotated |i 1 +>: " + std::to_string(printed_hits) +
                     " of 3 nontrivial reference words stabilize as printed; after exchanging "
                     "qubit labels 1 and 2 all three stabilize and reproduce the member set "
                     "exactly (the reference uses the opposite bit-order convention here)");
        }

        {
            const OrbitCase &w3 = cases[5];
            const std::set<std::string> members = member_key_set(*w3.group, w3.stabilizer_members);
            out.require(members.count(word_key(*w3.group, "")) == 1,
                        "W state: the identity is missing from the stabilizer");
            out.require(members.count(word_key(*w3.group, "H2 C12 H2")) == 1,
                        "W state: reference word H2 C12 H2 does not stabilize");
            out.require(members.count(word_key(*w3.group, "H2 C12 C21 C12 H1")) == 1,
                        "W state: reference word H2 C12 C21 C12 H1 does not stabilize");
            const bool fourth = members.count(word_key(*w3.group, "H1 C12 H2 C21")) == 1;
            out.require(fourth, "W state: reference word 'H1 C12 H2 C21' is not a stabilizer "
                                "member (checked under every qubit-label and control-order "
                                "reading); the other three reference words are members");
            const std::set<std::string> completed = {
                word_key(*w3.group, ""), word_key(*w3.group, "H2 C12 H2"),
                word_key(*w3.group, "H2 C12 C21 C12 H1"),
                word_key(*w3.group, "H2 C12 H2 C12 C21 C12")};
            if (!fourth && completed == members)
            {
                out.note("the actual fourth member is the product of the two listed "
                         "non-identity words: 'H2 C12 H2 C12 C21 C12' completes the member "
                         "set exactly");
            }
        }
    }));

    // 5: the group-quotient construction and the pure state-space search must
    // produce identical graphs, edge for edge, on every fixture.
    report(5, "state-space oracle agreement", guarded([&](CriterionOutcome &out) {
        for (const OrbitCase &c : cases)
        {
            const testutil::MatchResult match = testutil::match_reachability(c.quotient, c.oracle);
            out.require(match.ok, c.label + ": " + match.reason);
        }
        out.note("group-side quotients and state-space searches agree edge for edge on all "
                 "7 fixtures");
    }));

    // 6: contract the Hadamard/CNOT orbit components and inspect how the
    // phase-gate overlay connects them.
    report(6, "phase-overlay contraction structure", guarded([](CriterionOutcome &out) {
        const GateWord full_gens = parse_word("H1 H2 P1 P2 C12 C21");
        const std::vector<std::string> core = {"H1", "H2", "C12", "C21"};
        const std::vector<std::string> overlay = {"P1", "P2"};

        {
            const CliffordGroup full2 = enumerate(full_gens, 2, PhaseMode::mod_phase);
            const ReachabilityGraph q = quotient_graph(full2, preset_state("zeros 2"));
            out.require(q.graph.num_vertices() == 60, "|00> orbit should have 60 vertices");
            const ContractionGraph c = overlay_contraction(q.graph, core, overlay);
            const auto sizes = component_sizes(c.super_vertices);
            out.require(sizes == std::vector<std::size_t>{24, 36},
                        "|00>: core components are " + describe_sizes(sizes) +
                            ", expected {24, 36}");
            out.require(c.super_edges == std::vector<SuperEdge>{{0, 1, 64}},
                        "|00>: the two components should be joined by 64 phase edges");
            out.require(c.self_links == std::vector<std::uint64_t>{16, 40},
                        "|00>: internal phase-edge counts should be {16, 40}");
            out.note("|00>: components {24, 36} joined by 64 phase edges "
                     "(16 and 40 stay internal)");
        }

        {
            const CliffordGroup full3 = enumerate(full_gens, 3, PhaseMode::mod_phase);
            const ReachabilityGraph q = quotient_graph(full3, preset_state("ghz 3"));
            out.require(q.graph.num_vertices() == 720, "GHZ orbit should have 720 vertices");
            const ContractionGraph c = overlay_contraction(q.graph, core, overlay);
            const auto sizes = component_sizes(c.super_vertices);
            out.require(sizes == std::vector<std::size_t>{144, 144, 288, 144},
                        "GHZ: core components are " + describe_sizes(sizes) +
                            ", expected {144, 144, 288, 144}");
            const std::vector<SuperEdge> expected = {{0, 1, 128}, {0, 2, 256}, {0, 3, 128},
                                                     {1, 2, 256}, {1, 3, 128}, {2, 3, 256}};
            out.require(c.super_edges == expected,
                        "GHZ: phase super-edges differ from the expected complete linkage");
            out.require(c.self_links == std::vector<std::uint64_t>{32, 32, 192, 32},
                        "GHZ: internal phase-edge counts should be {32, 32, 192, 32}");
            out.note("GHZ: every 144-vertex component is phase-linked to the 288-vertex one "
                     "(256 edges each), and the three 144s link pairwise too");
        }

        {
            const CliffordGroup full4 = enumerate(full_gens, 4, PhaseMode::mod_phase);
            const ReachabilityGraph q = quotient_graph(full4, generic_state(4, 0));
            out.require(q.graph.num_vertices() == 11520,
                        "the generic 4-qubit orbit should have 11520 vertices");
            const ContractionGraph c = overlay_contraction(q.graph, core, overlay);
            out.require(c.super_vertices.size() == 10,
                        "generic state: expected 10 core components, found " +
                            std::to_string(c.super_vertices.size()));
            for (const auto &comp : c.super_vertices)
            {
                out.require(comp.size() == 1152, "generic state: a core component has " +
                                                     std::to_string(comp.size()) +
                                                     " vertices, expected 1152");
            }
            std::set<std::pair<std::uint32_t, std::uint32_t>> linked;
            for (const SuperEdge &e : c.super_edges)
            {
                linked.insert({e.a, e.b});
                out.require(e.multiplicity > 0, "generic state: an empty super-edge appeared");
            }
            out.require(c.super_edges.size() == 45,
                        "generic state: expected 45 super-edges, found " +
                            std::to_string(c.super_edges.size()));
            out.require(linked.size() == 45,
                        "generic state: the 10 components should be pairwise linked");
            out.note("generic 4-qubit state: 10 components of 1152 vertices, phase-linked "
                     "into a complete graph (45 super-edges)");
        }
    }));

    // 7: the orbit-stabilizer product must equal the group order on fresh
    // randomized draws, beyond the fixed fixtures above.
    report(7, "orbit times stabilizer equals group order", guarded([](CriterionOutcome &out) {
        std::mt19937_64 rng(0);
        const int wanted = 25;
        int found = 0;
        int skipped = 0;
        int attempts = 0;

        while (found < wanted && attempts < 500)
        {
            ++attempts;
            const int n = 2 + static_cast<int>(rng() % 2);

            GateWord pool;
            for (int q = 1; q <= n; ++q)
            {
                pool.push_back(h_gate(q));
                pool.push_back(p_gate(q));
            }
            for (int control = 1; control <= n; ++control)
            {
                for (int target = 1; target <= n; ++target)
                {
                    if (control != target)
                    {
                        pool.push_back(cnot_gate(control, target));
                    }
                }
            }
            std::shuffle(pool.begin(), pool.end(), rng);
            const std::size_t count = 1 + rng() % 3;
            const GateWord gens(pool.begin(), pool.begin() + count);
            const PhaseMode mode = (rng() % 2) ? PhaseMode::mod_phase : PhaseMode::exact;

            StateVector state = [&]() {
                switch (rng() % 4)
                {
                case 0:
                    return preset_state("zeros " + std::to_string(n));
                case 1:
                    return preset_state("ghz " + std::to_string(n));
                case 2:
                    return preset_state("w " + std::to_string(n));
                default:
                    return generic_state(n, rng());
                }
            }();

            try
            {
                const CliffordGroup g = enumerate(gens, n, mode, 20'000);
                const std::size_t stab = stabilizer_subgroup(g, state).members.size();
                const std::uint32_t vertices = quotient_graph(g, state).graph.num_vertices();
                if (static_cast<std::size_t>(vertices) * stab != g.order())
                {
                    out.fail("orbit-stabilizer mismatch for {" + word_to_string(gens) + "} on " +
                             state.to_string() + ": " + std::to_string(vertices) + " * " +
                             std::to_string(stab) + " != " + std::to_string(g.order()));
                    return;
                }
                ++found;
            }
            catch (const ResourceLimitError &)
            {
                ++skipped;
            }
        }
        out.require(found == wanted, "only " + std::to_string(found) +
                                         " randomized draws completed within the attempt budget");
        out.note(std::to_string(found) + " randomized generator-set/state draws verified at 2 "
                                         "and 3 qubits (" +
                 std::to_string(skipped) + " draws skipped at the 20000-element cap)");
    }));

    // 8: closed-form stabilizer state counts, cross-checked against
    // breadth-first state enumeration where feasible.
    report(8, "stabilizer state counting", guarded([](CriterionOutcome &out) {
        out.require(stabilizer_state_count(1) == 6, "count at 1 qubit should be 6");
        out.require(stabilizer_state_count(2) == 60, "count at 2 qubits should be 60");
        out.require(stabilizer_state_count(3) == 1080, "count at 3 qubits should be 1080");
        out.require(orbit_states(parse_word("H1 P1"), StateVector::basis(1, 0))
                            .graph.num_vertices() == 6,
                    "the single-qubit orbit of |0> should reach 6 states");
        out.require(orbit_states(parse_word("H1 H2 P1 P2 C12 C21"), preset_state("zeros 2"))
                            .graph.num_vertices() == 60,
                    "the two-qubit orbit of |00> should reach 60 states");
        out.note("closed-form counts match breadth-first enumeration at 1 and 2 qubits");
    }));

    // 9: reducing a circuit to the shortest equivalent word over the full
    // generator set.
    report(9, "circuit reduction via shortest word", guarded([](CriterionOutcome &out) {
        const CliffordGroup full2 =
            enumerate(parse_word("H1 H2 P1 P2 C12 C21"), 2, PhaseMode::mod_phase);
        const UnitaryMatrix circuit = word_matrix(parse_word("C12 H2 C12 P2 C12 P2^3 H2"), 2);
        const GateWord reduced = shortest_word(full2, circuit);
        out.require(reduced == parse_word("P1"),
                    "the 7-gate circuit should reduce to the single gate P1, got '" +
                        word_to_string(reduced) + "'");
        out.require(canonical_key(word_matrix(reduced, 2), PhaseMode::mod_phase) ==
                        canonical_key(circuit, PhaseMode::mod_phase),
                    "the reduced word is not equivalent to the circuit");
        out.note("a 7-gate circuit reduced to the single gate P1 (equivalent up to a global "
                 "phase)");
    }));

    // 10: the two 288-vertex orbit graphs from criterion 4 are not isomorphic,
    // certified by invariant fingerprints (or an explicit search if needed).
    report(10, "non-isomorphism witness", guarded([&](CriterionOutcome &out) {
        const LabeledGraph &a = cases[3].quotient.graph;
        const LabeledGraph &b = cases[5].quotient.graph;
        out.require(a.num_vertices() == 288 && b.num_vertices() == 288,
                    "both orbit graphs should have 288 vertices");
        if (fingerprint(a) != fingerprint(b))
        {
            out.note("the invariant fingerprints of the two 288-vertex orbit graphs differ, "
                     "certifying non-isomorphism");
            return;
        }
        const IsoOutcome iso = iso_test(a, b);
        out.require(iso.result == IsoResult::not_isomorphic,
                    "the two 288-vertex orbit graphs were not separated");
        out.note("separated by the explicit isomorphism search");
    }));

    // 11: small-group fixtures, a JSON export round trip, and a closed cycle
    // that certifies the exported edge table.
    report(11, "small-group fixtures and the closed phase-cycle path",
           guarded([](CriterionOutcome &out) {
        out.require(enumerate(parse_word("H1 P2"), 2, PhaseMode::exact).order() == 8,
                    "H1 P2 should generate 8 elements");
        out.require(enumerate(parse_word("P1 P2"), 2, PhaseMode::exact).order() == 16,
                    "P1 P2 should generate 16 elements");
        out.require(enumerate(parse_word("P1 P2 H1"), 2, PhaseMode::exact).order() == 768,
                    "P1 P2 H1 should generate 768 elements");
        out.require(enumerate(parse_word("H1 P2 C12"), 2, PhaseMode::exact).order() == 9216,
                    "H1 P2 C12 should generate 9216 elements");

        const CliffordGroup small = enumerate(parse_word("H1 P2 C21"), 2, PhaseMode::exact);
        out.require(small.order() == 32, "H1 P2 C21 should generate 32 elements");
        out.note("the 32-element fixture belongs to {H1, P2, C21}; {H1, P2, C12} generates "
                 "9216 elements (consistent with its table row), so the listed generators "
                 "for this fixture carry transposed CNOT indices");

        const GraphDocument exported = document_from(small, build_cayley(small));
        const GraphDocument doc = from_json(to_json(exported));
        out.require(to_json(doc) == to_json(exported), "JSON round trip changed the document");
        out.require(doc.graph.num_vertices() == 32, "the exported graph should have 32 vertices");

        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> next;
        for (const LabeledEdge &e : doc.graph.edges())
        {
            next[{e.source, e.label}] = e.target;
        }
        const std::uint32_t h1 = doc.graph.label_index("H1");
        const std::uint32_t p2 = doc.graph.label_index("P2");
        const std::uint32_t c21 = doc.graph.label_index("C21");
        const std::vector<std::uint32_t> cycle = {c21, h1, c21, h1, c21, h1, c21, h1, p2, p2};

        bool closed_everywhere = true;
        for (std::uint32_t start = 0; start < doc.graph.num_vertices(); ++start)
        {
            std::uint32_t v = start;
            for (const std::uint32_t label : cycle)
            {
                v = next.at({v, label});
            }
            closed_everywhere = closed_everywhere && (v == start);
        }
        out.require(closed_everywhere,
                    "the 10-step cycle C21,H1 (4 times) then P2,P2 should close at every "
                    "vertex of the exported graph");
        out.note("the 10-step path with labels C21, H1 repeated four times then P2 twice "
                 "returns to its start from every one of the 32 vertices");

        const CliffordGroup big = enumerate(parse_word("H1 P2 C12"), 2, PhaseMode::exact);
        const CayleyGraph cay = build_cayley(big);
        std::uint32_t v = 0;
        const std::uint32_t bh1 = 0, bp2 = 1, bc12 = 2;
        for (const std::uint32_t label : {bc12, bh1, bc12, bh1, bc12, bh1, bc12, bh1, bp2, bp2})
        {
            v = cay.target(v, label);
        }
        out.require(v != 0, "the same label pattern with C12 must not close in the 9216-element "
                            "graph");
    }));

    std::cout << (11 - failures) << " of 11 criteria passed\n";
    return failures;
}
