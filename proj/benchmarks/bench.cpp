#include <benchmark/benchmark.h>

#include "cliffgraph/gates.hpp"
#include "cliffgraph/group.hpp"
#include "cliffgraph/matrix.hpp"
#include "cliffgraph/quotient.hpp"
#include "cliffgraph/scalar.hpp"
#include "cliffgraph/states.hpp"

using namespace cliffgraph;

namespace
{

    void scalar_multiply(benchmark::State &state)
    {
        const Cyclo8Scalar a(3, -2, 1, 4, 5);
        const Cyclo8Scalar b(-1, 7, 0, 2, 3);
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(a * b);
        }
    }
    BENCHMARK(scalar_multiply);

    void word_product(benchmark::State &state)
    {
        const GateWord word =
            parse_word("H1 C12 P2 H3 C23 P1 H2 C31 P3 H1 C13 P2 H3 C21 P1 H2 C32 P3 H1 C12");
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(word_matrix(word, 3));
        }
    }
    BENCHMARK(word_product);

    void phase_key(benchmark::State &state)
    {
        const UnitaryMatrix m = word_matrix(parse_word("H1 C12 P2 H2 C21"), 2);
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(canonical_phase_key(m));
        }
    }
    BENCHMARK(phase_key);

    void enumerate_2304(benchmark::State &state)
    {
        const GateWord gens = parse_word("H1 C21 C12");
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(enumerate(gens, 2, PhaseMode::exact).order());
        }
    }
    BENCHMARK(enumerate_2304)->Unit(benchmark::kMillisecond);

    void diameter_2304(benchmark::State &state)
    {
        const CliffordGroup g = enumerate(parse_word("H1 C21 C12"), 2, PhaseMode::exact);
        const CayleyGraph c = build_cayley(g);
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(diameter(c, 1));
        }
    }
    BENCHMARK(diameter_2304)->Unit(benchmark::kMillisecond);

    void quotient_00(benchmark::State &state)
    {
        const CliffordGroup g =
            enumerate(parse_word("H1 H2 C12 C21"), 2, PhaseMode::mod_phase);
        const StateVector v = preset_state("zeros 2");
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(quotient_graph(g, v).graph.num_vertices());
        }
    }
    BENCHMARK(quotient_00)->Unit(benchmark::kMillisecond);

    void orbit_00(benchmark::State &state)
    {
        const GateWord gens = parse_word("H1 H2 P1 P2 C12 C21");
        const StateVector v = preset_state("zeros 2");
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(orbit_states(gens, v).graph.num_vertices());
        }
    }
    BENCHMARK(orbit_00)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
