#include "cliffgraph/table.hpp"

#include "cliffgraph/group.hpp"

namespace cliffgraph
{

    const std::vector<SubgroupRowReference> &reference_subgroup_rows()
    {
        static const std::vector<SubgroupRowReference> rows = {
            {"H1", 2, 1, 0, 0, false, true},
            {"C12", 2, 1, 0, 0, false, true},
            {"P1", 4, 3, 0, 0, false, false},
            {"H1 H2", 4, 2, 0, 0, false, false},
            {"C12 C21", 6, 3, 0, 0, false, false},
            {"H1 P2", 8, 4, 0, 0, false, true},
            {"P1 C12", 8, 4, 0, 0, false, true},
            {"P1 P2", 16, 6, 0, 0, false, false},
            {"H1 C21", 16, 8, 0, 0, false, true},
            {"H1 C12", 16, 8, 0, 0, false, true},
            {"H1 P2 C21", 32, 6, 0, 0, false, false},
            {"P1 C21", 32, 8, 0, 0, false, false},
            {"P1 P2 C21", 64, 7, 0, 0, false, false},
            {"P1 C21 C12", 192, 11, 0, 0, false, false},
            {"H1 P1", 192, 16, 8, 6, false, false},
            {"H1 H2 P1", 384, 17, 8, 7, false, false},
            {"P1 P2 H1", 768, 19, 8, 9, false, false},
            {"H1 C21 C12", 2304, 26, 2, 15, true, false},
            {"H1 H2 C12", 2304, 27, 2, 17, true, false},
            {"H1 H2 C12 C21", 2304, 25, 2, 15, true, false},
            {"H1 P1 C21", 3072, 19, 8, 9, true, false},
            {"H1 P1 C12", 3072, 19, 8, 11, false, false},
            {"H1 P1 P2 C21", 3072, 19, 8, 9, true, false},
            {"H1 H2 P1 P2", 4608, 17, 8, 12, false, false},
            {"H1 P2 C12", 9216, 24, 8, 13, false, false},
            {"H1 H2 P1 C21", 92160, 21, 8, 13, true, false},
            {"H1 H2 P1 C12", 92160, 21, 8, 16, true, false},
            {"H1 P1 P2 C12", 92160, 21, 8, 14, true, false},
            {"H1 H2 P1 P2 C12 C21", 92160, 19, 8, 11, true, false},
        };
        return rows;
    }

    std::vector<SubgroupTableEntry> subgroup_table(int threads)
    {
        std::vector<SubgroupTableEntry> table;
        table.reserve(reference_subgroup_rows().size());
        for (const SubgroupRowReference &row : reference_subgroup_rows())
        {
            const GateWord gens = parse_word(row.generators);
            const CliffordGroup exact = enumerate(gens, 2, PhaseMode::exact);

            SubgroupTableEntry entry;
            entry.generators = row.generators;
            entry.order = exact.order();
            entry.diameter = diameter(build_cayley(exact), threads);

            const CliffordGroup quotient = enumerate(gens, 2, PhaseMode::mod_phase);
            const auto factor = exact.order() / quotient.order();
            if (factor > 1)
            {
                entry.factor = static_cast<int>(factor);
                entry.mod_diameter = diameter(build_cayley(quotient), threads);
            }
            else
            {
                entry.factor = 0;
                entry.mod_diameter = 0;
            }
            table.push_back(std::move(entry));
        }
        return table;
    }

} // namespace cliffgraph
