#pragma once

#include <string>
#include <vector>

namespace cliffgraph
{

    /**
     * Reference row for one generator subset of the two-qubit Clifford group:
     * the generating set, its expected order, Cayley diameter, phase-collapse
     * factor (exact order over phase-quotient order, 0 when the collapse is
     * trivial), and phase-quotient diameter (0 when the factor column is empty).
     */
    struct SubgroupRowReference
    {
        std::string generators;
        unsigned long expected_order;
        int expected_diameter;
        int expected_factor;
        int expected_mod_diameter;
        bool shares_elements;   // marked as having the same element set as another row
        bool isomorphic_cayley; // marked as having a Cayley graph isomorphic to another row's
    };

    /** The fixed list of 29 generator subsets, in reporting order. */
    const std::vector<SubgroupRowReference> &reference_subgroup_rows();

    /** One computed row: factor 0 means no phase collapse (column absent). */
    struct SubgroupTableEntry
    {
        std::string generators;
        unsigned long order;
        int diameter;
        int factor;
        int mod_diameter;
    };

    /** Enumerates every reference subset at n = 2 and measures the columns. */
    std::vector<SubgroupTableEntry> subgroup_table(int threads = 0);

} // namespace cliffgraph
