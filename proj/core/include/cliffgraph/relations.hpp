#pragma once

#include <string>
#include <vector>

#include "cliffgraph/gates.hpp"

namespace cliffgraph
{

    /**
     * One defining or derived identity of the two-qubit Clifford generators,
     * stored with abstract qubit slots: the letters 'i' and 'j' inside the
     * lhs/rhs templates stand for two distinct qubit indices chosen at
     * verification time. The identity asserted is
     *
     *     word(lhs) = omega^phase_power * word(rhs)
     *
     * with omega the primitive eighth root of unity and an empty template
     * denoting the identity word.
     */
    struct Relation
    {
        std::string name;
        std::string lhs;
        std::string rhs;
        int phase_power;
        std::vector<std::string> cited_by; // generator sets whose presentations use this identity
    };

    /** The full identity catalog, fixed order, built once. */
    const std::vector<Relation> &relation_catalog();

    /** Substitutes concrete indices into a template side and parses it. */
    GateWord instantiate_template(const std::string &side, int i, int j);

    /** Exact matrix check of one relation at qubits (i, j) inside an n-qubit register. */
    bool verify_relation(const Relation &r, int i, int j, int n);

    struct RelationCheck
    {
        std::string name;
        int i;
        int j;
        bool passed;
    };

    struct RelationReport
    {
        std::vector<RelationCheck> checks;
        bool all_passed;
    };

    /** Runs every catalog relation at (i,j) = (1,2) and (2,1) inside n qubits. */
    RelationReport verify_all(int n);

} // namespace cliffgraph
