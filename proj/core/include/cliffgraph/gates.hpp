#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/matrix.hpp"
#include "cliffgraph/state.hpp"

namespace cliffgraph
{

    enum class GateKind : std::uint8_t
    {
        Hadamard,
        Phase,
        Cnot
    };

    /**
     * Gate: one generator instance. Qubit indices are 1-based; for CNOT the
     * first index is the control and the second the target.
     */
    struct Gate
    {
        GateKind kind;
        int qubit;  // acted-on qubit for H/P, control for CNOT
        int target; // CNOT target; 0 otherwise

        /** "H1", "P2", "C12" (comma form "C10,11" once an index needs two digits). */
        std::string name() const;

        bool operator==(const Gate &other) const noexcept
        {
            return kind == other.kind && qubit == other.qubit && target == other.target;
        }
        bool operator!=(const Gate &other) const noexcept { return !(*this == other); }
        bool operator<(const Gate &other) const noexcept
        {
            if (kind != other.kind)
            {
                return kind < other.kind;
            }
            if (qubit != other.qubit)
            {
                return qubit < other.qubit;
            }
            return target < other.target;
        }
    };

    Gate h_gate(int qubit);
    Gate p_gate(int qubit);
    Gate cnot_gate(int control, int target);

    /** A word g1 g2 ... gk denotes the product M(g1)*M(g2)*...*M(gk); the
     *  rightmost gate acts first on states. */
    using GateWord = std::vector<Gate>;

    /**
     * Parse whitespace-separated gate tokens: "H3", "P1", "C12" or "C1,2"
     * (control first), with suffix "^k" for positive repetition and "'" or
     * "^-1" for inverse (expanded as H'->H, P'->PPP, C'->C). Throws
     * ParseError carrying the offending token's offset.
     */
    GateWord parse_word(std::string_view text);

    std::string word_to_string(const GateWord &word);

    /** Dense matrix of a single gate embedded in n qubits (qubit 1 = MSB). */
    UnitaryMatrix gate_matrix(const Gate &g, int n);

    /** Product of the word's gate matrices in printed order. */
    UnitaryMatrix word_matrix(const GateWord &word, int n);

    /** g * m without materializing gate_matrix(g); rows only, O(dim^2). */
    UnitaryMatrix gate_left_mul(const Gate &g, const UnitaryMatrix &m, int n);

    /** g applied to a state, O(dim). */
    StateVector apply_gate(const Gate &g, const StateVector &v);

    /** Word applied to a state (rightmost gate first). */
    StateVector apply_word(const GateWord &word, const StateVector &v);

} // namespace cliffgraph
