#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffgraph/matrix.hpp"
#include "cliffgraph/scalar.hpp"

namespace cliffgraph
{

    /**
     * StateVector: exact, unnormalized amplitudes of an n-qubit state.
     *
     * Basis ordering: qubit 1 is the most significant bit of the amplitude
     * index, i.e. |a1 a2 ... an> sits at index a1*2^(n-1) + ... + an.
     * Amplitudes are kept unnormalized so that every stored value lies in
     * Z[w, 1/sqrt2]; unitary action preserves this convention exactly.
     */
    class StateVector
    {
    private:
        int _n;
        std::vector<Cyclo8Scalar> _amps;

    public:
        explicit StateVector(int n);

        static StateVector basis(int n, std::size_t index);

        int qubits() const noexcept { return _n; }
        std::size_t dim() const noexcept { return _amps.size(); }

        const Cyclo8Scalar &amp(std::size_t index) const { return _amps.at(index); }
        Cyclo8Scalar &amp(std::size_t index) { return _amps.at(index); }

        bool is_zero() const;

        /** Entrywise multiple by w^t. */
        StateVector scaled_omega_pow(int t) const;

        bool operator==(const StateVector &other) const
        {
            return _n == other._n && _amps == other._amps;
        }
        bool operator!=(const StateVector &other) const { return !(*this == other); }

        /** Fixed byte serialization of amplitudes in index order. */
        std::string encode() const;

        /**
         * Rendering as a sum of kets, e.g. "(1,0,0,0)|00> + (0,0,1,0)|11>";
         * the zero vector renders as "0".
         */
        std::string to_string() const;
    };

    /** Exact matrix-vector product; throws std::domain_error on size mismatch. */
    StateVector apply(const UnitaryMatrix &m, const StateVector &v);

    /**
     * Apply a 2^l-dimensional operator to the leading l qubits of v (the
     * operator acts as m tensor identity). Requires l <= v.qubits().
     */
    StateVector apply_to_leading_qubits(const UnitaryMatrix &m, const StateVector &v);

    struct StatePhaseForm
    {
        StateVector representative;
        int omega_power;
    };

    /**
     * Among the 8 multiples w^t * v, return the one with lexicographically
     * least encoding, plus the t used. Rays that differ by a global power of
     * w share a canonical form.
     */
    StatePhaseForm canonical_phase_form(const StateVector &v);

    /** Encoding bytes of the canonical phase representative. */
    std::string canonical_phase_key(const StateVector &v);

} // namespace cliffgraph
