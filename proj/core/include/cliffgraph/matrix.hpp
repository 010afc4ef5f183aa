#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliffgraph/scalar.hpp"

namespace cliffgraph
{

    /**
     * UnitaryMatrix: dense square matrix over Cyclo8Scalar, row-major.
     *
     * Sizes stay tiny (2^n x 2^n with n <= 10, in practice n <= 4), so a
     * dense exact representation is used throughout. Construction does not
     * enforce unitarity; the group engine only ever builds products of
     * unitary generators.
     */
    class UnitaryMatrix
    {
    private:
        std::size_t _dim;
        std::vector<Cyclo8Scalar> _entries;

    public:
        explicit UnitaryMatrix(std::size_t dim)
            : _dim(dim), _entries(dim * dim)
        {
        }

        static UnitaryMatrix identity(std::size_t dim);

        std::size_t dim() const noexcept { return _dim; }

        const Cyclo8Scalar &at(std::size_t row, std::size_t col) const
        {
            return _entries[row * _dim + col];
        }
        Cyclo8Scalar &at(std::size_t row, std::size_t col)
        {
            return _entries[row * _dim + col];
        }

        /** Exact matrix product; throws std::domain_error on dimension mismatch. */
        UnitaryMatrix operator*(const UnitaryMatrix &other) const;

        /** Entrywise scalar multiple. */
        UnitaryMatrix scaled(const Cyclo8Scalar &factor) const;

        /** Entrywise multiple by w^t. */
        UnitaryMatrix scaled_omega_pow(int t) const;

        /** Conjugate transpose; the group inverse for unitary inputs. */
        UnitaryMatrix dagger() const;

        bool operator==(const UnitaryMatrix &other) const
        {
            return _dim == other._dim && _entries == other._entries;
        }
        bool operator!=(const UnitaryMatrix &other) const { return !(*this == other); }

        /** Fixed byte serialization of entries in row-major order. */
        std::string encode() const;
        static UnitaryMatrix decode(std::string_view bytes);
    };

    /**
     * Result of canonicalizing a matrix up to global powers of w: the
     * representative equals w^omega_power times the input.
     */
    struct MatrixPhaseForm
    {
        UnitaryMatrix representative;
        int omega_power;
    };

    /**
     * Among the 8 multiples w^t * M, return the one with lexicographically
     * least encoding, together with the t used. Two matrices are equal up to
     * global phase exactly when their canonical forms coincide.
     */
    MatrixPhaseForm canonical_phase_form(const UnitaryMatrix &m);

    /** Encoding bytes of the canonical phase representative. */
    std::string canonical_phase_key(const UnitaryMatrix &m);

} // namespace cliffgraph
