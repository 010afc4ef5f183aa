#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cliffgraph
{

    /**
     * Cyclo8Scalar: exact elements of the ring Z[w, 1/sqrt2], w = exp(i*pi/4).
     *
     * A scalar is stored as (a0 + a1*w + a2*w^2 + a3*w^3) / sqrt2^k with
     * w^4 = -1 and k >= 0. The representation is kept canonical: while k > 0
     * and the numerator is divisible by sqrt2, the denominator exponent is
     * lowered, and the zero scalar always has k = 0. Two scalars are equal
     * exactly when their canonical fields coincide.
     *
     * All coefficient arithmetic is overflow-checked; any overflow throws
     * std::overflow_error rather than wrapping.
     */
    class Cyclo8Scalar
    {
    private:
        std::array<std::int64_t, 4> _c;
        std::int32_t _k;

        void canonicalize();

    public:
        static constexpr std::size_t ENCODED_SIZE = 36;

        Cyclo8Scalar() noexcept : _c{0, 0, 0, 0}, _k(0) {}
        Cyclo8Scalar(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                     std::int32_t k = 0);

        // Properties
        std::int64_t coeff(std::size_t i) const { return _c.at(i); }
        std::int32_t sqrt2_exponent() const noexcept { return _k; }

        // Factory methods
        static Cyclo8Scalar from_int(std::int64_t x) { return Cyclo8Scalar(x, 0, 0, 0); }

        /** w^t for any integer t (reduced mod 8). */
        static Cyclo8Scalar omega_pow(int t);

        /** 1 / sqrt2^k. */
        static Cyclo8Scalar inv_sqrt2_pow(std::int32_t k) { return Cyclo8Scalar(1, 0, 0, 0, k); }

        bool is_zero() const noexcept
        {
            return _c[0] == 0 && _c[1] == 0 && _c[2] == 0 && _c[3] == 0;
        }

        bool is_one() const noexcept
        {
            return _c[0] == 1 && _c[1] == 0 && _c[2] == 0 && _c[3] == 0 && _k == 0;
        }

        // Ring operations
        Cyclo8Scalar operator+(const Cyclo8Scalar &other) const;
        Cyclo8Scalar operator-(const Cyclo8Scalar &other) const;
        Cyclo8Scalar operator*(const Cyclo8Scalar &other) const;
        Cyclo8Scalar operator-() const;

        Cyclo8Scalar &operator+=(const Cyclo8Scalar &other) { return *this = *this + other; }
        Cyclo8Scalar &operator-=(const Cyclo8Scalar &other) { return *this = *this - other; }
        Cyclo8Scalar &operator*=(const Cyclo8Scalar &other) { return *this = *this * other; }

        /** Complex conjugate: w -> w^-1. */
        Cyclo8Scalar conj() const;

        /** Multiply by w^t without a full ring product. */
        Cyclo8Scalar mul_omega_pow(int t) const;

        bool operator==(const Cyclo8Scalar &other) const noexcept
        {
            return _c == other._c && _k == other._k;
        }
        bool operator!=(const Cyclo8Scalar &other) const noexcept { return !(*this == other); }

        /** Numeric evaluation used only as a floating-point cross-check. */
        std::complex<double> to_complex() const;

        /** Rendering "(a0,a1,a2,a3)" with "/s2^k" appended when k > 0. */
        std::string to_string() const;

        /** Inverse of to_string; throws std::invalid_argument on malformed text. */
        static Cyclo8Scalar parse(std::string_view text);

        /**
         * Append a fixed 36-byte serialization (4-byte exponent, then four
         * 8-byte coefficients). Byte-wise lexicographic comparison of
         * encodings orders scalars deterministically.
         */
        void encode_to(std::string &out) const;
        static Cyclo8Scalar decode(const unsigned char *bytes);

        friend std::ostream &operator<<(std::ostream &os, const Cyclo8Scalar &s);
    };

} // namespace cliffgraph
