#include "cliffgraph/scalar.hpp"

#include <cmath>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliffgraph
{

    namespace
    {

        std::int64_t checked_add(std::int64_t a, std::int64_t b)
        {
            std::int64_t r;
            if (__builtin_add_overflow(a, b, &r))
            {
                throw std::overflow_error("Cyclo8Scalar: coefficient addition overflow");
            }
            return r;
        }

        std::int64_t checked_sub(std::int64_t a, std::int64_t b)
        {
            std::int64_t r;
            if (__builtin_sub_overflow(a, b, &r))
            {
                throw std::overflow_error("Cyclo8Scalar: coefficient subtraction overflow");
            }
            return r;
        }

        std::int64_t checked_mul(std::int64_t a, std::int64_t b)
        {
            std::int64_t r;
            if (__builtin_mul_overflow(a, b, &r))
            {
                throw std::overflow_error("Cyclo8Scalar: coefficient multiplication overflow");
            }
            return r;
        }

        std::int64_t checked_neg(std::int64_t a)
        {
            return checked_sub(0, a);
        }

        /** Numerator of sqrt2 * x, using sqrt2 = w - w^3. */
        std::array<std::int64_t, 4> times_sqrt2(const std::array<std::int64_t, 4> &a)
        {
            return {checked_sub(a[1], a[3]), checked_add(a[0], a[2]),
                    checked_add(a[1], a[3]), checked_sub(a[2], a[0])};
        }

    } // namespace

    Cyclo8Scalar::Cyclo8Scalar(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                               std::int32_t k)
        : _c{a0, a1, a2, a3}, _k(k)
    {
        if (k < 0)
        {
            throw std::domain_error("Cyclo8Scalar: negative sqrt2 exponent");
        }
        canonicalize();
    }

    void Cyclo8Scalar::canonicalize()
    {
        if (is_zero())
        {
            _k = 0;
            return;
        }
        // sqrt2 divides the numerator exactly when the coefficients of
        // sqrt2 * numerator are all even, i.e. a0 = a2 and a1 = a3 mod 2.
        while (_k > 0 && ((_c[0] ^ _c[2]) & 1) == 0 && ((_c[1] ^ _c[3]) & 1) == 0)
        {
            const auto s = times_sqrt2(_c);
            for (std::size_t i = 0; i < 4; ++i)
            {
                _c[i] = s[i] / 2;
            }
            --_k;
        }
    }

    Cyclo8Scalar Cyclo8Scalar::omega_pow(int t)
    {
        t = ((t % 8) + 8) % 8;
        std::array<std::int64_t, 4> c{0, 0, 0, 0};
        c[static_cast<std::size_t>(t % 4)] = (t < 4) ? 1 : -1;
        return Cyclo8Scalar(c[0], c[1], c[2], c[3], 0);
    }

    Cyclo8Scalar Cyclo8Scalar::operator+(const Cyclo8Scalar &other) const
    {
        std::array<std::int64_t, 4> a = _c;
        std::array<std::int64_t, 4> b = other._c;
        std::int32_t k = _k;
        for (; k < other._k; ++k)
        {
            a = times_sqrt2(a);
        }
        for (std::int32_t j = other._k; j < _k; ++j)
        {
            b = times_sqrt2(b);
        }
        Cyclo8Scalar r;
        for (std::size_t i = 0; i < 4; ++i)
        {
            r._c[i] = checked_add(a[i], b[i]);
        }
        r._k = k;
        r.canonicalize();
        return r;
    }

    Cyclo8Scalar Cyclo8Scalar::operator-(const Cyclo8Scalar &other) const
    {
        return *this + (-other);
    }

    Cyclo8Scalar Cyclo8Scalar::operator-() const
    {
        Cyclo8Scalar r = *this;
        for (auto &x : r._c)
        {
            x = checked_neg(x);
        }
        return r;
    }

    Cyclo8Scalar Cyclo8Scalar::operator*(const Cyclo8Scalar &other) const
    {
        const auto &a = _c;
        const auto &b = other._c;
        Cyclo8Scalar r;
        // Polynomial product reduced by w^4 = -1.
        r._c[0] = checked_sub(checked_mul(a[0], b[0]),
                              checked_add(checked_mul(a[1], b[3]),
                                          checked_add(checked_mul(a[2], b[2]),
                                                      checked_mul(a[3], b[1]))));
        r._c[1] = checked_sub(checked_add(checked_mul(a[0], b[1]), checked_mul(a[1], b[0])),
                              checked_add(checked_mul(a[2], b[3]), checked_mul(a[3], b[2])));
        r._c[2] = checked_sub(checked_add(checked_mul(a[0], b[2]),
                                          checked_add(checked_mul(a[1], b[1]),
                                                      checked_mul(a[2], b[0]))),
                              checked_mul(a[3], b[3]));
        r._c[3] = checked_add(checked_add(checked_mul(a[0], b[3]), checked_mul(a[1], b[2])),
                              checked_add(checked_mul(a[2], b[1]), checked_mul(a[3], b[0])));
        r._k = _k + other._k;
        r.canonicalize();
        return r;
    }

    Cyclo8Scalar Cyclo8Scalar::conj() const
    {
        Cyclo8Scalar r;
        r._c = {_c[0], checked_neg(_c[3]), checked_neg(_c[2]), checked_neg(_c[1])};
        r._k = _k;
        return r;
    }

    Cyclo8Scalar Cyclo8Scalar::mul_omega_pow(int t) const
    {
        t = ((t % 8) + 8) % 8;
        Cyclo8Scalar r = *this;
        if (t >= 4)
        {
            r = -r;
            t -= 4;
        }
        for (int step = 0; step < t; ++step)
        {
            r._c = {checked_neg(r._c[3]), r._c[0], r._c[1], r._c[2]};
        }
        return r;
    }

    std::complex<double> Cyclo8Scalar::to_complex() const
    {
        static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const double re = static_cast<double>(_c[0]) +
                          (static_cast<double>(_c[1]) - static_cast<double>(_c[3])) * inv_sqrt2;
        const double im = static_cast<double>(_c[2]) +
                          (static_cast<double>(_c[1]) + static_cast<double>(_c[3])) * inv_sqrt2;
        const double scale = std::pow(2.0, -0.5 * static_cast<double>(_k));
        return {re * scale, im * scale};
    }

    std::string Cyclo8Scalar::to_string() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    std::ostream &operator<<(std::ostream &os, const Cyclo8Scalar &s)
    {
        os << '(' << s._c[0] << ',' << s._c[1] << ',' << s._c[2] << ',' << s._c[3] << ')';
        if (s._k > 0)
        {
            os << "/s2^" << s._k;
        }
        return os;
    }

    namespace
    {

        std::int64_t parse_int(std::string_view text, std::size_t &pos)
        {
            std::int64_t value = 0;
            const auto *begin = text.data() + pos;
            const auto *end = text.data() + text.size();
            const auto result = std::from_chars(begin, end, value);
            if (result.ec != std::errc{})
            {
                throw std::invalid_argument("Cyclo8Scalar::parse: expected integer at offset " +
                                            std::to_string(pos));
            }
            pos += static_cast<std::size_t>(result.ptr - begin);
            return value;
        }

        void expect(std::string_view text, std::size_t &pos, std::string_view token)
        {
            if (text.substr(pos, token.size()) != token)
            {
                throw std::invalid_argument("Cyclo8Scalar::parse: expected '" +
                                            std::string(token) + "' at offset " +
                                            std::to_string(pos));
            }
            pos += token.size();
        }

    } // namespace

    Cyclo8Scalar Cyclo8Scalar::parse(std::string_view text)
    {
        std::size_t pos = 0;
        expect(text, pos, "(");
        std::array<std::int64_t, 4> c{};
        for (std::size_t i = 0; i < 4; ++i)
        {
            c[i] = parse_int(text, pos);
            expect(text, pos, i + 1 < 4 ? "," : ")");
        }
        std::int64_t k = 0;
        if (pos < text.size())
        {
            expect(text, pos, "/s2^");
            k = parse_int(text, pos);
            if (k <= 0)
            {
                throw std::invalid_argument("Cyclo8Scalar::parse: exponent must be positive");
            }
        }
        if (pos != text.size())
        {
            throw std::invalid_argument("Cyclo8Scalar::parse: trailing characters at offset " +
                                        std::to_string(pos));
        }
        return Cyclo8Scalar(c[0], c[1], c[2], c[3], static_cast<std::int32_t>(k));
    }

    void Cyclo8Scalar::encode_to(std::string &out) const
    {
        const auto put_u32 = [&out](std::uint32_t v) {
            for (int shift = 24; shift >= 0; shift -= 8)
            {
                out.push_back(static_cast<char>((v >> shift) & 0xff));
            }
        };
        put_u32(static_cast<std::uint32_t>(_k));
        for (const std::int64_t x : _c)
        {
            // Bytes compare so that numerically larger coefficients come
            // first; this makes the identity matrix the canonical member of
            // its global-phase class.
            const std::uint64_t u =
                ~(static_cast<std::uint64_t>(x) ^ 0x8000000000000000ull);
            for (int shift = 56; shift >= 0; shift -= 8)
            {
                out.push_back(static_cast<char>((u >> shift) & 0xff));
            }
        }
    }

    Cyclo8Scalar Cyclo8Scalar::decode(const unsigned char *bytes)
    {
        std::uint32_t k = 0;
        for (int i = 0; i < 4; ++i)
        {
            k = (k << 8) | bytes[i];
        }
        std::array<std::int64_t, 4> c{};
        for (std::size_t i = 0; i < 4; ++i)
        {
            std::uint64_t u = 0;
            for (int b = 0; b < 8; ++b)
            {
                u = (u << 8) | bytes[4 + 8 * i + static_cast<std::size_t>(b)];
            }
            c[i] = static_cast<std::int64_t>(~u ^ 0x8000000000000000ull);
        }
        return Cyclo8Scalar(c[0], c[1], c[2], c[3], static_cast<std::int32_t>(k));
    }

} // namespace cliffgraph
