#include "cliffgraph/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffgraph
{

    UnitaryMatrix UnitaryMatrix::identity(std::size_t dim)
    {
        UnitaryMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
        {
            m.at(i, i) = Cyclo8Scalar::from_int(1);
        }
        return m;
    }

    UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &other) const
    {
        if (_dim != other._dim)
        {
            throw std::domain_error("UnitaryMatrix: dimension mismatch in product");
        }
        UnitaryMatrix result(_dim);
        for (std::size_t r = 0; r < _dim; ++r)
        {
            for (std::size_t k = 0; k < _dim; ++k)
            {
                const Cyclo8Scalar &a = at(r, k);
                if (a.is_zero())
                {
                    continue;
                }
                for (std::size_t c = 0; c < _dim; ++c)
                {
                    const Cyclo8Scalar &b = other.at(k, c);
                    if (!b.is_zero())
                    {
                        result.at(r, c) += a * b;
                    }
                }
            }
        }
        return result;
    }

    UnitaryMatrix UnitaryMatrix::scaled(const Cyclo8Scalar &factor) const
    {
        UnitaryMatrix result(_dim);
        for (std::size_t i = 0; i < _dim * _dim; ++i)
        {
            result._entries[i] = _entries[i] * factor;
        }
        return result;
    }

    UnitaryMatrix UnitaryMatrix::scaled_omega_pow(int t) const
    {
        UnitaryMatrix result(_dim);
        for (std::size_t i = 0; i < _dim * _dim; ++i)
        {
            result._entries[i] = _entries[i].mul_omega_pow(t);
        }
        return result;
    }

    UnitaryMatrix UnitaryMatrix::dagger() const
    {
        UnitaryMatrix result(_dim);
        for (std::size_t r = 0; r < _dim; ++r)
        {
            for (std::size_t c = 0; c < _dim; ++c)
            {
                result.at(c, r) = at(r, c).conj();
            }
        }
        return result;
    }

    std::string UnitaryMatrix::encode() const
    {
        std::string bytes;
        bytes.reserve(_entries.size() * Cyclo8Scalar::ENCODED_SIZE);
        for (const auto &entry : _entries)
        {
            entry.encode_to(bytes);
        }
        return bytes;
    }

    UnitaryMatrix UnitaryMatrix::decode(std::string_view bytes)
    {
        const std::size_t count = bytes.size() / Cyclo8Scalar::ENCODED_SIZE;
        const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
        if (count * Cyclo8Scalar::ENCODED_SIZE != bytes.size() || dim * dim != count)
        {
            throw std::invalid_argument("UnitaryMatrix::decode: malformed encoding length");
        }
        UnitaryMatrix m(dim);
        const auto *p = reinterpret_cast<const unsigned char *>(bytes.data());
        for (std::size_t i = 0; i < count; ++i)
        {
            m._entries[i] = Cyclo8Scalar::decode(p + i * Cyclo8Scalar::ENCODED_SIZE);
        }
        return m;
    }

    namespace
    {

        std::pair<std::string, int> least_phase_encoding(const UnitaryMatrix &m)
        {
            int best_t = 0;
            std::string best = m.encode();
            for (int t = 1; t < 8; ++t)
            {
                std::string candidate = m.scaled_omega_pow(t).encode();
                if (candidate < best)
                {
                    best = std::move(candidate);
                    best_t = t;
                }
            }
            return {std::move(best), best_t};
        }

    } // namespace

    MatrixPhaseForm canonical_phase_form(const UnitaryMatrix &m)
    {
        auto [best, best_t] = least_phase_encoding(m);
        return {UnitaryMatrix::decode(best), best_t};
    }

    std::string canonical_phase_key(const UnitaryMatrix &m)
    {
        return least_phase_encoding(m).first;
    }

} // namespace cliffgraph
