#include "cliffgraph/state.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffgraph
{

    StateVector::StateVector(int n) : _n(n)
    {
        if (n < 1 || n > 10)
        {
            throw std::domain_error("StateVector: qubit count out of range");
        }
        _amps.assign(std::size_t{1} << n, Cyclo8Scalar());
    }

    StateVector StateVector::basis(int n, std::size_t index)
    {
        StateVector v(n);
        v.amp(index) = Cyclo8Scalar::from_int(1);
        return v;
    }

    bool StateVector::is_zero() const
    {
        for (const auto &a : _amps)
        {
            if (!a.is_zero())
            {
                return false;
            }
        }
        return true;
    }

    StateVector StateVector::scaled_omega_pow(int t) const
    {
        StateVector result(_n);
        for (std::size_t i = 0; i < _amps.size(); ++i)
        {
            result._amps[i] = _amps[i].mul_omega_pow(t);
        }
        return result;
    }

    std::string StateVector::encode() const
    {
        std::string bytes;
        bytes.reserve(_amps.size() * Cyclo8Scalar::ENCODED_SIZE);
        for (const auto &a : _amps)
        {
            a.encode_to(bytes);
        }
        return bytes;
    }

    std::string StateVector::to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < _amps.size(); ++i)
        {
            if (_amps[i].is_zero())
            {
                continue;
            }
            if (!first)
            {
                os << " + ";
            }
            first = false;
            os << _amps[i] << '|';
            for (int bit = _n - 1; bit >= 0; --bit)
            {
                os << (((i >> bit) & 1u) ? '1' : '0');
            }
            os << '>';
        }
        if (first)
        {
            os << '0';
        }
        return os.str();
    }

    StateVector apply(const UnitaryMatrix &m, const StateVector &v)
    {
        if (m.dim() != v.dim())
        {
            throw std::domain_error("apply: operator and state dimensions differ");
        }
        StateVector result(v.qubits());
        for (std::size_t r = 0; r < m.dim(); ++r)
        {
            Cyclo8Scalar sum;
            for (std::size_t c = 0; c < m.dim(); ++c)
            {
                const Cyclo8Scalar &a = m.at(r, c);
                if (!a.is_zero() && !v.amp(c).is_zero())
                {
                    sum += a * v.amp(c);
                }
            }
            result.amp(r) = sum;
        }
        return result;
    }

    StateVector apply_to_leading_qubits(const UnitaryMatrix &m, const StateVector &v)
    {
        if (m.dim() > v.dim() || v.dim() % m.dim() != 0)
        {
            throw std::domain_error("apply_to_leading_qubits: incompatible dimensions");
        }
        const std::size_t tail = v.dim() / m.dim();
        StateVector result(v.qubits());
        for (std::size_t r = 0; r < m.dim(); ++r)
        {
            for (std::size_t c = 0; c < m.dim(); ++c)
            {
                const Cyclo8Scalar &a = m.at(r, c);
                if (a.is_zero())
                {
                    continue;
                }
                for (std::size_t t = 0; t < tail; ++t)
                {
                    const Cyclo8Scalar &x = v.amp(c * tail + t);
                    if (!x.is_zero())
                    {
                        result.amp(r * tail + t) += a * x;
                    }
                }
            }
        }
        return result;
    }

    StatePhaseForm canonical_phase_form(const StateVector &v)
    {
        int best_t = 0;
        StateVector best = v;
        std::string best_bytes = v.encode();
        for (int t = 1; t < 8; ++t)
        {
            StateVector candidate = v.scaled_omega_pow(t);
            std::string bytes = candidate.encode();
            if (bytes < best_bytes)
            {
                best = std::move(candidate);
                best_bytes = std::move(bytes);
                best_t = t;
            }
        }
        return {std::move(best), best_t};
    }

    std::string canonical_phase_key(const StateVector &v)
    {
        std::string best = v.encode();
        for (int t = 1; t < 8; ++t)
        {
            std::string candidate = v.scaled_omega_pow(t).encode();
            if (candidate < best)
            {
                best = std::move(candidate);
            }
        }
        return best;
    }

} // namespace cliffgraph
