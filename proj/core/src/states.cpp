#include "cliffgraph/states.hpp"

#include <bit>
#include <charconv>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/gates.hpp"

namespace cliffgraph
{

    namespace
    {

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            {
                s.remove_prefix(1);
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            {
                s.remove_suffix(1);
            }
            return s;
        }

        int parse_count(std::string_view text, std::string_view what)
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
            {
                throw ParseError("state spec: malformed " + std::string(what) + " '" +
                                     std::string(text) + "'",
                                 0);
            }
            return value;
        }

        struct Literal
        {
            Cyclo8Scalar zero_amp;
            Cyclo8Scalar one_amp;
        };

        // The six single-qubit literals, unnormalized.
        Literal read_literal(std::string_view body, std::size_t &pos)
        {
            const Cyclo8Scalar one = Cyclo8Scalar::from_int(1);
            const Cyclo8Scalar iunit = Cyclo8Scalar::omega_pow(2);
            const char head = body[pos];
            switch (head)
            {
            case '0':
                ++pos;
                return {one, Cyclo8Scalar()};
            case '1':
                ++pos;
                return {Cyclo8Scalar(), one};
            case '+':
                ++pos;
                return {one, one};
            case 'i':
                ++pos;
                return {one, iunit};
            case '-':
                if (pos + 1 < body.size() && body[pos + 1] == 'i')
                {
                    pos += 2;
                    return {one, -iunit};
                }
                ++pos;
                return {one, -one};
            default:
                throw ParseError(std::string("state spec: unknown literal character '") + head +
                                     "'",
                                 pos);
            }
        }

        StateVector literal_state(std::string_view spec)
        {
            std::string_view body = spec;
            body.remove_prefix(1);
            if (body.empty() || body.back() != '>')
            {
                throw ParseError("state spec: literal must end with '>'", spec.size());
            }
            body.remove_suffix(1);

            std::vector<Literal> literals;
            std::size_t pos = 0;
            while (pos < body.size())
            {
                if (body[pos] == ' ')
                {
                    ++pos;
                    continue;
                }
                literals.push_back(read_literal(body, pos));
            }
            if (literals.empty())
            {
                throw ParseError("state spec: empty literal", 0);
            }

            const int n = static_cast<int>(literals.size());
            StateVector v(n);
            for (std::size_t index = 0; index < v.dim(); ++index)
            {
                Cyclo8Scalar amp = Cyclo8Scalar::from_int(1);
                for (int q = 0; q < n; ++q)
                {
                    const bool bit_set = (index >> (n - 1 - q)) & 1u;
                    const Literal &lit = literals[static_cast<std::size_t>(q)];
                    amp = amp * (bit_set ? lit.one_amp : lit.zero_amp);
                    if (amp.is_zero())
                    {
                        break;
                    }
                }
                v.amp(index) = amp;
            }
            return v;
        }

        std::vector<std::string_view> split_fields(std::string_view s)
        {
            std::vector<std::string_view> fields;
            std::size_t pos = 0;
            while (pos < s.size())
            {
                while (pos < s.size() && s[pos] == ' ')
                {
                    ++pos;
                }
                const std::size_t start = pos;
                while (pos < s.size() && s[pos] != ' ')
                {
                    ++pos;
                }
                if (pos > start)
                {
                    fields.push_back(s.substr(start, pos - start));
                }
            }
            return fields;
        }

        StateVector weight_state(int n, int k)
        {
            StateVector v(n);
            for (std::size_t index = 0; index < v.dim(); ++index)
            {
                if (std::popcount(index) == k)
                {
                    v.amp(index) = Cyclo8Scalar::from_int(1);
                }
            }
            return v;
        }

    } // namespace

    StateVector preset_state(const std::string &spec)
    {
        const std::string_view text = trim(spec);
        if (text.empty())
        {
            throw ParseError("state spec: empty", 0);
        }
        if (text.front() == '|')
        {
            return literal_state(text);
        }
        if (text.starts_with("apply "))
        {
            const std::size_t to_pos = text.find(" to ");
            if (to_pos == std::string_view::npos)
            {
                throw ParseError("state spec: apply form needs ' to '", 0);
            }
            const GateWord word = parse_word(text.substr(6, to_pos - 6));
            const StateVector inner = preset_state(std::string(text.substr(to_pos + 4)));
            for (const Gate &g : word)
            {
                if (std::max(g.qubit, g.target) > inner.qubits())
                {
                    throw std::domain_error("state spec: gate " + g.name() +
                                            " does not fit the state");
                }
            }
            return apply_word(word, inner);
        }

        const auto fields = split_fields(text);
        const std::string_view kind = fields[0];
        if (kind == "zeros" || kind == "ghz" || kind == "w")
        {
            if (fields.size() != 2)
            {
                throw ParseError("state spec: '" + std::string(kind) + "' takes one count", 0);
            }
            const int n = parse_count(fields[1], "qubit count");
            if (kind == "zeros")
            {
                return StateVector::basis(n, 0);
            }
            if (kind == "ghz")
            {
                StateVector v = StateVector::basis(n, 0);
                v.amp(v.dim() - 1) = Cyclo8Scalar::from_int(1);
                return v;
            }
            return weight_state(n, 1);
        }
        if (kind == "dicke")
        {
            if (fields.size() != 3)
            {
                throw ParseError("state spec: 'dicke' takes a count and a weight", 0);
            }
            const int n = parse_count(fields[1], "qubit count");
            const int k = parse_count(fields[2], "weight");
            if (k < 0 || k > n)
            {
                throw std::domain_error("state spec: dicke weight must lie in [0, n]");
            }
            return weight_state(n, k);
        }
        throw ParseError("state spec: unknown form '" + std::string(kind) + "'", 0);
    }

    StateVector generic_state(int n, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        StateVector v(n);
        bool any = false;
        for (std::size_t index = 0; index < v.dim(); ++index)
        {
            const auto value = static_cast<int>(rng() % 7) - 3;
            if (value != 0)
            {
                v.amp(index) = Cyclo8Scalar::from_int(value);
                any = true;
            }
        }
        if (!any)
        {
            v.amp(0) = Cyclo8Scalar::from_int(1);
        }
        return v;
    }

    unsigned long long stabilizer_state_count(int n)
    {
        if (n < 1)
        {
            throw std::domain_error("stabilizer_state_count: n must be positive");
        }
        unsigned long long total = 1;
        if (n >= 64 || __builtin_mul_overflow(total, 1ull << n, &total))
        {
            throw std::overflow_error("stabilizer_state_count: result does not fit 64 bits");
        }
        for (int k = 0; k < n; ++k)
        {
            const unsigned long long factor = (1ull << (n - k)) + 1;
            if (__builtin_mul_overflow(total, factor, &total))
            {
                throw std::overflow_error("stabilizer_state_count: result does not fit 64 bits");
            }
        }
        return total;
    }

} // namespace cliffgraph
