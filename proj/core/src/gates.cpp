#include "cliffgraph/gates.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cliffgraph
{

    namespace
    {

        void check_qubit_index(int qubit)
        {
            if (qubit < 1)
            {
                throw std::domain_error("qubit indices are 1-based and positive");
            }
        }

        int bit_of(int qubit, int n)
        {
            if (qubit > n)
            {
                throw std::domain_error("gate acts on qubit " + std::to_string(qubit) +
                                        " but the register has only " + std::to_string(n) +
                                        " qubits");
            }
            return 1 << (n - qubit);
        }

        void check_register_width(int n)
        {
            if (n < 1 || n > 10)
            {
                throw std::domain_error("register width must be between 1 and 10 qubits");
            }
        }

    } // namespace

    std::string Gate::name() const
    {
        switch (kind)
        {
        case GateKind::Hadamard:
            return "H" + std::to_string(qubit);
        case GateKind::Phase:
            return "P" + std::to_string(qubit);
        case GateKind::Cnot:
            if (qubit <= 9 && target <= 9)
            {
                return "C" + std::to_string(qubit) + std::to_string(target);
            }
            return "C" + std::to_string(qubit) + "," + std::to_string(target);
        }
        throw std::logic_error("unreachable gate kind");
    }

    Gate h_gate(int qubit)
    {
        check_qubit_index(qubit);
        return Gate{GateKind::Hadamard, qubit, 0};
    }

    Gate p_gate(int qubit)
    {
        check_qubit_index(qubit);
        return Gate{GateKind::Phase, qubit, 0};
    }

    Gate cnot_gate(int control, int target)
    {
        check_qubit_index(control);
        check_qubit_index(target);
        if (control == target)
        {
            throw std::domain_error("CNOT control and target must differ");
        }
        return Gate{GateKind::Cnot, control, target};
    }

    UnitaryMatrix gate_left_mul(const Gate &g, const UnitaryMatrix &m, int n)
    {
        check_register_width(n);
        const int dim = 1 << n;
        if (m.dim() != dim)
        {
            throw std::domain_error("matrix dimension does not match register width");
        }

        UnitaryMatrix out(dim);
        switch (g.kind)
        {
        case GateKind::Hadamard:
        {
            const int b = bit_of(g.qubit, n);
            const Cyclo8Scalar inv_s2 = Cyclo8Scalar::inv_sqrt2_pow(1);
            for (int r = 0; r < dim; ++r)
            {
                const int mate = r ^ b;
                for (int c = 0; c < dim; ++c)
                {
                    Cyclo8Scalar sum = (r & b) ? m.at(mate, c) - m.at(r, c)
                                               : m.at(r, c) + m.at(mate, c);
                    if (!sum.is_zero())
                    {
                        out.at(r, c) = sum * inv_s2;
                    }
                }
            }
            break;
        }
        case GateKind::Phase:
        {
            const int b = bit_of(g.qubit, n);
            for (int r = 0; r < dim; ++r)
            {
                const bool rotate = (r & b) != 0;
                for (int c = 0; c < dim; ++c)
                {
                    const Cyclo8Scalar &x = m.at(r, c);
                    if (x.is_zero())
                    {
                        continue;
                    }
                    out.at(r, c) = rotate ? x.mul_omega_pow(2) : x;
                }
            }
            break;
        }
        case GateKind::Cnot:
        {
            const int cb = bit_of(g.qubit, n);
            const int tb = bit_of(g.target, n);
            for (int r = 0; r < dim; ++r)
            {
                const int src = (r & cb) ? (r ^ tb) : r;
                for (int c = 0; c < dim; ++c)
                {
                    const Cyclo8Scalar &x = m.at(src, c);
                    if (!x.is_zero())
                    {
                        out.at(r, c) = x;
                    }
                }
            }
            break;
        }
        }
        return out;
    }

    UnitaryMatrix gate_matrix(const Gate &g, int n)
    {
        check_register_width(n);
        return gate_left_mul(g, UnitaryMatrix::identity(1 << n), n);
    }

    UnitaryMatrix word_matrix(const GateWord &word, int n)
    {
        check_register_width(n);
        UnitaryMatrix acc = UnitaryMatrix::identity(1 << n);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
        {
            acc = gate_left_mul(*it, acc, n);
        }
        return acc;
    }

    StateVector apply_gate(const Gate &g, const StateVector &v)
    {
        const int n = v.qubits();
        const int dim = v.dim();
        StateVector out(n);
        switch (g.kind)
        {
        case GateKind::Hadamard:
        {
            const int b = bit_of(g.qubit, n);
            const Cyclo8Scalar inv_s2 = Cyclo8Scalar::inv_sqrt2_pow(1);
            for (int r = 0; r < dim; ++r)
            {
                const int mate = r ^ b;
                Cyclo8Scalar sum = (r & b) ? v.amp(mate) - v.amp(r)
                                           : v.amp(r) + v.amp(mate);
                if (!sum.is_zero())
                {
                    out.amp(r) = sum * inv_s2;
                }
            }
            break;
        }
        case GateKind::Phase:
        {
            const int b = bit_of(g.qubit, n);
            for (int r = 0; r < dim; ++r)
            {
                const Cyclo8Scalar &x = v.amp(r);
                if (x.is_zero())
                {
                    continue;
                }
                out.amp(r) = (r & b) ? x.mul_omega_pow(2) : x;
            }
            break;
        }
        case GateKind::Cnot:
        {
            const int cb = bit_of(g.qubit, n);
            const int tb = bit_of(g.target, n);
            for (int r = 0; r < dim; ++r)
            {
                const int src = (r & cb) ? (r ^ tb) : r;
                const Cyclo8Scalar &x = v.amp(src);
                if (!x.is_zero())
                {
                    out.amp(r) = x;
                }
            }
            break;
        }
        }
        return out;
    }

    StateVector apply_word(const GateWord &word, const StateVector &v)
    {
        StateVector acc = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
        {
            acc = apply_gate(*it, acc);
        }
        return acc;
    }

    std::string word_to_string(const GateWord &word)
    {
        std::string out;
        for (const Gate &g : word)
        {
            if (!out.empty())
            {
                out += ' ';
            }
            out += g.name();
        }
        return out;
    }

    namespace
    {

        struct TokenCursor
        {
            std::string_view text;
            std::size_t pos = 0;

            bool next(std::string_view &token, std::size_t &offset)
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                {
                    ++pos;
                }
                if (pos >= text.size())
                {
                    return false;
                }
                const std::size_t start = pos;
                while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
                {
                    ++pos;
                }
                token = text.substr(start, pos - start);
                offset = start;
                return true;
            }
        };

        int read_index(std::string_view token, std::size_t &cursor, std::size_t token_offset)
        {
            int value = 0;
            const char *begin = token.data() + cursor;
            const char *end = token.data() + token.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc() || ptr == begin)
            {
                throw ParseError("expected a qubit index in token '" + std::string(token) + "'",
                                 token_offset);
            }
            if (value < 1)
            {
                throw ParseError("qubit indices must be positive in token '" + std::string(token) + "'",
                                 token_offset);
            }
            cursor += static_cast<std::size_t>(ptr - begin);
            return value;
        }

        Gate base_gate(std::string_view token, std::size_t &cursor, std::size_t token_offset)
        {
            const char head = token[0];
            cursor = 1;
            switch (head)
            {
            case 'H':
                return h_gate(read_index(token, cursor, token_offset));
            case 'P':
                return p_gate(read_index(token, cursor, token_offset));
            case 'C':
            {
                std::size_t digits_end = cursor;
                while (digits_end < token.size() &&
                       token[digits_end] >= '0' && token[digits_end] <= '9')
                {
                    ++digits_end;
                }
                int control = 0;
                int target = 0;
                if (digits_end < token.size() && token[digits_end] == ',')
                {
                    control = read_index(token, cursor, token_offset);
                    ++cursor;
                    target = read_index(token, cursor, token_offset);
                }
                else if (digits_end == cursor + 2)
                {
                    control = token[cursor] - '0';
                    target = token[cursor + 1] - '0';
                    if (control < 1 || target < 1)
                    {
                        throw ParseError("qubit indices must be positive in token '" +
                                             std::string(token) + "'",
                                         token_offset);
                    }
                    cursor += 2;
                }
                else
                {
                    throw ParseError("CNOT token needs two indices but got '" +
                                         std::string(token) + "'",
                                     token_offset);
                }
                if (control == target)
                {
                    throw ParseError("CNOT control and target must differ in token '" +
                                         std::string(token) + "'",
                                     token_offset);
                }
                return cnot_gate(control, target);
            }
            default:
                throw ParseError("unknown gate letter in token '" + std::string(token) + "'",
                                 token_offset);
            }
        }

        void append_inverse(GateWord &word, const Gate &g)
        {
            if (g.kind == GateKind::Phase)
            {
                word.push_back(g);
                word.push_back(g);
                word.push_back(g);
            }
            else
            {
                word.push_back(g);
            }
        }

        void append_token(GateWord &word, std::string_view token, std::size_t token_offset)
        {
            std::size_t cursor = 0;
            const Gate g = base_gate(token, cursor, token_offset);

            if (cursor == token.size())
            {
                word.push_back(g);
                return;
            }
            if (token[cursor] == '\'')
            {
                if (cursor + 1 != token.size())
                {
                    throw ParseError("trailing characters after inverse mark in token '" +
                                         std::string(token) + "'",
                                     token_offset);
                }
                append_inverse(word, g);
                return;
            }
            if (token[cursor] != '^')
            {
                throw ParseError("unexpected characters in token '" + std::string(token) + "'",
                                 token_offset);
            }
            ++cursor;
            int exponent = 0;
            const char *begin = token.data() + cursor;
            const char *end = token.data() + token.size();
            auto [ptr, ec] = std::from_chars(begin, end, exponent);
            if (ec != std::errc() || ptr != end)
            {
                throw ParseError("malformed exponent in token '" + std::string(token) + "'",
                                 token_offset);
            }
            if (exponent == -1)
            {
                append_inverse(word, g);
                return;
            }
            if (exponent < 1)
            {
                throw ParseError("exponent must be positive or -1 in token '" +
                                     std::string(token) + "'",
                                 token_offset);
            }
            for (int k = 0; k < exponent; ++k)
            {
                word.push_back(g);
            }
        }

    } // namespace

    GateWord parse_word(std::string_view text)
    {
        GateWord word;
        TokenCursor tokens{text};
        std::string_view token;
        std::size_t offset = 0;
        while (tokens.next(token, offset))
        {
            append_token(word, token, offset);
        }
        return word;
    }

} // namespace cliffgraph
