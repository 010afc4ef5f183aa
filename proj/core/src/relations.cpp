#include "cliffgraph/relations.hpp"

#include <initializer_list>
#include <stdexcept>

#include "cliffgraph/matrix.hpp"
#include "cliffgraph/table.hpp"

namespace cliffgraph
{

    namespace
    {

        std::string rep(const std::string &unit, int times)
        {
            std::string out;
            for (int k = 0; k < times; ++k)
            {
                if (!out.empty())
                {
                    out += ' ';
                }
                out += unit;
            }
            return out;
        }

        // Rows are 1-based positions in the reference subgroup table.
        std::vector<std::string> cite(std::initializer_list<int> rows)
        {
            const auto &table = reference_subgroup_rows();
            std::vector<std::string> out;
            out.reserve(rows.size());
            for (int row : rows)
            {
                out.push_back(table[static_cast<std::size_t>(row - 1)].generators);
            }
            return out;
        }

        std::vector<Relation> build_catalog()
        {
            std::vector<Relation> c;
            c.push_back({"h_involution", "Hi Hi", "", 0,
                         cite({1, 4, 6, 9, 10, 11, 15, 16, 17, 18, 19, 20, 21, 22, 24, 25})});
            c.push_back({"p_fourth_power", "Pi^4", "", 0,
                         cite({3, 6, 7, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25})});
            c.push_back({"hp_cube_balance", rep("Hi Pi", 3), rep("Pi Hi", 3), 0,
                         cite({15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 27, 28, 29})});
            c.push_back({"hp_cube_phase", rep("Hi Pi", 3), "", 1,
                         cite({15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 27, 28, 29})});
            c.push_back({"c_involution", "Ci,j Ci,j", "", 0,
                         cite({2, 5, 7, 9, 10, 11, 12, 13, 14, 18, 19, 20, 21, 23, 25})});
            c.push_back({"p_p_commute", "Pi' Pj Pi", "Pj", 0,
                         cite({8, 13, 14, 21, 22, 23, 24, 25, 26, 27, 28, 29})});
            c.push_back({"h_h_commute", "Hi Hj Hi", "Hj", 0,
                         cite({4, 16, 17, 26, 27, 28, 29})});
            c.push_back({"h_p_commute", "Pi' Hj Pi", "Hj", 0,
                         cite({6, 11, 14, 16, 17, 21, 23, 24, 25, 26, 27, 28, 29})});
            c.push_back({"p_from_cnot_conjugation", "Ci,j Hj Ci,j Pj Ci,j Pj^3 Hj", "Pi", 0,
                         cite({14, 21, 23, 25, 26, 27, 28, 29})});
            c.push_back({"cnot_reversal", "Hi Hj Cj,i Hi Hj", "Ci,j", 0,
                         cite({10, 14, 23, 25, 26, 27, 28, 29})});
            c.push_back({"cp_fourth_power", rep("Ci,j Pj", 4), "Pi Pi", 0,
                         cite({12, 13, 21, 26, 27, 28, 29})});
            c.push_back({"cnot_braid", "Ci,j Cj,i Ci,j", "Cj,i Ci,j Cj,i", 0,
                         cite({5, 14, 18, 19, 20, 23, 26, 27, 28, 29})});
            c.push_back({"p_c_commute", "Pi^3 Ci,j Pi", "Ci,j", 0,
                         cite({7, 11, 13, 14, 21, 23, 25})});
            c.push_back({"ch_fourth_power", rep("Ci,j Hj", 4), "Pi Pi", 0,
                         cite({9, 10, 11, 14, 18, 19, 20, 23, 25})});
            c.push_back({"hpc_sixth_power", rep("Hi Pj Ci,j", 6), "", 6, {}});
            c.push_back({"hcp_sixth_power", rep("Hi Ci,j Pj", 6), "", 6, {}});
            c.push_back({"phc_sixth_power", rep("Pj Hi Ci,j", 6), "", 6, {}});
            c.push_back({"cp_exchange", "Ci,j Pj Ci,j Pj", "Pj Ci,j Pj Ci,j", 0, cite({22})});
            c.push_back({"chpp_square_balance", rep("Ci,j Hi Pj^2", 2), rep("Pj^2 Hi Ci,j", 2), 0,
                         cite({22})});
            c.push_back({"h_conjugation_by_cnots",
                         "Cj,i Ci,j Cj,i Hi Cj,i Ci,j Cj,i", "Hj", 0, {}});
            c.push_back({"cp_control_commute", "Ci,j Pi", "Pi Ci,j", 0, {}});
            c.push_back({"hc_eighth_power", rep("Hi Ci,j", 8), "", 0, {}});
            return c;
        }

    } // namespace

    const std::vector<Relation> &relation_catalog()
    {
        static const std::vector<Relation> catalog = build_catalog();
        return catalog;
    }

    GateWord instantiate_template(const std::string &side, int i, int j)
    {
        if (i == j)
        {
            throw std::domain_error("relation instantiation requires two distinct qubit indices");
        }
        std::string concrete;
        concrete.reserve(side.size() + 8);
        for (char ch : side)
        {
            if (ch == 'i')
            {
                concrete += std::to_string(i);
            }
            else if (ch == 'j')
            {
                concrete += std::to_string(j);
            }
            else
            {
                concrete += ch;
            }
        }
        return parse_word(concrete);
    }

    bool verify_relation(const Relation &r, int i, int j, int n)
    {
        if (i < 1 || j < 1 || i > n || j > n)
        {
            throw std::domain_error("relation indices must lie inside the register");
        }
        const UnitaryMatrix lhs = word_matrix(instantiate_template(r.lhs, i, j), n);
        const UnitaryMatrix rhs = word_matrix(instantiate_template(r.rhs, i, j), n);
        return lhs == rhs.scaled_omega_pow(r.phase_power);
    }

    RelationReport verify_all(int n)
    {
        if (n < 2)
        {
            throw std::domain_error("relation verification needs at least two qubits");
        }
        RelationReport report;
        report.all_passed = true;
        for (const Relation &r : relation_catalog())
        {
            for (auto [i, j] : {std::pair<int, int>{1, 2}, std::pair<int, int>{2, 1}})
            {
                const bool ok = verify_relation(r, i, j, n);
                report.checks.push_back({r.name, i, j, ok});
                report.all_passed = report.all_passed && ok;
            }
        }
        return report;
    }

} // namespace cliffgraph
