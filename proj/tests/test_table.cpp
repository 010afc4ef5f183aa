#include <doctest.h>

#include <cstddef>
#include <set>

#include "cliffgraph/gates.hpp"
#include "cliffgraph/group.hpp"
#include "cliffgraph/table.hpp"

using namespace cliffgraph;

TEST_CASE("the reference list covers 29 generator subsets with consistent columns")
{
    const auto &rows = reference_subgroup_rows();
    REQUIRE(rows.size() == 29);

    std::multiset<unsigned long> orders;
    int isomorphic_marks = 0;
    int sharing_marks = 0;
    for (const auto &row : rows)
    {
        orders.insert(row.expected_order);
        CHECK(92160 % row.expected_order == 0);
        CHECK((row.expected_factor == 0 || row.expected_factor == 2 ||
               row.expected_factor == 8));
        if (row.expected_factor == 0)
        {
            CHECK(row.expected_mod_diameter == 0);
        }
        else
        {
            CHECK(row.expected_mod_diameter > 0);
            CHECK(row.expected_mod_diameter <= row.expected_diameter);
        }
        isomorphic_marks += row.isomorphic_cayley ? 1 : 0;
        sharing_marks += row.shares_elements ? 1 : 0;
        CHECK_FALSE(parse_word(row.generators).empty());
    }
    CHECK(isomorphic_marks == 6);
    CHECK(sharing_marks == 9);

    const std::multiset<unsigned long> expected = {
        2, 2, 4, 4, 6, 8, 8, 16, 16, 16, 32, 32, 64, 192, 192, 384, 768,
        2304, 2304, 2304, 3072, 3072, 3072, 4608, 9216,
        92160, 92160, 92160, 92160};
    CHECK(orders == expected);
}

TEST_CASE("rows that share one element set as a group, and rows that do not")
{
    const CliffordGroup a = enumerate(parse_word("H1 P1 C21"), 2, PhaseMode::exact);
    const CliffordGroup b = enumerate(parse_word("H1 P1 P2 C21"), 2, PhaseMode::exact);
    const CliffordGroup c = enumerate(parse_word("H1 P1 C12"), 2, PhaseMode::exact);
    REQUIRE(a.order() == 3072);
    REQUIRE(b.order() == 3072);
    REQUIRE(c.order() == 3072);
    CHECK(same_element_set(a, b));
    CHECK_FALSE(same_element_set(a, c));
    CHECK_FALSE(same_element_set(b, c));
}

TEST_CASE("measuring every subset reproduces the reference columns")
{
    const auto computed = subgroup_table(0);
    const auto &rows = reference_subgroup_rows();
    REQUIRE(computed.size() == rows.size());

    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        CAPTURE(rows[i].generators);
        CHECK(computed[i].generators == rows[i].generators);
        CHECK(computed[i].order == rows[i].expected_order);
        CHECK(computed[i].factor == rows[i].expected_factor);
        CHECK(computed[i].mod_diameter == rows[i].expected_mod_diameter);

        if (rows[i].generators == "H1 H2 P1 C12")
        {
            // The reference prints 21 for this one diameter, but an exhaustive
            // all-source scan (and an independent matrix-level BFS with no edge
            // table) both measure 23; the printed value is reproduced nowhere.
            CHECK(computed[i].diameter == 23);
            CHECK(rows[i].expected_diameter == 21);
        }
        else
        {
            CHECK(computed[i].diameter == rows[i].expected_diameter);
        }
    }
}
