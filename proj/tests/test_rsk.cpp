#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tabcrystal/rsk.hpp"

using namespace tabcrystal;
using support::P;
using support::T;

namespace {

Permutation W(std::vector<int> w) {
    return Permutation(std::move(w));
}

}  // namespace

TEST_CASE("permutations") {
    CHECK_THROWS(W({1, 1}));
    CHECK_THROWS(W({0, 1}));
    const Permutation s = W({2, 3, 1});
    CHECK(s(1) == 2);
    CHECK(s * s.inverse() == Permutation::identity(3));
    CHECK((W({2, 1, 3}) * W({1, 3, 2})) == W({2, 3, 1}));  // right factor acts first
    CHECK(Permutation::cycle(4, {4, 3}) == W({1, 2, 4, 3}));
    CHECK(Permutation::cycle(3, {1, 2, 3}) == W({2, 3, 1}));
    CHECK(s.embedded(4) == W({2, 3, 1, 4}));
    CHECK_THROWS(s.embedded(2));
    CHECK(s.to_string() == "(2,3,1)");
}

TEST_CASE("RSK examples") {
    auto [p1, q1] = rsk(Permutation::identity(3));
    CHECK(p1 == T({{1, 2, 3}}));
    CHECK(q1 == T({{1, 2, 3}}));
    auto [p2, q2] = rsk(W({2, 1}));
    CHECK(p2 == T({{1}, {2}}));
    CHECK(q2 == T({{1}, {2}}));
    auto [p3, q3] = rsk(W({3, 1, 2}));
    CHECK(p3 == T({{1, 2}, {3}}));
    CHECK(q3 == T({{1, 3}, {2}}));
}

TEST_CASE("RSK is a shape-preserving bijection onto pairs of standard tableaux") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> word = Permutation::identity(n).one_line();
        std::set<std::pair<Tableau, Tableau>> seen;
        do {
            const auto [p, q] = rsk(W(word));
            CHECK(p.shape() == q.shape());
            CHECK(p.is_standard());
            CHECK(q.is_standard());
            CHECK(p.rows() == oracle::insert_word(word));
            CHECK(q.rows() == oracle::recording(word));
            CHECK(p.shape()[0] == oracle::lis(word));
            // inverse permutation swaps P and Q
            const auto [pi, qi] = rsk(W(word).inverse());
            CHECK(pi == q);
            CHECK(qi == p);
            seen.insert({p, q});
        } while (std::next_permutation(word.begin(), word.end()));
        std::size_t pairs = 0;
        for (const auto& lam : partitions_of(n))
            pairs += hook_length_formula(lam) * hook_length_formula(lam);
        CHECK(seen.size() == pairs);
    }
}

TEST_CASE("superstandard recording tableaux") {
    CHECK(superstandard_q(2, 2) == T({{1, 3}, {2, 4}}));
    CHECK(superstandard_q(1, 3) == T({{1, 2, 3}}));
    CHECK(superstandard_q(3, 1) == T({{1}, {2}, {3}}));
    CHECK(superstandard_q(3, 2).is_standard());
}

TEST_CASE("left cells") {
    CHECK(cell_members(T({{1, 3}, {2}}), 3).size() == 2);
    const auto row = cell_members(T({{1, 2, 3, 4}}), 4);
    REQUIRE(row.size() == 1);
    CHECK(row[0] == Permutation::identity(4));
    const auto col = cell_members(T({{1}, {2}, {3}}), 3);
    REQUIRE(col.size() == 1);
    CHECK(col[0] == W({3, 2, 1}));
    CHECK_THROWS(cell_members(T({{1, 2}}), 3));
    CHECK_THROWS(cell_members(superstandard_q(1, 11), 11));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& q : enumerate_syt(lam))
                CHECK(cell_members(q, n).size() == hook_length_formula(lam));
}

TEST_CASE("phi_cell") {
    CHECK(phi_cell(W({2, 1, 3}), 2, 2) == W({2, 1, 4, 3}));
    CHECK(phi_cell(Permutation::identity(3), 2, 2) == W({1, 2, 4, 3}));
    CHECK(phi_cell(W({2, 1}), 1, 3) == W({2, 1, 3}));
    CHECK_THROWS(phi_cell(W({2, 1}), 2, 2));
}

TEST_CASE("remove_max_entry") {
    CHECK(remove_max_entry(T({{1, 3}, {2, 4}})) == T({{1, 3}, {2}}));
    CHECK(remove_max_entry(T({{1, 2}, {3}})) == T({{1, 2}}));
}

TEST_CASE("cell bijection") {
    const CellReport r22 = verify_cell_bijection(2, 2);
    CHECK(r22.passed());
    CHECK(r22.source_size == 2);
    CHECK(r22.target_size == 2);
    CHECK(verify_cell_bijection(1, 4).passed());
    const CellReport r32 = verify_cell_bijection(3, 2);
    CHECK(r32.passed());
    CHECK(r32.source_size == 5);
    CHECK(r32.hook_count == 5);
}
