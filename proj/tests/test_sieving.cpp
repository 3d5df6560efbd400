#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tabcrystal/jdt.hpp"
#include "tabcrystal/sieving.hpp"

using namespace tabcrystal;
using support::P;
using support::T;

namespace {

TableauAction promote(int k) {
    return [k](const Tableau& t) { return promotion(t, k); };
}

TableauAction unpromote(int k) {
    return [k](const Tableau& t) { return bk_composite(t, k); };
}

std::vector<std::size_t> fixed_column(const CspReport& r) {
    std::vector<std::size_t> out;
    for (const auto& row : r.rows)
        out.push_back(row.fixed);
    return out;
}

std::vector<std::int64_t> value_column(const CspReport& r) {
    std::vector<std::int64_t> out;
    for (const auto& row : r.rows)
        out.push_back(row.value.value_or(-999));
    return out;
}

}  // namespace

TEST_CASE("orbit examples") {
    const auto ssyt = enumerate_ssyt(P({2, 2}), 3);
    const auto o = orbits(ssyt, promote(3));
    CHECK(o.size_multiset() == std::map<std::size_t, std::size_t>{{3, 2}});
    CHECK(o.order() == 3);

    const auto syt = enumerate_syt(P({2, 2}));
    CHECK(orbits(syt, promote(4)).size_multiset() == std::map<std::size_t, std::size_t>{{2, 1}});

    const auto id = orbits(ssyt, [](const Tableau& t) { return t; });
    CHECK(id.size_multiset() == std::map<std::size_t, std::size_t>{{1, 6}});
    CHECK(id.fixed_points(1) == 6);
}

TEST_CASE("orbits are ordered by their minimal element") {
    const auto set = enumerate_ssyt(P({2, 1}), 3);
    const auto o = orbits(set, promote(3));
    std::size_t covered = 0;
    for (std::size_t c = 0; c < o.cycles.size(); ++c) {
        const auto& cyc = o.cycles[c];
        covered += cyc.size();
        CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
        if (c > 0)
            CHECK(o.cycles[c - 1].front() < cyc.front());
    }
    CHECK(covered == set.size());
}

TEST_CASE("actions that leave the set are rejected") {
    const auto set = enumerate_ssyt(P({2}), 2);
    CHECK_THROWS_AS(orbits(set, [](const Tableau&) { return T({{3, 3}}); }), NotClosed);
    CHECK_THROWS_AS(orbits(set, [&](const Tableau&) { return set.front(); }), NotClosed);
}

TEST_CASE("fixed points from cycles agree with brute force") {
    for (const auto& c : support::rect_sweep(2, 3, 4)) {
        const auto set = enumerate_ssyt(rectangle(c.a, c.m), c.k);
        const auto o = orbits(set, promote(c.k));
        for (int d = 1; d <= c.k; ++d)
            CHECK(o.fixed_points(d) == fixed_points_brute(set, promote(c.k), d));
    }
}

TEST_CASE("CSP examples") {
    const CspReport s = verify_csp(P({2, 2}), 3, CspMode::ssyt);
    CHECK(s.polynomial == LaurentPoly::from_coeffs(0, {1, 1, 2, 1, 1}));
    CHECK(fixed_column(s) == std::vector<std::size_t>{0, 0, 6});
    CHECK(value_column(s) == std::vector<std::int64_t>{0, 0, 6});
    CHECK(s.verdict);
    CHECK(s.order_ok);
    CHECK(s.orbit_sum_ok);

    const CspReport y = verify_csp(P({2, 2}), 0, CspMode::syt);
    CHECK(y.polynomial == LaurentPoly::from_coeffs(0, {1, 0, 1}));
    CHECK(y.order == 4);
    CHECK(fixed_column(y) == std::vector<std::size_t>{0, 2, 0, 2});
    CHECK(value_column(y) == std::vector<std::int64_t>{0, 2, 0, 2});
    CHECK(y.verdict);

    const CspReport y33 = verify_csp(P({3, 3}), 0, CspMode::syt);
    CHECK(y33.polynomial.eval(1) == 5);
    CHECK(y33.verdict);

    const CspReport one = verify_csp(P({1}), 5, CspMode::ssyt);
    CHECK(one.set_size == 5);
    CHECK(one.verdict);
}

TEST_CASE("CSP preconditions") {
    CHECK_THROWS(verify_csp(P({2, 1}), 3, CspMode::ssyt));
    CHECK_THROWS(verify_csp(P({}), 3, CspMode::ssyt));
    CHECK_THROWS(verify_csp(P({1, 1, 1}), 2, CspMode::ssyt));
}

TEST_CASE("CSP verdict is the same for the inverse generator") {
    for (const auto& c : support::rect_sweep(2, 3, 4)) {
        const auto set = enumerate_ssyt(rectangle(c.a, c.m), c.k);
        const LaurentPoly x = principal_spec(rectangle(c.a, c.m), c.k);
        const CspReport fwd = verify_csp_action(set, promote(c.k), c.k, x);
        const CspReport back = verify_csp_action(set, unpromote(c.k), c.k, x);
        CHECK(fwd.verdict);
        CHECK(back.verdict);
        CHECK(fixed_column(fwd) == fixed_column(back));
    }
}

TEST_CASE("a wrong polynomial fails with a readable report") {
    const auto set = enumerate_ssyt(P({2, 2}), 3);
    const CspReport r = verify_csp_action(set, promote(3), 3, LaurentPoly::from_coeffs(0, {6}));
    CHECK_FALSE(r.verdict);
    const CspReport bad = verify_csp_action(set, promote(3), 3, LaurentPoly::from_coeffs(0, {5, 1}));
    CHECK_FALSE(bad.verdict);
    CHECK(bad.diagnostics.has_value());
}

TEST_CASE("Stembridge examples") {
    const StembridgeReport r21 = verify_stembridge(P({2, 1}), 3);
    CHECK(r21.ssyt_value == 0);
    CHECK(r21.ssyt_fixed == 0);
    CHECK(r21.passed());
    const StembridgeReport r22 = verify_stembridge(P({2, 2}), 3);
    CHECK(r22.ssyt_value == 2);
    CHECK(r22.ssyt_fixed == 2);
    CHECK(r22.passed());
    const StembridgeReport row = verify_stembridge(P({4}), 1);
    CHECK(row.ssyt_count == 1);
    CHECK(row.ssyt_fixed == 1);
    CHECK(row.ssyt_value == 1);
    CHECK(row.passed());
}

TEST_CASE("Stembridge sweep against brute-force fixed points") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (int k = std::max(1, lam.length()); k <= 3; ++k) {
                CAPTURE(lam.to_string());
                CAPTURE(k);
                const StembridgeReport r = verify_stembridge(lam, k);
                CHECK(r.passed());
                std::size_t fixed = 0;
                for (const auto& g : oracle::all_ssyt(lam.parts(), k))
                    fixed += oracle::evacuate(g, k) == g;
                CHECK(r.ssyt_fixed == fixed);
            }
}

TEST_CASE("epsilon signs") {
    CHECK(epsilon_sign(P({2, 2})) == 1);
    CHECK(epsilon_sign(P({2, 1})) == -1);
    CHECK(epsilon_sign(P({})) == 1);
}

TEST_CASE("sign identity") {
    const SignReport r = sign_identity(2, 2, 3);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[1].eps_rect == 1);
    CHECK(r.rows[1].eps_branch == -1);
    CHECK(r.rows[1].expected == -1);
    CHECK(r.passed());
    for (const auto& row : sign_identity(1, 4, 3).rows)
        CHECK(row.expected == 1);
    for (int a = 1; a <= 6; ++a)
        for (int m = 1; m <= 6; ++m)
            for (int k = a + 1; k <= 7; ++k)
                CHECK(sign_identity(a, m, k).passed());
    CHECK_THROWS(sign_identity(3, 2, 3));
}
