#include "tabcrystal/branching.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "tabcrystal/crystal.hpp"
#include "tabcrystal/jdt.hpp"

namespace tabcrystal {

namespace {

std::string params(int a, int m, int k) {
    return "a=" + std::to_string(a) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

std::string show(const std::optional<Tableau>& t) {
    return t ? t->to_string() : "null";
}

}  // namespace

Partition branch_shape(int a, int m, int j) {
    if (a < 1 || m < 1 || j < 0 || j > m)
        throw std::invalid_argument("branch_shape needs a, m >= 1 and 0 <= j <= m");
    std::vector<int> parts(static_cast<std::size_t>(a), m);
    parts.back() = m - j;
    return Partition(std::move(parts));
}

Tableau phi_j(const Tableau& b, int j, int a, int m, int k) {
    if (b.shape() != branch_shape(a, m, j) || b.is_skew())
        throw std::invalid_argument("phi_j: shape " + b.shape().to_string() + " is not (m^{a-1}, m-j) for " +
                                    params(a, m, k) + " j=" + std::to_string(j));
    if (b.max_entry() >= k)
        throw std::invalid_argument("phi_j: entries must be at most k-1 = " + std::to_string(k - 1));
    std::vector<std::vector<int>> rows = b.rows();
    rows.resize(static_cast<std::size_t>(a));
    rows.back().insert(rows.back().end(), static_cast<std::size_t>(j), k);
    return Tableau(std::move(rows), k);
}

std::pair<int, Tableau> strip_decompose(const Tableau& t, int k) {
    if (t.is_skew() || !t.shape().is_rectangular() || t.shape().empty())
        throw std::invalid_argument("strip_decompose needs a nonempty rectangular tableau");
    const int a = t.shape().length();
    const int m = t.shape()[0];
    int j = 0;
    for (int r = 0; r < a; ++r) {
        for (int c = 0; c < m; ++c) {
            if (t.at(r, c) < k)
                continue;
            if (t.at(r, c) > k)
                throw std::invalid_argument("strip_decompose: entry exceeds k in " + t.to_string());
            if (r != a - 1)
                throw std::invalid_argument("strip_decompose: entry k outside the bottom row in " +
                                            t.to_string());
            ++j;
        }
    }
    std::vector<std::vector<int>> rows = t.rows();
    rows.back().resize(static_cast<std::size_t>(m - j));
    if (rows.back().empty())
        rows.pop_back();
    return {j, Tableau(std::move(rows), k - 1)};
}

BranchDecomposition branch_decomposition(int a, int m, int k) {
    if (a < 1 || a > k - 1)
        throw std::invalid_argument("branching needs 1 <= a <= k-1");
    BranchDecomposition d{a, m, k, {}};
    for (int j = 0; j <= m; ++j) {
        std::vector<Tableau> family;
        for (const Tableau& b : enumerate_ssyt(branch_shape(a, m, j), k - 1))
            family.push_back(phi_j(b, j, a, m, k));
        d.families.push_back(std::move(family));
    }
    return d;
}

BranchingReport verify_branching(int a, int m, int k) {
    if (a < 1 || a > k - 1 || m < 1)
        throw std::invalid_argument("verify_branching needs 1 <= a <= k-1 and m >= 1");
    BranchingReport rep;
    rep.a = a;
    rep.m = m;
    rep.k = k;
    const std::string tag = params(a, m, k);
    rep.cardinality.name = "cardinality " + tag;
    rep.commutation.name = "crystal commutation " + tag;
    rep.xi_commutation.name = "xi commutation " + tag;
    rep.content.name = "content " + tag;

    const std::vector<Tableau> whole = enumerate_ssyt(rectangle(a, m), k);
    rep.total = whole.size();
    const std::set<Tableau> whole_set(whole.begin(), whole.end());
    std::set<Tableau> images;

    std::size_t sum = 0;
    for (int j = 0; j <= m; ++j) {
        const std::vector<Tableau> family = enumerate_ssyt(branch_shape(a, m, j), k - 1);
        rep.sizes.push_back(family.size());
        sum += family.size();
        for (const Tableau& b : family) {
            const Tableau img = phi_j(b, j, a, m, k);
            rep.cardinality.expect(whole_set.count(img) == 1,
                                   [&] { return "image " + img.to_string() + " not in SSYT((m^a),k)"; });
            rep.cardinality.expect(images.insert(img).second,
                                   [&] { return "image " + img.to_string() + " hit twice"; });
            const auto [jj, back] = strip_decompose(img, k);
            rep.cardinality.expect(jj == j && back == b,
                                   [&] { return "strip_decompose does not invert phi_j at " + b.to_string(); });

            for (int i = 1; i <= k - 2; ++i) {
                const auto fb = f_tilde(b, i);
                const auto f_lhs = fb ? std::optional<Tableau>(phi_j(*fb, j, a, m, k)) : std::nullopt;
                const auto f_rhs = f_tilde(img, i);
                rep.commutation.expect(f_lhs == f_rhs, [&] {
                    return "phi_j(f" + std::to_string(i) + " b) = " + show(f_lhs) + " but f" +
                           std::to_string(i) + "(phi_j b) = " + show(f_rhs) + " for b = " + b.to_string();
                });
                const auto eb = e_tilde(b, i);
                const auto e_lhs = eb ? std::optional<Tableau>(phi_j(*eb, j, a, m, k)) : std::nullopt;
                const auto e_rhs = e_tilde(img, i);
                rep.commutation.expect(e_lhs == e_rhs, [&] {
                    return "phi_j(e" + std::to_string(i) + " b) = " + show(e_lhs) + " but e" +
                           std::to_string(i) + "(phi_j b) = " + show(e_rhs) + " for b = " + b.to_string();
                });
            }

            const Tableau xi_lhs = phi_j(partial_xi(b, k - 1), j, a, m, k);
            const Tableau xi_rhs = partial_xi(img, k - 1);
            rep.xi_commutation.expect(xi_lhs == xi_rhs, [&] {
                return "phi_j(xi b) = " + xi_lhs.to_string() + " but xi(phi_j b) = " + xi_rhs.to_string();
            });

            std::vector<int> expected = content(b, k - 1);
            expected.push_back(j);
            rep.content.expect(content(img, k) == expected,
                               [&] { return "content bookkeeping fails at " + img.to_string(); });
        }
    }
    rep.cardinality.expect(sum == rep.total, [&] {
        return "sum of family sizes " + std::to_string(sum) + " != " + std::to_string(rep.total);
    });
    rep.cardinality.expect(images.size() == whole_set.size(), "images do not cover SSYT((m^a),k)");
    for (const Tableau& t : whole) {
        const auto [j, b] = strip_decompose(t, k);
        rep.cardinality.expect(phi_j(b, j, a, m, k) == t,
                               [&] { return "phi_j does not invert strip_decompose at " + t.to_string(); });
    }
    return rep;
}

}  // namespace tabcrystal
