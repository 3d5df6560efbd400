#include "tabcrystal/sieving.hpp"

#include <algorithm>
#include <numeric>

#include "tabcrystal/branching.hpp"
#include "tabcrystal/jdt.hpp"

namespace tabcrystal {

std::map<std::size_t, std::size_t> OrbitDecomposition::size_multiset() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& c : cycles)
        ++out[c.size()];
    return out;
}

std::size_t OrbitDecomposition::fixed_points(std::int64_t d) const {
    std::size_t fixed = 0;
    for (const auto& c : cycles)
        if (d % static_cast<std::int64_t>(c.size()) == 0)
            fixed += c.size();
    return fixed;
}

std::size_t OrbitDecomposition::order() const {
    std::size_t l = 1;
    for (const auto& c : cycles)
        l = std::lcm(l, c.size());
    return l;
}

OrbitDecomposition orbits(const std::vector<Tableau>& set, const TableauAction& action) {
    auto index_of = [&](const Tableau& t) -> std::size_t {
        auto it = std::lower_bound(set.begin(), set.end(), t);
        if (it == set.end() || *it != t)
            throw NotClosed("action leaves the set: image " + t.to_string());
        return static_cast<std::size_t>(it - set.begin());
    };
    std::vector<std::size_t> image(set.size());
    std::vector<char> hit(set.size(), 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        image[i] = index_of(action(set[i]));
        if (hit[image[i]])
            throw NotClosed("action is not injective: two elements map to " + set[image[i]].to_string());
        hit[image[i]] = 1;
    }
    OrbitDecomposition out;
    std::vector<char> seen(set.size(), 0);
    for (std::size_t start = 0; start < set.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> cycle;
        for (std::size_t x = start; !seen[x]; x = image[x]) {
            seen[x] = 1;
            cycle.push_back(x);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

std::size_t fixed_points_brute(const std::vector<Tableau>& set, const TableauAction& action, int d) {
    std::size_t fixed = 0;
    for (const Tableau& t : set) {
        Tableau cur(t);
        for (int i = 0; i < d; ++i)
            cur = action(cur);
        if (cur == t)
            ++fixed;
    }
    return fixed;
}

const char* to_string(CspMode mode) {
    return mode == CspMode::ssyt ? "ssyt" : "syt";
}

CspReport verify_csp_action(const std::vector<Tableau>& set, const TableauAction& g, int n,
                            const LaurentPoly& x) {
    if (n < 1)
        throw std::invalid_argument("group order must be positive");
    CspReport rep;
    rep.set_size = set.size();
    rep.order = n;
    rep.polynomial = x;
    rep.normalization = "given";
    const OrbitDecomposition orb = orbits(set, g);
    rep.orbit_sizes = orb.size_multiset();
    rep.orbit_count = orb.cycles.size();
    rep.order_ok = orb.fixed_points(n) == set.size();
    if (!rep.order_ok)
        rep.diagnostics = "g^" + std::to_string(n) + " is not the identity (orbit lcm " +
                          std::to_string(orb.order()) + ")";

    const CyclotomicContext ctx(n);
    bool all_match = rep.order_ok;
    bool all_integral = true;
    std::int64_t value_sum = 0;
    for (int d = 1; d <= n; ++d) {
        CspRow row;
        row.d = d;
        row.fixed = orb.fixed_points(d);
        try {
            row.value = ctx.evaluate(x, d);
            value_sum += *row.value;
            all_match = all_match && *row.value == static_cast<std::int64_t>(row.fixed);
        } catch (const NonIntegralValue& e) {
            all_integral = false;
            all_match = false;
            if (!rep.diagnostics)
                rep.diagnostics = e.what();
        }
        rep.rows.push_back(row);
    }
    rep.orbit_sum_ok = all_integral && value_sum == static_cast<std::int64_t>(n) *
                                                        static_cast<std::int64_t>(rep.orbit_count);
    rep.verdict = all_match;
    return rep;
}

CspReport verify_csp(const Partition& lambda, int k, CspMode mode) {
    if (lambda.empty() || !lambda.is_rectangular())
        throw std::invalid_argument("verify_csp needs a nonempty rectangle, got " + lambda.to_string());

    std::vector<Tableau> set;
    int n = 0;
    LaurentPoly x;
    if (mode == CspMode::ssyt) {
        if (k < lambda.length())
            throw std::invalid_argument("verify_csp: k must be at least the number of rows");
        set = enumerate_ssyt(lambda, k);
        n = k;
        x = principal_spec(lambda, k);
    } else {
        set = enumerate_syt(lambda);
        n = lambda.size();
        x = syt_q_count(lambda);
    }
    const TableauAction g = [n](const Tableau& t) { return promotion(t, n); };

    CspReport rep = verify_csp_action(set, g, n, x);
    rep.normalization = "constant-term-1";
    if (!rep.verdict && rep.order_ok) {
        CspReport shifted = verify_csp_action(set, g, n, x.shifted(partition_n(lambda)));
        if (shifted.verdict) {
            rep = std::move(shifted);
            rep.normalization = "shift-free";
        }
    }
    rep.shape = lambda;
    rep.k = mode == CspMode::ssyt ? k : n;
    rep.mode = mode;
    return rep;
}

int epsilon_sign(const Partition& lambda) {
    return partition_n(lambda) % 2 == 0 ? 1 : -1;
}

StembridgeReport verify_stembridge(const Partition& lambda, int k) {
    if (k < lambda.length())
        throw std::invalid_argument("verify_stembridge needs k >= length(lambda)");
    StembridgeReport rep;
    rep.shape = lambda;
    rep.k = k;
    rep.epsilon = epsilon_sign(lambda);

    const std::vector<Tableau> ssyt = enumerate_ssyt(lambda, k);
    rep.ssyt_count = ssyt.size();
    rep.ssyt_fixed = orbits(ssyt, [k](const Tableau& t) { return partial_xi(t, k); }).fixed_points(1);
    rep.ssyt_value = principal_spec(lambda, k).eval(-1);

    const int n = lambda.size();
    const std::vector<Tableau> syt = enumerate_syt(lambda);
    rep.syt_count = syt.size();
    rep.syt_fixed = orbits(syt, [n](const Tableau& t) { return partial_xi(t, n); }).fixed_points(1);
    rep.syt_value = syt_q_count(lambda).eval(-1);
    return rep;
}

bool SignReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SignRow& r) { return r.ok(); });
}

SignReport sign_identity(int a, int m, int k) {
    if (a < 1 || a > k - 1 || m < 1)
        throw std::invalid_argument("sign_identity needs 1 <= a <= k-1 and m >= 1");
    auto eps = [](const std::vector<int>& padded) {
        long long exponent = 0;
        for (std::size_t i = 0; i < padded.size(); ++i)
            exponent += static_cast<long long>(i) * padded[i];
        return exponent % 2 == 0 ? 1 : -1;
    };
    SignReport rep{a, m, k, {}};
    const int eps_rect = eps(rectangle(a, m).padded(k));
    for (int j = 0; j <= m; ++j) {
        SignRow row;
        row.j = j;
        row.eps_rect = eps_rect;
        row.eps_branch = eps(branch_shape(a, m, j).padded(k - 1));
        row.expected = ((a - 1) * j) % 2 == 0 ? 1 : -1;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace tabcrystal
