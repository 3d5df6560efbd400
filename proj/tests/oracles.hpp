#pragma once

// Brute-force reference implementations used by the unit and acceptance tests.
// They work on raw vectors and share no code with the library beyond plain
// data types, so a bug in the library cannot hide in both places.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<int>>;
using Poly = std::map<int, std::int64_t>;  // exponent -> coefficient, zero terms dropped

inline Poly& add_term(Poly& p, int e, std::int64_t c) {
    if ((p[e] += c) == 0)
        p.erase(e);
    return p;
}

inline Poly shift_to_zero(const Poly& p) {
    if (p.empty())
        return p;
    Poly out;
    const int low = p.begin()->first;
    for (auto [e, c] : p)
        out[e - low] = c;
    return out;
}

inline int total(const std::vector<int>& shape) {
    return std::accumulate(shape.begin(), shape.end(), 0);
}

inline bool semistandard(const Grid& g) {
    for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = 0; c < g[r].size(); ++c) {
            if (c > 0 && g[r][c - 1] > g[r][c])
                return false;
            if (r > 0 && g[r - 1][c] >= g[r][c])
                return false;
        }
    return true;
}

/// Every filling of `shape` with entries 1..k, filtered for semistandardness.
inline std::vector<Grid> all_ssyt(const std::vector<int>& shape, int k) {
    const int n = total(shape);
    std::vector<int> digits(static_cast<std::size_t>(n), 1);
    std::vector<Grid> out;
    if (k < 1 && n > 0)
        return out;
    for (;;) {
        Grid g;
        std::size_t pos = 0;
        for (int len : shape) {
            g.emplace_back(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                           digits.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
            pos += static_cast<std::size_t>(len);
        }
        if (semistandard(g))
            out.push_back(std::move(g));
        int i = n - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == k)
            digits[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            break;
        ++digits[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every arrangement of 1..n in `shape`, filtered for standardness.
inline std::vector<Grid> all_syt(const std::vector<int>& shape) {
    const int n = total(shape);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Grid> out;
    do {
        Grid g;
        std::size_t pos = 0;
        for (int len : shape) {
            g.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                           perm.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
            pos += static_cast<std::size_t>(len);
        }
        if (semistandard(g))
            out.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Hook of each cell, row-major, by walking right and down.
inline std::vector<int> hooks(const std::vector<int>& shape) {
    std::vector<int> out;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int arm = shape[r] - c - 1;
            int leg = 0;
            for (std::size_t r2 = r + 1; r2 < shape.size() && shape[r2] > c; ++r2)
                ++leg;
            out.push_back(arm + leg + 1);
        }
    return out;
}

/// sum over SSYT(shape, k) of q^{sum(entry - 1)}, shifted to constant term 1.
inline Poly principal_spec(const std::vector<int>& shape, int k) {
    Poly p;
    for (const Grid& g : all_ssyt(shape, k)) {
        int e = 0;
        for (const auto& row : g)
            for (int v : row)
                e += v - 1;
        add_term(p, e, 1);
    }
    return shift_to_zero(p);
}

inline int row_of(const Grid& g, int value) {
    for (std::size_t r = 0; r < g.size(); ++r)
        if (std::find(g[r].begin(), g[r].end(), value) != g[r].end())
            return static_cast<int>(r);
    return -1;
}

/// sum over SYT(shape) of q^{maj}, shifted to constant term 1. A descent is an
/// i with i+1 in a strictly lower row.
inline Poly syt_maj(const std::vector<int>& shape) {
    Poly p;
    const int n = total(shape);
    for (const Grid& g : all_syt(shape)) {
        int maj = 0;
        for (int i = 1; i < n; ++i)
            if (row_of(g, i + 1) > row_of(g, i))
                maj += i;
        add_term(p, maj, 1);
    }
    return shift_to_zero(p);
}

/// Gaussian binomial as a plain polynomial via q-Pascal:
/// [m, j] = [m-1, j-1] + q^j [m-1, j].
inline std::vector<std::int64_t> q_pascal(int m, int j) {
    if (j < 0 || j > m)
        return {};
    std::vector<std::vector<std::vector<std::int64_t>>> t(static_cast<std::size_t>(m + 1));
    for (int mm = 0; mm <= m; ++mm) {
        t[static_cast<std::size_t>(mm)].resize(static_cast<std::size_t>(mm + 1));
        for (int jj = 0; jj <= mm; ++jj) {
            auto& cell = t[static_cast<std::size_t>(mm)][static_cast<std::size_t>(jj)];
            if (jj == 0 || jj == mm) {
                cell = {1};
                continue;
            }
            const auto& left = t[static_cast<std::size_t>(mm - 1)][static_cast<std::size_t>(jj - 1)];
            const auto& up = t[static_cast<std::size_t>(mm - 1)][static_cast<std::size_t>(jj)];
            cell.assign(std::max(left.size(), up.size() + static_cast<std::size_t>(jj)), 0);
            for (std::size_t e = 0; e < left.size(); ++e)
                cell[e] += left[e];
            for (std::size_t e = 0; e < up.size(); ++e)
                cell[e + static_cast<std::size_t>(jj)] += up[e];
        }
    }
    return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

/// Value of p at exp(2 pi i power / m) in floating point.
inline std::complex<double> eval_complex(const Poly& p, int m, int power) {
    const double pi = std::acos(-1.0);
    std::complex<double> z = 0;
    for (auto [e, c] : p)
        z += static_cast<double>(c) * std::polar(1.0, 2.0 * pi * e * power / m);
    return z;
}

/// Row-insertion of a word (with repeats); returns the insertion tableau.
inline Grid insert_word(const std::vector<int>& word) {
    Grid p;
    for (int x : word) {
        for (std::size_t r = 0;; ++r) {
            if (r == p.size()) {
                p.push_back({x});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    return p;
}

/// Recording tableau of row insertion.
inline Grid recording(const std::vector<int>& word) {
    Grid p, q;
    for (std::size_t step = 0; step < word.size(); ++step) {
        int x = word[step];
        for (std::size_t r = 0;; ++r) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({static_cast<int>(step) + 1});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                q[r].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(x, *it);
        }
    }
    return q;
}

/// Rows read right to left, top to bottom (the crystal reading order).
inline std::vector<int> reversed_rows_word(const Grid& g) {
    std::vector<int> w;
    for (const auto& row : g)
        w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

/// Rectification of a skew tableau: insert its rows bottom to top, each left
/// to right. Inner cells are marked 0.
inline Grid rectify_by_insertion(const Grid& skew) {
    std::vector<int> w;
    for (auto r = skew.rbegin(); r != skew.rend(); ++r)
        for (int v : *r)
            if (v != 0)
                w.push_back(v);
    return insert_word(w);
}

/// Evacuation on the alphabet 1..i: rotate by 180 degrees, complement, rectify.
/// The rotated skew tableau's bottom-to-top, left-to-right word is the
/// complement of the reversed-rows word.
inline Grid evacuate(const Grid& g, int i) {
    std::vector<int> w = reversed_rows_word(g);
    for (int& v : w)
        v = i + 1 - v;
    return insert_word(w);
}

/// Promotion by sliding: delete the 1s, slide the holes to the outer rim,
/// decrement, fill the vacated cells with k.
inline Grid slide_promotion(Grid g, int k) {
    const int inf = 1 << 29;
    for (auto& row : g)
        for (int& v : row)
            if (v == 1)
                v = 0;
    // Slide holes one at a time, starting from the rightmost 0 in the lowest row.
    for (;;) {
        int hr = -1, hc = -1;
        for (int r = static_cast<int>(g.size()) - 1; r >= 0 && hr < 0; --r)
            for (int c = static_cast<int>(g[static_cast<std::size_t>(r)].size()) - 1; c >= 0; --c)
                if (g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0) {
                    hr = r;
                    hc = c;
                    break;
                }
        if (hr < 0)
            break;
        for (;;) {
            auto cell = [&](int r, int c) {
                if (r >= static_cast<int>(g.size()) || c >= static_cast<int>(g[static_cast<std::size_t>(r)].size()))
                    return inf;
                const int v = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                return v == -1 ? inf : v;
            };
            const int right = cell(hr, hc + 1);
            const int below = cell(hr + 1, hc);
            if (right == inf && below == inf) {
                g[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] = -1;  // vacated outer cell
                break;
            }
            if (below <= right) {
                g[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] = below;
                ++hr;
            } else {
                g[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] = right;
                ++hc;
            }
            g[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] = 0;
        }
    }
    for (auto& row : g)
        for (int& v : row)
            v = v == -1 ? k : v - 1;
    return g;
}

/// Bracket rule by a stack on the reversed-rows word: each i+1 cancels the
/// nearest unmatched i to its left. Returns word positions of unmatched letters.
struct Unmatched {
    std::vector<std::size_t> lower;  // unmatched i, increasing
    std::vector<std::size_t> upper;  // unmatched i+1, increasing
};

inline Unmatched bracket(const std::vector<int>& w, int i) {
    Unmatched u;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i) {
            u.lower.push_back(p);
        } else if (w[p] == i + 1) {
            if (!u.lower.empty())
                u.lower.pop_back();
            else
                u.upper.push_back(p);
        }
    }
    return u;
}

/// Position in a grid of the p-th letter of the reversed-rows word.
inline std::pair<std::size_t, std::size_t> word_cell(const Grid& g, std::size_t p) {
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (p < g[r].size())
            return {r, g[r].size() - 1 - p};
        p -= g[r].size();
    }
    return {0, 0};
}

inline bool f_op(Grid& g, int i) {
    const Unmatched u = bracket(reversed_rows_word(g), i);
    if (u.lower.empty())
        return false;
    auto [r, c] = word_cell(g, u.lower.front());
    g[r][c] = i + 1;
    return true;
}

inline bool e_op(Grid& g, int i) {
    const Unmatched u = bracket(reversed_rows_word(g), i);
    if (u.upper.empty())
        return false;
    auto [r, c] = word_cell(g, u.upper.back());
    g[r][c] = i;
    return true;
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::int64_t b = 1;
    for (int t = 1; t <= k; ++t)
        b = b * (n - k + t) / t;
    return b;
}

/// Longest increasing subsequence length, the first row of the RSK shape.
inline int lis(const std::vector<int>& w) {
    std::vector<int> tails;
    for (int x : w) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

}  // namespace oracle
