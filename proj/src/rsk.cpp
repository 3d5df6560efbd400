#include "tabcrystal/rsk.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tabcrystal {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation word");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::cycle(int n, const std::vector<int>& c) {
    std::vector<int> w = identity(n).word_;
    for (std::size_t t = 0; t < c.size(); ++t)
        w[static_cast<std::size_t>(c[t] - 1)] = c[(t + 1) % c.size()];
    return Permutation(std::move(w));
}

Permutation Permutation::embedded(int n) const {
    if (n < size())
        throw std::invalid_argument("cannot embed into a smaller symmetric group");
    std::vector<int> w = word_;
    for (int x = size() + 1; x <= n; ++x)
        w.push_back(x);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& w, const Permutation& s) {
    if (w.size() != s.size())
        throw std::invalid_argument("composing permutations of different degrees");
    std::vector<int> out(w.word_.size());
    for (int x = 1; x <= w.size(); ++x)
        out[static_cast<std::size_t>(x - 1)] = w(s(x));
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < word_.size(); ++i)
        os << (i ? "," : "") << word_[i];
    os << ')';
    return os.str();
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int step = 1; step <= w.size(); ++step) {
        int x = w(step);
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({step});
                break;
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(step);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {Tableau(std::move(p), w.size()), Tableau(std::move(q), w.size())};
}

Tableau superstandard_q(int a, int m) {
    if (a < 1 || m < 1)
        throw std::invalid_argument("superstandard_q needs a, m >= 1");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(a), std::vector<int>(static_cast<std::size_t>(m)));
    for (int r = 0; r < a; ++r)
        for (int col = 1; col <= m; ++col)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col - 1)] = col * a - a + 1 + r;
    return Tableau(std::move(rows), a * m);
}

std::vector<Permutation> cell_members(const Tableau& q, int n) {
    if (n > 10)
        throw std::invalid_argument("cell_members filters S_n and is capped at n = 10");
    if (q.size() != n || !q.is_standard())
        throw std::invalid_argument("cell_members needs a standard tableau with n boxes");
    std::vector<Permutation> out;
    std::vector<int> word = Permutation::identity(n).one_line();
    do {
        Permutation w(word);
        if (rsk(w).second == q)
            out.push_back(std::move(w));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

Permutation phi_cell(const Permutation& x, int a, int m) {
    const int n = m * a;
    if (x.size() != n - 1)
        throw std::invalid_argument("phi_cell needs a permutation of S_{ma-1}");
    std::vector<int> c;
    for (int t = 0; t < a; ++t)
        c.push_back(n - t);
    return x.embedded(n) * Permutation::cycle(n, c);
}

Tableau remove_max_entry(const Tableau& t) {
    std::vector<std::vector<int>> rows = t.rows();
    const int mx = t.max_entry();
    for (auto& row : rows) {
        if (!row.empty() && row.back() == mx) {
            row.pop_back();
            break;
        }
    }
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    return Tableau(std::move(rows), t.bound() - 1);
}

CellReport verify_cell_bijection(int a, int m) {
    CellReport rep;
    rep.a = a;
    rep.m = m;
    const int n = a * m;
    const std::string tag = "a=" + std::to_string(a) + " m=" + std::to_string(m);
    rep.bijection.name = "cell bijection " + tag;
    rep.insertion.name = "insertion tableau " + tag;
    rep.hook_count = hook_length_formula(rectangle(a, m));

    const Tableau q = superstandard_q(a, m);
    const Tableau q_hat = remove_max_entry(q);
    const std::vector<Permutation> source = cell_members(q_hat, n - 1);
    const std::vector<Permutation> target = cell_members(q, n);
    rep.source_size = source.size();
    rep.target_size = target.size();

    std::set<Permutation> images;
    for (const Permutation& x : source) {
        const Permutation y = phi_cell(x, a, m);
        const auto [p_y, q_y] = rsk(y);
        rep.bijection.expect(q_y == q, [&] {
            return "phi(" + x.to_string() + ") = " + y.to_string() + " has recording tableau " + q_y.to_string();
        });
        rep.bijection.expect(images.insert(y).second, [&] { return "phi is not injective at " + x.to_string(); });
        const Tableau p_x = rsk(x).first;
        const Tableau p_trim = remove_max_entry(p_y);
        rep.insertion.expect(p_trim == p_x, [&] {
            return "P(phi(" + x.to_string() + ")) minus corner = " + p_trim.to_string() + " but P(x) = " +
                   p_x.to_string();
        });
    }
    rep.bijection.expect(images.size() == target.size(), [&] {
        return "image has " + std::to_string(images.size()) + " elements, target cell has " +
               std::to_string(target.size());
    });
    return rep;
}

}  // namespace tabcrystal
