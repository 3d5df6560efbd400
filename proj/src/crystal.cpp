#include "tabcrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tabcrystal {

namespace {

void check_color(const Tableau& t, int i) {
    if (t.is_skew())
        throw std::invalid_argument("crystal operators need a straight shape");
    if (i < 1 || i >= t.bound())
        throw std::out_of_range("color " + std::to_string(i) + " outside 1.." +
                                std::to_string(t.bound() - 1));
}

std::string seq_to_string(const std::vector<std::pair<int, int>>& ops) {
    std::ostringstream os;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        os << "f" << it->first << "^" << it->second << ' ';
    return os.str();
}

// ops applied front to back: {color, power}.
std::optional<Tableau> apply_ops(Tableau t, const std::vector<std::pair<int, int>>& ops) {
    for (auto [color, power] : ops) {
        for (int p = 0; p < power; ++p) {
            auto next = f_tilde(t, color);
            if (!next)
                return std::nullopt;
            t = std::move(*next);
        }
    }
    return t;
}

}  // namespace

std::vector<int> pair_cancel(const Tableau& t, int i) {
    check_color(t, i);
    const std::vector<int> w = reading_word(t);
    const int n = static_cast<int>(w.size());

    // Doubly-linked list over surviving labels; index 0 and n+1 are sentinels.
    std::vector<int> next(static_cast<std::size_t>(n + 2)), prev(static_cast<std::size_t>(n + 2));
    auto entry = [&](int label) { return w[static_cast<std::size_t>(label - 1)]; };
    int last = 0;
    for (int label = 1; label <= n; ++label) {
        const int v = entry(label);
        if (v != i && v != i + 1)
            continue;
        next[static_cast<std::size_t>(last)] = label;
        prev[static_cast<std::size_t>(label)] = last;
        last = label;
    }
    next[static_cast<std::size_t>(last)] = n + 1;
    prev[static_cast<std::size_t>(n + 1)] = last;

    int j = next[0];
    while (j != n + 1) {
        const int jn = next[static_cast<std::size_t>(j)];
        if (jn != n + 1 && entry(j) == i && entry(jn) == i + 1) {
            const int before = prev[static_cast<std::size_t>(j)];
            const int after = next[static_cast<std::size_t>(jn)];
            next[static_cast<std::size_t>(before)] = after;
            prev[static_cast<std::size_t>(after)] = before;
            // the removal may make `before` consecutive with `after`
            j = before == 0 ? after : before;
        } else {
            j = jn;
        }
    }

    std::vector<int> survivors;
    for (int label = next[0]; label != n + 1; label = next[static_cast<std::size_t>(label)])
        survivors.push_back(label);
    return survivors;
}

std::optional<Tableau> f_tilde(const Tableau& t, int i) {
    const std::vector<int> s = pair_cancel(t, i);
    const std::vector<int> w = reading_word(t);
    auto it = std::find_if(s.begin(), s.end(),
                           [&](int label) { return w[static_cast<std::size_t>(label - 1)] == i; });
    if (it == s.end())
        return std::nullopt;
    const auto [row, col] = box_labeling(t.shape()).label_to_cell[static_cast<std::size_t>(*it - 1)];
    Tableau out(t);
    out.set(row, col, i + 1);
    return out;
}

std::optional<Tableau> e_tilde(const Tableau& t, int i) {
    const std::vector<int> s = pair_cancel(t, i);
    const std::vector<int> w = reading_word(t);
    auto it = std::find_if(s.rbegin(), s.rend(),
                           [&](int label) { return w[static_cast<std::size_t>(label - 1)] == i + 1; });
    if (it == s.rend())
        return std::nullopt;
    const auto [row, col] = box_labeling(t.shape()).label_to_cell[static_cast<std::size_t>(*it - 1)];
    Tableau out(t);
    out.set(row, col, i);
    return out;
}

Tableau highest_weight_tableau(const Partition& lambda, int k) {
    if (k < lambda.length())
        throw std::invalid_argument("alphabet bound " + std::to_string(k) +
                                    " smaller than the length of " + lambda.to_string());
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < lambda.length(); ++r)
        rows.emplace_back(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), r + 1);
    return Tableau(std::move(rows), k);
}

std::optional<std::size_t> CrystalGraph::index_of(const Tableau& t) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
    if (it == vertices.end() || *it != t)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

CrystalGraph crystal_graph(const Partition& lambda, int k) {
    const Tableau root = highest_weight_tableau(lambda, k);
    std::map<Tableau, std::size_t> seen;
    std::vector<Tableau> order;
    std::vector<std::tuple<std::size_t, int, std::size_t>> raw_edges;
    std::deque<std::size_t> frontier;

    seen.emplace(root, 0);
    order.push_back(root);
    frontier.push_back(0);
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop_front();
        for (int i = 1; i < k; ++i) {
            auto next = f_tilde(order[v], i);
            if (!next)
                continue;
            auto [it, inserted] = seen.emplace(*next, order.size());
            if (inserted) {
                order.push_back(*next);
                frontier.push_back(it->second);
            }
            raw_edges.emplace_back(v, i, it->second);
        }
    }

    CrystalGraph g;
    g.k = k;
    std::vector<std::size_t> remap(order.size());
    std::size_t idx = 0;
    for (auto& [tab, discovery] : seen) {
        remap[discovery] = idx++;
        g.vertices.push_back(tab);
    }
    g.root = remap[0];
    for (auto [s, color, t] : raw_edges)
        g.edges.push_back({remap[s], color, remap[t]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"";
        for (int x : g.vertices[v].row_word())
            os << x;
        os << '"';
        if (v == g.root)
            os << ", shape=box";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.color << "\"];\n";
    os << "}\n";
    return os.str();
}

std::optional<Tableau> apply_f_sequence(int a, int m, int k, const FjSequence& seq) {
    if (seq.a != a)
        throw std::invalid_argument("sequence start color must equal a");
    if (a < 1 || seq.last_color() > k - 1 || seq.entries.empty())
        throw std::invalid_argument("need a <= a' <= k-1");
    std::vector<std::pair<int, int>> ops;
    for (std::size_t idx = 0; idx < seq.entries.size(); ++idx)
        ops.emplace_back(a + static_cast<int>(idx), seq.entries[idx]);
    return apply_ops(highest_weight_tableau(rectangle(a, m), k), ops);
}

Tableau staircase_tableau(int a, int m, int k, const FjSequence& seq) {
    const Partition lambda = rectangle(a, m);
    const BoxLabeling lab = box_labeling(lambda);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(a), std::vector<int>(static_cast<std::size_t>(m), 0));
    auto assign = [&](int first_label, int last_label, int value) {
        for (int label = first_label; label <= last_label; ++label) {
            auto [r, c] = lab.label_to_cell[static_cast<std::size_t>(label - 1)];
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
        }
    };
    for (int i = 1; i <= a - 1; ++i)
        assign((i - 1) * m + 1, i * m, i);
    const int last = seq.last_color();
    auto c = [&](int i) {
        if (i == a - 1)
            return m;
        if (i == last + 1)
            return 0;
        return seq.entries[static_cast<std::size_t>(i - a)];
    };
    for (int i = a; i <= last + 1; ++i)
        assign((a - 1) * m + c(i) + 1, (a - 1) * m + c(i - 1), i);
    return Tableau(std::move(rows), k);
}

VerificationReport verify_lemma_zero(int a, int m, int k) {
    if (a < 1 || a > k - 1 || m < 1)
        throw std::invalid_argument("verify_lemma_zero needs 1 <= a <= k-1 and m >= 1");
    VerificationReport rep;
    rep.name = "lemma-zero a=" + std::to_string(a) + " m=" + std::to_string(m) +
               " k=" + std::to_string(k);
    const Tableau top = highest_weight_tableau(rectangle(a, m), k);

    // (1) nonvanishing exactly on staircase sequences, with the closed form.
    for (int last = a; last <= k - 1; ++last) {
        FjSequence seq{a, std::vector<int>(static_cast<std::size_t>(last - a + 1), 0)};
        while (true) {
            bool staircase = seq.entries.front() <= m;
            for (std::size_t t = 1; t < seq.entries.size(); ++t)
                staircase = staircase && seq.entries[t - 1] >= seq.entries[t];
            const auto result = apply_f_sequence(a, m, k, seq);
            rep.expect(result.has_value() == staircase, [&] {
                std::ostringstream os;
                os << "item (1): sequence (";
                for (int c : seq.entries)
                    os << c << ' ';
                os << ") staircase=" << staircase << " but result "
                   << (result ? result->to_string() : "null");
                return os.str();
            });
            if (result && staircase) {
                const Tableau expected = staircase_tableau(a, m, k, seq);
                rep.expect(*result == expected && result->is_semistandard(), [&] {
                    return "closed form mismatch: got " + result->to_string() + " expected " +
                           expected.to_string();
                });
            }
            // odometer over entries in 0..m+1
            std::size_t pos = 0;
            while (pos < seq.entries.size() && seq.entries[pos] == m + 1)
                seq.entries[pos++] = 0;
            if (pos == seq.entries.size())
                break;
            ++seq.entries[pos];
        }
    }

    auto describe = [](const char* item, const std::vector<std::pair<int, int>>& ops, bool want_null) {
        return std::string(item) + ": " + seq_to_string(ops) + "should be " +
               (want_null ? "null" : "nonzero");
    };

    for (int j = 0; j <= m; ++j) {
        // (2) f_{a'} f_{a'+1}^j ... f_a^j T = 0 for a+1 <= a' <= k-2.
        for (int ap = a + 1; ap <= k - 2; ++ap) {
            std::vector<std::pair<int, int>> ops;
            for (int c = a; c <= ap + 1; ++c)
                ops.emplace_back(c, j);
            ops.emplace_back(ap, 1);
            rep.expect(!apply_ops(top, ops), [&] { return describe("item (2)", ops, true); });
        }
        // (3) f_{a-1}^j f_a^j T != 0 and f_{a-1}^{j+1} f_a^j T = 0.
        if (a >= 2) {
            std::vector<std::pair<int, int>> ops{{a, j}, {a - 1, j}};
            rep.expect(apply_ops(top, ops).has_value(), [&] { return describe("item (3)", ops, false); });
            ops.back().second = j + 1;
            rep.expect(!apply_ops(top, ops), [&] { return describe("item (3)", ops, true); });
        }
        // (4) f_a^{m-j} f_{a+1}^j f_a^j T != 0 and f_a^{m-j+1} f_{a+1}^j f_a^j T = 0.
        if (a <= k - 2) {
            std::vector<std::pair<int, int>> ops{{a, j}, {a + 1, j}, {a, m - j}};
            rep.expect(apply_ops(top, ops).has_value(), [&] { return describe("item (4)", ops, false); });
            ops.back().second = m - j + 1;
            rep.expect(!apply_ops(top, ops), [&] { return describe("item (4)", ops, true); });
        }
    }
    return rep;
}

}  // namespace tabcrystal
