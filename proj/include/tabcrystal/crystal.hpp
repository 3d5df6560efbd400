#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tabcrystal/report.hpp"
#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

/// Labels (1-based, increasing) left after dropping every label whose entry
/// is not i or i+1 and then repeatedly cancelling consecutive labels j < j'
/// with w(j) = i, w(j') = i+1.
std::vector<int> pair_cancel(const Tableau& t, int i);

/// Kashiwara lowering operator; nullopt plays the role of the zero vector.
std::optional<Tableau> f_tilde(const Tableau& t, int i);
/// Kashiwara raising operator.
std::optional<Tableau> e_tilde(const Tableau& t, int i);

/// Row i filled with i.
Tableau highest_weight_tableau(const Partition& lambda, int k);

struct CrystalEdge {
    std::size_t source;
    int color;
    std::size_t target;
    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    int k = 0;
    std::vector<Tableau> vertices;  // canonical order
    std::vector<CrystalEdge> edges; // sorted by (source, color)
    std::size_t root = 0;

    std::optional<std::size_t> index_of(const Tableau& t) const;
};

/// Closure of the highest-weight tableau under every f_tilde.
CrystalGraph crystal_graph(const Partition& lambda, int k);

/// Graphviz rendering: vertices labelled by row words, edges by color.
std::string to_dot(const CrystalGraph& g);

/// (c_a, ..., c_a') applied as f_a'^{c_a'} ... f_a^{c_a}.
struct FjSequence {
    int a = 1;
    std::vector<int> entries;
    int last_color() const { return a + static_cast<int>(entries.size()) - 1; }
};

/// Applies the sequence to the highest-weight tableau of rectangle(a, m).
std::optional<Tableau> apply_f_sequence(int a, int m, int k, const FjSequence& seq);

/// Closed-form tableau for a staircase sequence m >= c_a >= ... >= c_a' >= 0:
/// labels (i-1)m+1..im carry i for i < a, and labels (a-1)m+c_i+1..(a-1)m+c_{i-1}
/// carry i for a <= i <= a'+1, with c_{a-1} = m and c_{a'+1} = 0.
Tableau staircase_tableau(int a, int m, int k, const FjSequence& seq);

/// Exhaustive check of the vanishing pattern of f-sequences on rectangle(a, m).
VerificationReport verify_lemma_zero(int a, int m, int k);

}  // namespace tabcrystal
