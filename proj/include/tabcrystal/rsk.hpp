#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tabcrystal/report.hpp"
#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

/// Permutation of {1..n} in one-line notation. Composition is functional:
/// (w * s)(x) = w(s(x)), so s acts first.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless the word is a bijection of 1..n.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    /// The cycle c[0] -> c[1] -> ... -> c.back() -> c[0] in S_n.
    static Permutation cycle(int n, const std::vector<int>& c);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int x) const { return word_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& one_line() const { return word_; }

    /// The same permutation in S_n, n >= size(), fixing the new points.
    Permutation embedded(int n) const;
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& w, const Permutation& s);
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> word_;
};

/// Row-insertion RSK: (insertion tableau P, recording tableau Q).
std::pair<Tableau, Tableau> rsk(const Permutation& w);

/// Standard tableau of shape (m^a) whose column i holds ia-a+1, ..., ia.
Tableau superstandard_q(int a, int m);

/// All w in S_n whose recording tableau is Q, by filtering S_n.
/// Q must be standard with n boxes; n is capped at 10.
std::vector<Permutation> cell_members(const Tableau& q, int n);

/// x -> x * (ma, ma-1, ..., ma-a+1), with x in S_{ma-1} embedded in S_{ma}.
Permutation phi_cell(const Permutation& x, int a, int m);

/// Removes the cell holding the largest entry of a standard tableau.
Tableau remove_max_entry(const Tableau& t);

struct CellReport {
    int a = 0;
    int m = 0;
    std::size_t source_size = 0;   // |C^|, recording tableau Q^
    std::size_t target_size = 0;   // |C|, recording tableau Q
    std::uint64_t hook_count = 0;  // f^{(m^a)} by the hook length formula
    VerificationReport bijection;
    VerificationReport insertion;  // P(phi(x)) minus its corner equals P(x)

    bool passed() const {
        return bijection.passed() && insertion.passed() && source_size == hook_count &&
               target_size == hook_count;
    }
};

CellReport verify_cell_bijection(int a, int m);

}  // namespace tabcrystal
