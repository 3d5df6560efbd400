#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tabcrystal/partition.hpp"

namespace tabcrystal {

/// A filling of a (possibly skew) Young diagram outer/inner.
///
/// Rows are stored at full outer length; cells of the inner shape hold 0 and
/// are never read as entries. The alphabet bound is metadata: it takes part in
/// neither equality nor ordering. Ordering compares shapes first, then the
/// row-reading word (top row first, left to right), which is the canonical
/// tableau order used everywhere in the library.
class Tableau {
public:
    Tableau() = default;

    /// Straight shape from rows. Throws std::invalid_argument if the row
    /// lengths are not a partition or an entry is < 1.
    explicit Tableau(std::vector<std::vector<int>> rows, int bound = 0);

    /// Skew shape. `rows[r]` has outer[r] slots; the first inner[r] are ignored.
    Tableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows, int bound = 0);

    const Partition& shape() const { return shape_; }
    const Partition& inner() const { return inner_; }
    bool is_skew() const { return !inner_.empty(); }

    /// Number of filled cells.
    int size() const { return shape_.size() - inner_.size(); }

    /// 0-based access; the cell must lie in outer/inner.
    int at(int row, int col) const {
        return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
    void set(int row, int col, int value) {
        rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
    }
    bool has_cell(int row, int col) const {
        return shape_.contains_cell(row, col) && !inner_.contains_cell(row, col);
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int bound() const { return bound_; }
    /// Copy with a different alphabet bound; entries are untouched.
    Tableau with_bound(int bound) const;

    int max_entry() const;

    /// Entries read row by row, top to bottom, left to right.
    std::vector<int> row_word() const;

    bool is_semistandard() const;
    /// Semistandard with entries exactly 1..size() once each.
    bool is_standard() const;

    std::string to_string() const;

    friend bool operator==(const Tableau& x, const Tableau& y) {
        return x.shape_ == y.shape_ && x.inner_ == y.inner_ && x.rows_ == y.rows_;
    }
    friend std::strong_ordering operator<=>(const Tableau& x, const Tableau& y) {
        if (auto c = x.shape_ <=> y.shape_; c != 0)
            return c;
        if (auto c = x.inner_ <=> y.inner_; c != 0)
            return c;
        return x.rows_ <=> y.rows_;
    }

private:
    void validate_layout() const;

    Partition shape_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
    int bound_ = 0;
};

/// Label -> box assignment: row i carries labels lambda_1+...+lambda_{i-1}+1
/// through lambda_1+...+lambda_i, increasing from right to left.
struct BoxLabeling {
    /// label_to_cell[label - 1] = {row, col}, 0-based.
    std::vector<std::pair<int, int>> label_to_cell;
    /// cell_to_label[row][col] = label (1-based).
    std::vector<std::vector<int>> cell_to_label;
};

BoxLabeling box_labeling(const Partition& lambda);

/// w_T(j) for labels j = 1..|shape|, returned 0-based by label.
std::vector<int> reading_word(const Tableau& t);

/// Every SSYT of shape lambda with entries <= k, in canonical order.
/// Empty when k < length(lambda).
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int k);

/// Every standard tableau of shape lambda in canonical order; bound = |lambda|.
std::vector<Tableau> enumerate_syt(const Partition& lambda);

/// Multiplicity of each entry 1..k.
std::vector<int> content(const Tableau& t, int k);

}  // namespace tabcrystal
