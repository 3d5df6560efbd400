#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tabcrystal {

/// Integer partition, stored without trailing zeros.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and
    /// nonnegative. Trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }

    /// Part i (0-based); zero past the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based cell membership.
    bool contains_cell(int row, int col) const {
        return row >= 0 && col >= 0 && col < (*this)[static_cast<std::size_t>(row)];
    }
    bool contains(const Partition& inner) const;
    bool is_rectangular() const;
    Partition conjugate() const;

    /// Parts padded with zeros to exactly `len` entries; throws if len < length().
    std::vector<int> padded(int len) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// lambda_i = l_i + ... + l_{k-1} for the dominant weight sum l_i omega_i.
Partition partition_from_weight(std::span<const int> l);

/// The a x m rectangle (m^a).
Partition rectangle(int a, int m);

/// All partitions of n in reverse lexicographic order, optionally bounded in length.
std::vector<Partition> partitions_of(int n, int max_length = -1);

struct Cell {
    int row;      // 1-based
    int col;      // 1-based
    int content;  // col - row
    int hook;
};

/// One Cell per box, row-major.
std::vector<Cell> hooks_and_contents(const Partition& lambda);

/// |lambda|! / prod hooks, the number of standard tableaux of shape lambda.
std::uint64_t hook_length_formula(const Partition& lambda);

}  // namespace tabcrystal
