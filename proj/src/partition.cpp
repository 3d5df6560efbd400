#include "tabcrystal/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tabcrystal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

bool Partition::is_rectangular() const {
    return parts_.empty() || parts_.front() == parts_.back();
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c)
            ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj));
}

std::vector<int> Partition::padded(int len) const {
    if (len < length())
        throw std::invalid_argument("cannot pad partition " + to_string() + " to length " +
                                    std::to_string(len));
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(len), 0);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition partition_from_weight(std::span<const int> l) {
    std::vector<int> parts(l.size(), 0);
    int acc = 0;
    for (std::size_t i = l.size(); i-- > 0;) {
        if (l[i] < 0)
            throw std::invalid_argument("weight coordinates must be nonnegative");
        acc += l[i];
        parts[i] = acc;
    }
    return Partition(std::move(parts));
}

Partition rectangle(int a, int m) {
    if (a < 1 || m < 1)
        throw std::invalid_argument("rectangle needs a >= 1 and m >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(a), m));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(n, n, max_length, cur, out);
    return out;
}

std::vector<Cell> hooks_and_contents(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(lambda.size()));
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
            const int arm = lambda[static_cast<std::size_t>(r)] - c - 1;
            const int leg = conj[static_cast<std::size_t>(c)] - r - 1;
            cells.push_back({r + 1, c + 1, c - r, arm + leg + 1});
        }
    }
    return cells;
}

std::uint64_t hook_length_formula(const Partition& lambda) {
    if (lambda.size() > 20)
        throw std::overflow_error("hook_length_formula supports |lambda| <= 20");
    std::uint64_t num = 1;
    for (int i = 2; i <= lambda.size(); ++i)
        num *= static_cast<std::uint64_t>(i);
    std::uint64_t den = 1;
    for (const Cell& cell : hooks_and_contents(lambda))
        den *= static_cast<std::uint64_t>(cell.hook);
    return num / den;
}

}  // namespace tabcrystal
