#include "tabcrystal/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tabcrystal {

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows)
        lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows, int bound)
    : shape_(shape_of_rows(rows)), rows_(std::move(rows)) {
    rows_.resize(static_cast<std::size_t>(shape_.length()));
    validate_layout();
    bound_ = std::max(bound, max_entry());
}

Tableau::Tableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows, int bound)
    : shape_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (!shape_.contains(inner_))
        throw std::invalid_argument("skew shape: inner " + inner_.to_string() +
                                    " not contained in outer " + shape_.to_string());
    rows_.resize(static_cast<std::size_t>(shape_.length()));
    for (int r = 0; r < shape_.length(); ++r) {
        auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_[static_cast<std::size_t>(r)])
            throw std::invalid_argument("skew tableau row length does not match outer shape");
        for (int c = 0; c < inner_[static_cast<std::size_t>(r)]; ++c)
            row[static_cast<std::size_t>(c)] = 0;
    }
    validate_layout();
    bound_ = std::max(bound, max_entry());
}

void Tableau::validate_layout() const {
    for (int r = 0; r < shape_.length(); ++r)
        for (int c = 0; c < shape_[static_cast<std::size_t>(r)]; ++c)
            if (has_cell(r, c) && at(r, c) < 1)
                throw std::invalid_argument("tableau entries must be positive");
}

Tableau Tableau::with_bound(int bound) const {
    Tableau copy(*this);
    copy.bound_ = std::max(bound, max_entry());
    return copy;
}

int Tableau::max_entry() const {
    int mx = 0;
    for (const auto& row : rows_)
        for (int v : row)
            mx = std::max(mx, v);
    return mx;
}

std::vector<int> Tableau::row_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(size()));
    for (int r = 0; r < shape_.length(); ++r)
        for (int c = inner_[static_cast<std::size_t>(r)]; c < shape_[static_cast<std::size_t>(r)]; ++c)
            word.push_back(at(r, c));
    return word;
}

bool Tableau::is_semistandard() const {
    for (int r = 0; r < shape_.length(); ++r) {
        for (int c = inner_[static_cast<std::size_t>(r)]; c < shape_[static_cast<std::size_t>(r)]; ++c) {
            if (has_cell(r, c - 1) && at(r, c - 1) > at(r, c))
                return false;
            if (has_cell(r - 1, c) && at(r - 1, c) >= at(r, c))
                return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard())
        return false;
    std::vector<int> word = row_word();
    std::sort(word.begin(), word.end());
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < shape_.length(); ++r) {
        os << (r ? "," : "") << '[';
        bool first = true;
        for (int c = 0; c < shape_[static_cast<std::size_t>(r)]; ++c) {
            os << (first ? "" : ",");
            first = false;
            if (has_cell(r, c))
                os << at(r, c);
            else
                os << '.';
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

BoxLabeling box_labeling(const Partition& lambda) {
    BoxLabeling lab;
    lab.label_to_cell.reserve(static_cast<std::size_t>(lambda.size()));
    lab.cell_to_label.resize(static_cast<std::size_t>(lambda.length()));
    int label = 0;
    for (int r = 0; r < lambda.length(); ++r) {
        const int len = lambda[static_cast<std::size_t>(r)];
        lab.cell_to_label[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(len));
        for (int c = len - 1; c >= 0; --c) {
            ++label;
            lab.label_to_cell.emplace_back(r, c);
            lab.cell_to_label[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = label;
        }
    }
    return lab;
}

std::vector<int> reading_word(const Tableau& t) {
    if (t.is_skew())
        throw std::invalid_argument("reading_word needs a straight shape");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.size()));
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            word.push_back(*it);
    return word;
}

namespace {

// Row-major backtracking; trying values in increasing order yields the
// canonical (row-word lexicographic) order directly.
class SsytFiller {
public:
    SsytFiller(const Partition& lambda, int k, std::vector<Tableau>& out)
        : lambda_(lambda), conj_(lambda.conjugate()), k_(k), out_(out) {
        rows_.resize(static_cast<std::size_t>(lambda.length()));
        for (int r = 0; r < lambda.length(); ++r)
            rows_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
    }

    void run() { fill(0, 0); }

private:
    void fill(int r, int c) {
        if (r == lambda_.length()) {
            out_.emplace_back(rows_, k_);
            return;
        }
        if (c == lambda_[static_cast<std::size_t>(r)]) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0)
            lo = std::max(lo, rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        // room for the strictly increasing cells still below in this column
        const int hi = k_ - (conj_[static_cast<std::size_t>(c)] - r - 1);
        for (int v = lo; v <= hi; ++v) {
            rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(r, c + 1);
        }
    }

    const Partition& lambda_;
    Partition conj_;
    int k_;
    std::vector<Tableau>& out_;
    std::vector<std::vector<int>> rows_;
};

// Standard fillings: place n, n-1, ..., 1 into removable corners.
void syt_rec(Partition shape, std::vector<std::vector<int>>& rows, int next,
             std::vector<Tableau>& out, int n) {
    if (next == 0) {
        out.emplace_back(rows, n);
        return;
    }
    const auto& parts = shape.parts();
    for (int r = 0; r < shape.length(); ++r) {
        const int len = parts[static_cast<std::size_t>(r)];
        if (r + 1 < shape.length() && parts[static_cast<std::size_t>(r + 1)] == len)
            continue;
        std::vector<int> smaller = parts;
        --smaller[static_cast<std::size_t>(r)];
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(len - 1)] = next;
        syt_rec(Partition(std::move(smaller)), rows, next - 1, out, n);
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int k) {
    std::vector<Tableau> out;
    if (k < lambda.length())
        return out;
    SsytFiller(lambda, k, out).run();
    return out;
}

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    for (int p : lambda.parts())
        rows.emplace_back(static_cast<std::size_t>(p), 0);
    syt_rec(lambda, rows, lambda.size(), out, lambda.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> content(const Tableau& t, int k) {
    std::vector<int> mu(static_cast<std::size_t>(std::max(k, 0)), 0);
    for (int v : t.row_word()) {
        if (v > k)
            throw std::invalid_argument("tableau entry exceeds alphabet bound");
        ++mu[static_cast<std::size_t>(v - 1)];
    }
    return mu;
}

}  // namespace tabcrystal
