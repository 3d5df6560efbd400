#include "tabcrystal/jdt.hpp"

#include <stdexcept>
#include <string>

namespace tabcrystal {

Tableau bk(const Tableau& t, int i) {
    if (i < 1)
        throw std::out_of_range("Bender-Knuth index must be positive");
    Tableau out(t);
    const Partition& shape = t.shape();
    for (int r = 0; r < shape.length(); ++r) {
        const int len = shape[static_cast<std::size_t>(r)];
        int first = -1;
        int free_low = 0;
        int free_high = 0;
        for (int c = t.inner()[static_cast<std::size_t>(r)]; c < len; ++c) {
            const int v = t.at(r, c);
            bool is_free = false;
            if (v == i)
                is_free = !(t.has_cell(r + 1, c) && t.at(r + 1, c) == i + 1);
            else if (v == i + 1)
                is_free = !(t.has_cell(r - 1, c) && t.at(r - 1, c) == i);
            if (!is_free)
                continue;
            if (first < 0)
                first = c;
            (v == i ? free_low : free_high) += 1;
        }
        if (first < 0)
            continue;
        // free cells of a row form one contiguous block: i^low (i+1)^high
        for (int c = first; c < first + free_high; ++c)
            out.set(r, c, i);
        for (int c = first + free_high; c < first + free_high + free_low; ++c)
            out.set(r, c, i + 1);
    }
    return out;
}

Tableau jdt_slide(const Tableau& s, int corner_row) {
    const Partition& outer = s.shape();
    const Partition& inner = s.inner();
    if (corner_row < 0 || inner[static_cast<std::size_t>(corner_row)] == 0 ||
        inner[static_cast<std::size_t>(corner_row + 1)] >= inner[static_cast<std::size_t>(corner_row)])
        throw std::invalid_argument("row " + std::to_string(corner_row) + " has no inner corner");

    std::vector<std::vector<int>> rows = s.rows();
    auto filled = [&](int r, int c) { return s.has_cell(r, c); };
    int r = corner_row;
    int c = inner[static_cast<std::size_t>(corner_row)] - 1;
    while (true) {
        const bool has_right = filled(r, c + 1);
        const bool has_below = filled(r + 1, c);
        if (!has_right && !has_below)
            break;
        const int right = has_right ? rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] : 0;
        const int below = has_below ? rows[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)] : 0;
        if (has_below && (!has_right || below <= right)) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = below;
            ++r;
        } else {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = right;
            ++c;
        }
    }
    // the hole ends at an outer corner, i.e. the end of its row
    rows[static_cast<std::size_t>(r)].pop_back();
    std::vector<int> new_outer = outer.parts();
    --new_outer[static_cast<std::size_t>(r)];
    std::vector<int> new_inner = inner.parts();
    --new_inner[static_cast<std::size_t>(corner_row)];
    return Tableau(Partition(std::move(new_outer)), Partition(std::move(new_inner)), std::move(rows),
                   s.bound());
}

Tableau rectify(const Tableau& s, const CornerChooser& choose) {
    Tableau cur(s);
    while (cur.is_skew()) {
        const Partition& inner = cur.inner();
        std::vector<int> corners;
        for (int r = 0; r < inner.length(); ++r)
            if (inner[static_cast<std::size_t>(r + 1)] < inner[static_cast<std::size_t>(r)])
                corners.push_back(r);
        cur = jdt_slide(cur, choose(corners));
    }
    return Tableau(cur.rows(), s.bound());
}

Tableau rectify(const Tableau& s) {
    return rectify(s, [](const std::vector<int>& corners) { return corners.back(); });
}

namespace {

void require_bounded_straight(const Tableau& t, int i, const char* who) {
    if (t.is_skew())
        throw std::invalid_argument(std::string(who) + " needs a straight shape");
    if (t.max_entry() > i)
        throw std::invalid_argument(std::string(who) + ": entry exceeds alphabet bound " +
                                    std::to_string(i));
}

}  // namespace

Tableau evacuation(const Tableau& t, int i) {
    require_bounded_straight(t, i, "evacuation");
    Tableau cur(t);
    for (int top = i - 1; top >= 1; --top)
        for (int s = 1; s <= top; ++s)
            cur = bk(cur, s);
    return cur;
}

Tableau evacuation_oracle(const Tableau& t, int i) {
    require_bounded_straight(t, i, "evacuation_oracle");
    const Partition& shape = t.shape();
    if (shape.empty())
        return t;
    const int height = shape.length();
    const int width = shape[0];
    std::vector<int> inner_parts(static_cast<std::size_t>(height));
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(height),
                                       std::vector<int>(static_cast<std::size_t>(width), 0));
    for (int r = 0; r < height; ++r) {
        const int rr = height - 1 - r;
        inner_parts[static_cast<std::size_t>(rr)] = width - shape[static_cast<std::size_t>(r)];
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c)
            rows[static_cast<std::size_t>(rr)][static_cast<std::size_t>(width - 1 - c)] = i + 1 - t.at(r, c);
    }
    const Tableau rotated(Partition(std::vector<int>(static_cast<std::size_t>(height), width)),
                          Partition(std::move(inner_parts)), std::move(rows), t.bound());
    return rectify(rotated);
}

Tableau partial_xi(const Tableau& t, int i) {
    if (t.is_skew())
        throw std::invalid_argument("partial_xi needs a straight shape");
    if (i <= 1)
        return t;
    std::vector<std::vector<int>> sub;
    for (const auto& row : t.rows()) {
        std::vector<int> prefix;
        for (int v : row)
            if (v <= i)
                prefix.push_back(v);
        if (prefix.empty())
            break;
        sub.push_back(std::move(prefix));
    }
    const Tableau evacuated = evacuation(Tableau(std::move(sub), i), i);
    Tableau out(t);
    for (int r = 0; r < evacuated.shape().length(); ++r)
        for (int c = 0; c < evacuated.shape()[static_cast<std::size_t>(r)]; ++c)
            out.set(r, c, evacuated.at(r, c));
    return out;
}

Tableau promotion(const Tableau& t, int k) {
    return partial_xi(partial_xi(t, k - 1), k);
}

Tableau bk_composite(const Tableau& t, int k) {
    Tableau cur(t);
    for (int s = 1; s <= k - 1; ++s)
        cur = bk(cur, s);
    return cur;
}

}  // namespace tabcrystal
