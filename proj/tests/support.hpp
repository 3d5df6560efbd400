#pragma once

#include <map>
#include <vector>

#include "oracles.hpp"
#include "tabcrystal/partition.hpp"
#include "tabcrystal/qpoly.hpp"
#include "tabcrystal/tableau.hpp"

namespace support {

inline tabcrystal::Tableau T(oracle::Grid rows, int bound = 0) {
    return tabcrystal::Tableau(std::move(rows), bound);
}

inline tabcrystal::Partition P(std::vector<int> parts) {
    return tabcrystal::Partition(std::move(parts));
}

inline oracle::Grid grid(const tabcrystal::Tableau& t) {
    return t.rows();
}

inline oracle::Poly poly(const tabcrystal::LaurentPoly& p) {
    oracle::Poly out;
    for (auto [e, c] : p.terms())
        out[e] = c;
    return out;
}

/// Rectangles (m^a) with a <= amax, m <= mmax, and alphabets a <= k <= kmax.
struct RectCase {
    int a, m, k;
};

inline std::vector<RectCase> rect_sweep(int amax, int mmax, int kmax) {
    std::vector<RectCase> out;
    for (int k = 1; k <= kmax; ++k)
        for (int a = 1; a <= std::min(amax, k); ++a)
            for (int m = 1; m <= mmax; ++m)
                out.push_back({a, m, k});
    return out;
}

}  // namespace support
