#pragma once

#include <utility>
#include <vector>

#include "tabcrystal/report.hpp"
#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

/// (m^{a-1}, m-j): the shape left after removing j boxes from the bottom row
/// of the rectangle (m^a).
Partition branch_shape(int a, int m, int j);

/// Appends j entries k to the bottom row of b in SSYT((m^{a-1}, m-j), k-1),
/// producing a tableau of the rectangle (m^a) with alphabet bound k.
/// Throws std::invalid_argument if b has the wrong shape or an entry >= k.
Tableau phi_j(const Tableau& b, int j, int a, int m, int k);

/// Inverse of phi_j: strips the trailing entries equal to k from the bottom
/// row. Throws std::invalid_argument if some entry k sits elsewhere.
std::pair<int, Tableau> strip_decompose(const Tableau& t, int k);

/// SSYT((m^a), k) split by the number j of entries equal to k.
struct BranchDecomposition {
    int a = 0;
    int m = 0;
    int k = 0;
    /// families[j] = phi_j(SSYT(branch_shape(a, m, j), k-1)), canonical order.
    std::vector<std::vector<Tableau>> families;
};

BranchDecomposition branch_decomposition(int a, int m, int k);

struct BranchingReport {
    int a = 0;
    int m = 0;
    int k = 0;
    std::vector<std::size_t> sizes;  // |SSYT(Lambda^j, k-1)| for j = 0..m
    std::size_t total = 0;           // |SSYT((m^a), k)|
    VerificationReport cardinality;  // disjoint union covers the rectangle
    VerificationReport commutation;  // f/e for colors <= k-2
    VerificationReport xi_commutation;
    VerificationReport content;      // content(phi_j b) = content(b) then j

    bool passed() const {
        return cardinality.passed() && commutation.passed() && xi_commutation.passed() &&
               content.passed();
    }
};

BranchingReport verify_branching(int a, int m, int k);

}  // namespace tabcrystal
