#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabcrystal/qpoly.hpp"
#include "tabcrystal/report.hpp"
#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

/// An action sent some element outside the set, or two elements to one image.
class NotClosed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using TableauAction = std::function<Tableau(const Tableau&)>;

/// Disjoint cycles of a bijection of a canonically sorted set. Each cycle
/// starts at its smallest element and cycles are ordered by that element.
struct OrbitDecomposition {
    std::vector<std::vector<std::size_t>> cycles;

    std::map<std::size_t, std::size_t> size_multiset() const;
    /// |fix(g^d)| from cycle lengths.
    std::size_t fixed_points(std::int64_t d) const;
    /// Least common multiple of the cycle lengths.
    std::size_t order() const;
};

/// `set` must be sorted in canonical order and duplicate free.
OrbitDecomposition orbits(const std::vector<Tableau>& set, const TableauAction& action);

/// |fix(g^d)| by applying the action d times to every element.
std::size_t fixed_points_brute(const std::vector<Tableau>& set, const TableauAction& action, int d);

enum class CspMode { ssyt, syt };

const char* to_string(CspMode mode);

struct CspRow {
    int d = 0;
    std::size_t fixed = 0;
    std::optional<std::int64_t> value;  // X(zeta_n^d); empty when not an integer
};

struct CspReport {
    Partition shape;
    int k = 0;
    CspMode mode = CspMode::ssyt;
    std::size_t set_size = 0;
    int order = 0;  // n
    LaurentPoly polynomial;
    /// "constant-term-1" or "shift-free"
    std::string normalization;
    std::vector<CspRow> rows;  // d = 1..n
    std::map<std::size_t, std::size_t> orbit_sizes;
    std::size_t orbit_count = 0;
    bool order_ok = false;     // g^n = id on the whole set
    bool orbit_sum_ok = false; // sum_d X(zeta^d) = n * #orbits
    bool verdict = false;
    std::optional<std::string> diagnostics;
};

/// ssyt: promotion on SSYT(lambda, k), n = k, X = principal_spec.
/// syt: promotion on SYT(lambda) over the alphabet n = |lambda|, X = syt_q_count.
/// lambda must be a rectangle; ssyt mode also needs length(lambda) <= k.
CspReport verify_csp(const Partition& lambda, int k, CspMode mode);

/// Same verification for an arbitrary cyclic action of order n on `set`.
CspReport verify_csp_action(const std::vector<Tableau>& set, const TableauAction& g, int n,
                            const LaurentPoly& x);

struct StembridgeReport {
    Partition shape;
    int k = 0;
    std::size_t ssyt_count = 0;
    std::size_t ssyt_fixed = 0;          // fixed points of xi_k on SSYT(lambda, k)
    std::int64_t ssyt_value = 0;         // principal_spec(lambda, k) at q = -1
    std::size_t syt_count = 0;
    std::size_t syt_fixed = 0;           // fixed points of xi_n on SYT(lambda)
    std::int64_t syt_value = 0;          // syt_q_count(lambda) at q = -1
    int epsilon = 1;                     // (-1)^{sum (i-1) lambda_i}

    bool ssyt_ok() const { return static_cast<std::int64_t>(ssyt_fixed) == (ssyt_value < 0 ? -ssyt_value : ssyt_value); }
    bool syt_ok() const { return static_cast<std::int64_t>(syt_fixed) == (syt_value < 0 ? -syt_value : syt_value); }
    bool passed() const { return ssyt_ok() && syt_ok(); }
};

StembridgeReport verify_stembridge(const Partition& lambda, int k);

/// (-1)^{sum_i (i-1) Lambda_i}.
int epsilon_sign(const Partition& lambda);

struct SignRow {
    int j = 0;
    int eps_rect = 1;    // eps of (m^a) padded to k
    int eps_branch = 1;  // eps of (m^{a-1}, m-j) padded to k-1
    int expected = 1;    // (-1)^{(a-1) j}
    bool ok() const { return eps_rect * eps_branch == expected; }
};

struct SignReport {
    int a = 0;
    int m = 0;
    int k = 0;
    std::vector<SignRow> rows;
    bool passed() const;
};

SignReport sign_identity(int a, int m, int k);

}  // namespace tabcrystal
