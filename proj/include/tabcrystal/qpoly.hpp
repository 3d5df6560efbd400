#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tabcrystal/partition.hpp"

namespace tabcrystal {

/// Raised when a polynomial division leaves a remainder. Always an internal
/// arithmetic bug in this library: every division it performs is exact.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a root-of-unity evaluation is not a rational integer.
class NonIntegralValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integer Laurent polynomial in q. Coefficients are int64 with overflow
/// checks (std::overflow_error); zero coefficients are trimmed at both ends.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, Coeff coeff = 1);
    /// Coefficients of q^low, q^{low+1}, ...
    static LaurentPoly from_coeffs(int low, std::vector<Coeff> coeffs);
    static LaurentPoly from_map(const std::map<int, Coeff>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    int low_degree() const { return low_; }
    int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(int exponent) const;
    const std::vector<Coeff>& dense() const { return coeffs_; }
    std::map<int, Coeff> terms() const;

    /// q^shift * this
    LaurentPoly shifted(int shift) const;
    /// Substitutes q -> q^{-1}.
    LaurentPoly inverted() const;
    bool is_palindromic() const;  // coeff(e) == coeff(-e)

    /// Value at an integer point; only q = +-1 is allowed when negative
    /// exponents are present.
    Coeff eval(Coeff q) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(LaurentPoly x, const LaurentPoly& y) { return x *= y; }
    LaurentPoly operator-() const;

    /// Quotient and remainder as ordinary polynomials after aligning both
    /// operands at exponent 0; the quotient is shifted back.
    friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& num, const LaurentPoly& den);
    /// Throws InexactDivision on a nonzero remainder.
    LaurentPoly exact_div(const LaurentPoly& den) const;

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const;

private:
    void normalize();

    int low_ = 0;
    std::vector<Coeff> coeffs_;
};

/// Balanced q-integer [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
LaurentPoly q_int(int n);
/// Balanced q-factorial [n]_q!.
LaurentPoly q_factorial(int n);
/// Ordinary q-integer {n}_q = 1 + q + ... + q^{n-1}.
LaurentPoly q_int_plain(int n);

/// Balanced Gaussian binomial by exact division of q-factorials; zero
/// outside 0 <= j <= m.
LaurentPoly gaussian_binomial(int m, int j);

/// prod_{i=1}^{j} [m+1-i]_q / [i]_q, divided step by step.
LaurentPoly shapovalov_norm(int m, int j);

/// Hook-content product prod {k + content}/{hook} over the cells of lambda,
/// which is the principal specialization normalized to constant term 1.
LaurentPoly principal_spec(const Partition& lambda, int k);

/// {n}_q! / prod {hook}, n = |lambda|.
LaurentPoly syt_q_count(const Partition& lambda);

/// n(lambda) = sum (i-1) lambda_i, the shift between the normalized
/// principal specialization and s_lambda(1, q, ..., q^{k-1}).
int partition_n(const Partition& lambda);

/// Phi_m with exponent i at index i, computed by exact division of q^m - 1.
std::vector<std::int64_t> cyclotomic_coeffs(int m);

/// Arithmetic in Z[q]/Phi_m(q): exact evaluation at primitive m-th roots.
class CyclotomicContext {
public:
    explicit CyclotomicContext(int order);

    int order() const { return order_; }
    const std::vector<std::int64_t>& phi() const { return phi_; }

    /// Residue of P(zeta^power) in the basis 1, zeta, ..., zeta^{phi-1}.
    std::vector<std::int64_t> residue(const LaurentPoly& p, int power = 1) const;

    /// P(zeta^power) as an integer; throws NonIntegralValue otherwise.
    std::int64_t evaluate(const LaurentPoly& p, int power = 1) const;

private:
    int order_;
    std::vector<std::int64_t> phi_;
};

/// P(zeta_m) for a primitive m-th root of unity zeta_m.
std::int64_t eval_at_root_of_unity(const LaurentPoly& p, int m, int power = 1);

}  // namespace tabcrystal
