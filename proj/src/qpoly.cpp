#include "tabcrystal/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tabcrystal {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("LaurentPoly coefficient overflow");
    return out;
}

Coeff checked_mul(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("LaurentPoly coefficient overflow");
    return out;
}

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
    return from_coeffs(exponent, {coeff});
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Coeff> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Coeff>& terms) {
    if (terms.empty())
        return {};
    const int low = terms.begin()->first;
    std::vector<Coeff> dense(static_cast<std::size_t>(terms.rbegin()->first - low + 1), 0);
    for (auto [e, c] : terms)
        dense[static_cast<std::size_t>(e - low)] = c;
    return from_coeffs(low, std::move(dense));
}

void LaurentPoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0)
        coeffs_.pop_back();
}

Coeff LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Coeff> LaurentPoly::terms() const {
    std::map<int, Coeff> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly p(*this);
    if (!p.is_zero())
        p.low_ += shift;
    return p;
}

LaurentPoly LaurentPoly::inverted() const {
    if (is_zero())
        return {};
    std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-high_degree(), std::move(rev));
}

bool LaurentPoly::is_palindromic() const {
    return *this == inverted();
}

Coeff LaurentPoly::eval(Coeff q) const {
    if (low_ < 0 && q != 1 && q != -1)
        throw std::domain_error("cannot evaluate negative powers at q = " + std::to_string(q));
    Coeff acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const int e = low_ + static_cast<int>(i);
        Coeff power = 1;
        if (q == -1)
            power = (e % 2 == 0) ? 1 : -1;
        else if (q != 1)
            for (int t = 0; t < e; ++t)
                power = checked_mul(power, q);
        acc = checked_add(acc, checked_mul(coeffs_[i], power));
    }
    return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const int low = std::min(low_, o.low_);
    const int high = std::max(high_degree(), o.high_degree());
    std::vector<Coeff> sum(static_cast<std::size_t>(high - low + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(low_ - low) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = sum[static_cast<std::size_t>(o.low_ - low) + i];
        slot = checked_add(slot, o.coeffs_[i]);
    }
    low_ = low;
    coeffs_ = std::move(sum);
    normalize();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_)
        c = checked_mul(c, -1);
    return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (is_zero() || o.is_zero())
        return *this = LaurentPoly{};
    std::vector<Coeff> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    low_ += o.low_;
    coeffs_ = std::move(prod);
    normalize();
    return *this;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (num.is_zero())
        return {LaurentPoly{}, LaurentPoly{}};
    std::vector<Coeff> rem = num.coeffs_;
    const std::vector<Coeff>& d = den.coeffs_;
    const Coeff lead = d.back();
    if (rem.size() < d.size())
        return {LaurentPoly{}, num};
    std::vector<Coeff> quot(rem.size() - d.size() + 1, 0);
    const auto last = static_cast<std::ptrdiff_t>(d.size()) - 1;
    for (auto top = static_cast<std::ptrdiff_t>(rem.size()) - 1; top >= last; --top) {
        const Coeff c = rem[static_cast<std::size_t>(top)];
        if (c == 0)
            continue;
        if (c % lead != 0)
            break;  // not divisible over Z: the rest stays as remainder
        const Coeff qc = c / lead;
        const auto shift = static_cast<std::size_t>(top - last);
        quot[shift] = qc;
        for (std::size_t i = 0; i < d.size(); ++i)
            rem[shift + i] = checked_add(rem[shift + i], checked_mul(-qc, d[i]));
    }
    return {LaurentPoly::from_coeffs(num.low_ - den.low_, std::move(quot)),
            LaurentPoly::from_coeffs(num.low_, std::move(rem))};
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
    auto [quot, rem] = divmod(*this, den);
    if (!rem.is_zero())
        throw InexactDivision("(" + to_string() + ") / (" + den.to_string() +
                              ") leaves remainder " + rem.to_string());
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Coeff c = coeffs_[i];
        if (c == 0)
            continue;
        const int e = low_ + static_cast<int>(i);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        first = false;
        const Coeff mag = c < 0 ? -c : c;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag;
        os << 'q';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

LaurentPoly q_int(int n) {
    if (n == 0)
        return {};
    if (n < 0)
        return -q_int(-n);
    std::vector<Coeff> dense(static_cast<std::size_t>(2 * n - 1), 0);
    for (std::size_t i = 0; i < dense.size(); i += 2)
        dense[i] = 1;
    return LaurentPoly::from_coeffs(1 - n, std::move(dense));
}

LaurentPoly q_factorial(int n) {
    LaurentPoly acc(1);
    for (int i = 2; i <= n; ++i)
        acc *= q_int(i);
    return acc;
}

LaurentPoly q_int_plain(int n) {
    if (n <= 0)
        throw std::invalid_argument("plain q-integer needs n >= 1");
    return LaurentPoly::from_coeffs(0, std::vector<Coeff>(static_cast<std::size_t>(n), 1));
}

LaurentPoly gaussian_binomial(int m, int j) {
    if (j < 0 || j > m)
        return {};
    return q_factorial(m).exact_div(q_factorial(j) * q_factorial(m - j));
}

LaurentPoly shapovalov_norm(int m, int j) {
    if (j < 0 || j > m)
        return {};
    LaurentPoly acc(1);
    for (int i = 1; i <= j; ++i)
        acc = (acc * q_int(m + 1 - i)).exact_div(q_int(i));
    return acc;
}

namespace {

// prod_{n in num} {n} / prod_{n in den} {n} as a product of cyclotomic
// factors, using {n} = prod_{d | n, d > 1} Phi_d.
LaurentPoly plain_quotient(const std::vector<int>& num, const std::vector<int>& den) {
    int top = 1;
    for (int n : num)
        top = std::max(top, n);
    for (int n : den)
        top = std::max(top, n);
    std::vector<int> mult(static_cast<std::size_t>(top + 1), 0);
    auto tally = [&](int n, int sign) {
        if (n < 1)
            throw std::invalid_argument("plain q-integer needs n >= 1");
        for (int d = 2; d <= n; ++d)
            if (n % d == 0)
                mult[static_cast<std::size_t>(d)] += sign;
    };
    for (int n : num)
        tally(n, +1);
    for (int n : den)
        tally(n, -1);
    LaurentPoly acc(1);
    for (int d = 2; d <= top; ++d) {
        const int e = mult[static_cast<std::size_t>(d)];
        if (e < 0)
            throw InexactDivision("quotient of q-integers is not a polynomial: Phi_" +
                                  std::to_string(d) + " has exponent " + std::to_string(e));
        if (e == 0)
            continue;
        const auto phi = cyclotomic_coeffs(d);
        const LaurentPoly factor = LaurentPoly::from_coeffs(0, phi);
        for (int t = 0; t < e; ++t)
            acc *= factor;
    }
    return acc;
}

}  // namespace

LaurentPoly principal_spec(const Partition& lambda, int k) {
    if (k < lambda.length())
        throw std::invalid_argument("principal_spec needs k >= length(lambda)");
    std::vector<int> num, den;
    for (const Cell& cell : hooks_and_contents(lambda)) {
        num.push_back(k + cell.content);
        den.push_back(cell.hook);
    }
    return plain_quotient(num, den);
}

LaurentPoly syt_q_count(const Partition& lambda) {
    std::vector<int> num, den;
    for (int i = 1; i <= lambda.size(); ++i)
        num.push_back(i);
    for (const Cell& cell : hooks_and_contents(lambda))
        den.push_back(cell.hook);
    return plain_quotient(num, den);
}

int partition_n(const Partition& lambda) {
    int n = 0;
    for (int i = 0; i < lambda.length(); ++i)
        n += i * lambda[static_cast<std::size_t>(i)];
    return n;
}

std::vector<std::int64_t> cyclotomic_coeffs(int m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_m = prod_{d | m} (q^d - 1)^{mu(m/d)}
    LaurentPoly num(1), den(1);
    for (int d = 1; d <= m; ++d) {
        if (m % d)
            continue;
        const int mu = mobius(m / d);
        if (mu == 0)
            continue;
        const LaurentPoly factor = LaurentPoly::monomial(d) - LaurentPoly(1);
        (mu > 0 ? num : den) *= factor;
    }
    const LaurentPoly phi = num.exact_div(den);
    std::vector<std::int64_t> out(static_cast<std::size_t>(phi.high_degree() + 1), 0);
    for (auto [e, c] : phi.terms())
        out[static_cast<std::size_t>(e)] = c;
    return out;
}

CyclotomicContext::CyclotomicContext(int order) : order_(order), phi_(cyclotomic_coeffs(order)) {}

std::vector<std::int64_t> CyclotomicContext::residue(const LaurentPoly& p, int power) const {
    // zeta^m = 1: fold every exponent into 0..m-1 first
    std::vector<Coeff> folded(static_cast<std::size_t>(order_), 0);
    for (auto [e, c] : p.terms()) {
        long long idx = (static_cast<long long>(e) * power) % order_;
        if (idx < 0)
            idx += order_;
        auto& slot = folded[static_cast<std::size_t>(idx)];
        slot = checked_add(slot, c);
    }
    // Phi_m is monic: plain long division
    const std::size_t deg = phi_.size() - 1;
    for (std::size_t top = folded.size(); top-- > deg;) {
        const Coeff c = folded[top];
        if (c == 0)
            continue;
        const std::size_t shift = top - deg;
        for (std::size_t i = 0; i <= deg; ++i)
            folded[shift + i] = checked_add(folded[shift + i], checked_mul(-c, phi_[i]));
    }
    folded.resize(deg);
    return folded;
}

std::int64_t CyclotomicContext::evaluate(const LaurentPoly& p, int power) const {
    const auto res = residue(p, power);
    for (std::size_t i = 1; i < res.size(); ++i) {
        if (res[i] != 0) {
            std::ostringstream os;
            os << "P(zeta_" << order_ << "^" << power << ") is not an integer for P = "
               << p.to_string() << "; residue mod Phi_" << order_ << ":";
            for (auto c : res)
                os << ' ' << c;
            throw NonIntegralValue(os.str());
        }
    }
    return res.empty() ? 0 : res[0];
}

std::int64_t eval_at_root_of_unity(const LaurentPoly& p, int m, int power) {
    return CyclotomicContext(m).evaluate(p, power);
}

}  // namespace tabcrystal
