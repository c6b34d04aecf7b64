#ifndef TOEPSYZ_LAURENT_HPP
#define TOEPSYZ_LAURENT_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toepsyz/polynomial.hpp"

namespace toepsyz {

/// Polynomial with a contiguous window of exponents that may start below
/// zero.  Both ends of the stored window are nonzero unless the value is 0.
template <Field F>
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int lo, std::vector<F> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }
    explicit LaurentPolynomial(const Polynomial<F>& p) : lo_(0), c_(p.coeffs()) {}

    bool is_zero() const { return c_.empty(); }
    int lowest_exponent() const { return is_zero() ? 0 : lo_; }
    int highest_exponent() const { return is_zero() ? 0 : lo_ + static_cast<int>(c_.size()) - 1; }

    F coeff(int e) const {
        if (is_zero() || e < lo_ || e > highest_exponent()) return F::zero();
        return c_[static_cast<std::size_t>(e - lo_)];
    }

    /// x^k * p; k may be negative.
    LaurentPolynomial shifted(int k) const {
        if (is_zero()) return *this;
        return LaurentPolynomial(lo_ + k, c_);
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.lo_, b.lo_);
        const int hi = std::max(a.highest_exponent(), b.highest_exponent());
        std::vector<F> out(static_cast<std::size_t>(hi - lo) + 1, F::zero());
        for (int e = a.lo_; e <= a.highest_exponent(); ++e)
            out[static_cast<std::size_t>(e - lo)] += a.coeff(e);
        for (int e = b.lo_; e <= b.highest_exponent(); ++e)
            out[static_cast<std::size_t>(e - lo)] += b.coeff(e);
        return LaurentPolynomial(lo, std::move(out));
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPolynomial();
        Polynomial<F> prod = Polynomial<F>(a.c_) * Polynomial<F>(b.c_);
        return LaurentPolynomial(a.lo_ + b.lo_, prod.coeffs());
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return (a.is_zero() && b.is_zero()) || (a.lo_ == b.lo_ && a.c_ == b.c_);
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = lo_; e <= highest_exponent(); ++e) {
            if (coeff(e).is_zero()) continue;
            if (!first) os << " + ";
            os << coeff(e).str();
            if (e != 0) os << "*x^" << e;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        std::size_t drop_front = 0;
        while (drop_front < c_.size() && c_[drop_front].is_zero()) ++drop_front;
        if (drop_front == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop_front));
        lo_ += static_cast<int>(drop_front);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int lo_ = 0;
    std::vector<F> c_;
};

/// Splits p into the strictly-negative-exponent part and the rest:
/// p = split.first + split.second with first = p^- and second = p^+.
template <Field F>
std::pair<LaurentPolynomial<F>, Polynomial<F>> laurent_split(const LaurentPolynomial<F>& p) {
    if (p.is_zero() || p.lowest_exponent() >= 0) {
        std::vector<F> plus;
        for (int e = 0; e <= p.highest_exponent(); ++e) plus.push_back(p.coeff(e));
        return {LaurentPolynomial<F>(), Polynomial<F>(std::move(plus))};
    }
    std::vector<F> minus, plus;
    for (int e = p.lowest_exponent(); e < 0; ++e) minus.push_back(p.coeff(e));
    for (int e = 0; e <= p.highest_exponent(); ++e) plus.push_back(p.coeff(e));
    return {LaurentPolynomial<F>(p.lowest_exponent(), std::move(minus)), Polynomial<F>(std::move(plus))};
}

/// Projection onto the span of 1, x, ..., x^{n-1}: terms with exponent
/// outside [0, n) are dropped.
template <Field F>
Polynomial<F> project(const LaurentPolynomial<F>& p, int n) {
    if (n < 1) throw std::invalid_argument("project: window size must be positive");
    std::vector<F> out(static_cast<std::size_t>(n), F::zero());
    for (int e = 0; e < n; ++e) out[static_cast<std::size_t>(e)] = p.coeff(e);
    return Polynomial<F>(std::move(out));
}

}  // namespace toepsyz

#endif
