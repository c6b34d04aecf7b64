#ifndef TOEPSYZ_POLYNOMIAL_HPP
#define TOEPSYZ_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toepsyz/fft.hpp"
#include "toepsyz/field.hpp"

namespace toepsyz {

/// Degree of the zero polynomial.  INT_MIN compares below every real degree,
/// so stopping tests of the form `deg r <= d` hold vacuously for zero
/// remainders.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over F.  Coefficient i belongs to x^i and the
/// last stored coefficient is never zero (the zero polynomial stores nothing).
template <Field F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return monomial(0, F::one()); }
    static Polynomial monomial(std::size_t k, F coefficient = F::one()) {
        Polynomial p;
        if (!coefficient.is_zero()) {
            p.c_.assign(k + 1, F::zero());
            p.c_[k] = coefficient;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F::zero();
        return c_[static_cast<std::size_t>(i)];
    }
    const F& leading() const {
        if (c_.empty()) throw std::logic_error("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    /// Coefficients padded (or checked to fit) to length n.
    std::vector<F> coeffs_padded(std::size_t n) const {
        if (c_.size() > n) throw std::invalid_argument("Polynomial: degree exceeds requested length");
        std::vector<F> out(n, F::zero());
        std::copy(c_.begin(), c_.end(), out.begin());
        return out;
    }

    F evaluate(const F& x) const {
        F acc = F::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
        out.trim();
        return out;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] -= b.c_[i];
        out.trim();
        return out;
    }
    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        Polynomial out;
        if constexpr (F::exact) {
            out.c_ = mul_exact(a.c_, b.c_);
        } else {
            std::vector<double> av(a.c_.size()), bv(b.c_.size());
            for (std::size_t i = 0; i < av.size(); ++i) av[i] = a.c_[i].to_double();
            for (std::size_t i = 0; i < bv.size(); ++i) bv[i] = b.c_[i].to_double();
            std::vector<double> cv = fft::convolve_real(av, bv);
            out.c_.reserve(cv.size());
            for (double x : cv) out.c_.emplace_back(x);
        }
        out.trim();
        return out;
    }
    friend Polynomial operator*(const F& s, const Polynomial& p) {
        Polynomial out(p);
        for (auto& c : out.c_) c *= s;
        out.trim();
        return out;
    }
    friend Polynomial operator*(const Polynomial& p, const F& s) { return s * p; }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// p mod x^k.
    Polynomial truncated(std::size_t k) const {
        if (c_.size() <= k) return *this;
        Polynomial out;
        out.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
        out.trim();
        return out;
    }
    /// p * x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Polynomial out;
        out.c_.assign(c_.size() + k, F::zero());
        std::copy(c_.begin(), c_.end(), out.c_.begin() + static_cast<std::ptrdiff_t>(k));
        return out;
    }
    /// Coefficients of x^k and above, shifted down to the constant term.
    Polynomial shifted_down(std::size_t k) const {
        if (c_.size() <= k) return Polynomial();
        Polynomial out;
        out.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return out;
    }

    /// x^d * p(1/x): coefficient i of the result is coefficient d-i of p.
    Polynomial reversed(int d) const {
        if (d < degree()) throw std::invalid_argument("Polynomial: reversal order below degree");
        Polynomial out;
        if (is_zero()) return out;
        out.c_.assign(static_cast<std::size_t>(d) + 1, F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.c_[static_cast<std::size_t>(d) - i] = c_[i];
        out.trim();
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero() && c_.size() > 1) continue;
            if (!first) os << " + ";
            os << c_[i].str();
            if (i > 0) os << "*x^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static std::vector<F> mul_schoolbook(const std::vector<F>& a, const std::vector<F>& b) {
        std::vector<F> out(a.size() + b.size() - 1, F::zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    static constexpr std::size_t kKaratsubaCutoff = 24;

    static std::vector<F> mul_exact(const std::vector<F>& a, const std::vector<F>& b) {
        if (std::min(a.size(), b.size()) < kKaratsubaCutoff) return mul_schoolbook(a, b);
        const std::size_t half = std::max(a.size(), b.size()) / 2;
        auto split = [half](const std::vector<F>& v) {
            std::vector<F> low(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(half, v.size())));
            std::vector<F> high(v.begin() + static_cast<std::ptrdiff_t>(std::min(half, v.size())), v.end());
            if (high.empty()) high.push_back(F::zero());
            return std::pair(std::move(low), std::move(high));
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        std::vector<F> z0 = mul_exact(a0, b0);
        std::vector<F> z2 = mul_exact(a1, b1);
        auto add = [](std::vector<F> x, const std::vector<F>& y) {
            if (x.size() < y.size()) x.resize(y.size(), F::zero());
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        std::vector<F> z1 = mul_exact(add(a0, a1), add(b0, b1));
        std::vector<F> out(a.size() + b.size() - 1, F::zero());
        auto accumulate = [&out](const std::vector<F>& src, std::size_t shift, bool negate) {
            for (std::size_t i = 0; i < src.size() && shift + i < out.size(); ++i) {
                if (negate)
                    out[shift + i] -= src[i];
                else
                    out[shift + i] += src[i];
            }
        };
        accumulate(z0, 0, false);
        accumulate(z1, half, false);
        accumulate(z0, half, true);
        accumulate(z2, half, true);
        accumulate(z2, 2 * half, false);
        return out;
    }

    std::vector<F> c_;
};

/// Classical long division: a = b*q + r with deg r < deg b.
template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> divrem(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial<F>(), a};
    const int db = b.degree();
    const F lead = b.leading();
    std::vector<F> rem = a.coeffs_padded(static_cast<std::size_t>(a.degree()) + 1);
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - db) + 1, F::zero());
    for (int k = a.degree() - db; k >= 0; --k) {
        F c = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

}  // namespace toepsyz

#endif
