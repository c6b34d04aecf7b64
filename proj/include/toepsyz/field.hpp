#ifndef TOEPSYZ_FIELD_HPP
#define TOEPSYZ_FIELD_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace toepsyz {

/// Coefficient field used by the whole library.  Two models are provided:
/// Rational (exact, GMP-backed) and Real (double with an explicit zero
/// threshold).  `exact` selects algorithm variants (schoolbook vs FFT
/// products, pivoting strategy, ...).
template <class F>
concept Field = requires(const F a, const F b) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::exact } -> std::convertible_to<bool>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.magnitude() } -> std::same_as<double>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

/// Arbitrary-precision fraction, always kept in canonical form.
class Rational {
public:
    static constexpr bool exact = true;

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" in base 10.
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    double magnitude() const { return std::fabs(v_.get_d()); }
    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

private:
    static Rational wrap(const mpq_class& v) {
        Rational r;
        r.v_ = v;  // mpq arithmetic results are already canonical
        return r;
    }
    mpq_class v_;
};

/// Double-precision field.  Values with magnitude at or below `kZeroEps` are
/// treated as zero: they are trimmed from polynomial ends and rejected as
/// divisors instead of producing infinities.
class Real {
public:
    static constexpr bool exact = false;
    static constexpr double kZeroEps = 1e-12;

    constexpr Real() = default;
    constexpr Real(double v) : v_(v) {}

    static Real zero() { return Real(0.0); }
    static Real one() { return Real(1.0); }

    bool is_zero() const { return std::fabs(v_) <= kZeroEps; }
    double magnitude() const { return std::fabs(v_); }
    double value() const { return v_; }
    double to_double() const { return v_; }

    std::string str() const { return std::to_string(v_); }

    friend Real operator+(Real a, Real b) { return Real(a.v_ + b.v_); }
    friend Real operator-(Real a, Real b) { return Real(a.v_ - b.v_); }
    friend Real operator*(Real a, Real b) { return Real(a.v_ * b.v_); }
    friend Real operator/(Real a, Real b) {
        if (b.is_zero()) throw std::domain_error("Real: division by near-zero value");
        return Real(a.v_ / b.v_);
    }
    Real operator-() const { return Real(-v_); }

    Real& operator+=(Real o) { v_ += o.v_; return *this; }
    Real& operator-=(Real o) { v_ -= o.v_; return *this; }
    Real& operator*=(Real o) { v_ *= o.v_; return *this; }
    Real& operator/=(Real o) { *this = *this / o; return *this; }

    friend bool operator==(Real a, Real b) { return a.v_ == b.v_; }
    friend bool operator!=(Real a, Real b) { return a.v_ != b.v_; }

private:
    double v_ = 0.0;
};

}  // namespace toepsyz

#endif
