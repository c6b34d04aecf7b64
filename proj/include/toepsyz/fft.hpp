#ifndef TOEPSYZ_FFT_HPP
#define TOEPSYZ_FFT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace toepsyz::fft {

using cdouble = std::complex<double>;

namespace detail {

// Twiddle factors and bit-reversal tables are cached per power-of-two size.
// thread_local keeps the public entry points pure from the caller's view.
struct Tables {
    std::size_t n = 0;
    std::vector<cdouble> roots;   // roots[i] = exp(2*pi*i*I / n), first half
    std::vector<std::size_t> rev;
};

inline Tables& tables_for(std::size_t n) {
    static thread_local std::array<Tables, 32> cache;
    int logn = 0;
    while ((std::size_t{1} << logn) < n) ++logn;
    Tables& t = cache[static_cast<std::size_t>(logn)];
    if (t.n == n) return t;
    t.n = n;
    t.roots.resize(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        t.roots[i] = cdouble(std::cos(a), std::sin(a));
    }
    t.rev.resize(n);
    t.rev[0] = 0;
    for (std::size_t i = 1; i < n; ++i)
        t.rev[i] = (t.rev[i >> 1] >> 1) | ((i & 1) ? n >> 1 : 0);
    return t;
}

}  // namespace detail

/// In-place radix-2 transform; `n` must be a power of two.  `inverse` applies
/// the conjugate transform and the 1/n scaling.
inline void transform(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two");
    if (n == 1) return;
    const auto& t = detail::tables_for(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i < t.rev[i]) std::swap(a[i], a[t.rev[i]]);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cdouble w = t.roots[j * step];
                if (inverse) w = std::conj(w);
                cdouble u = a[i + j];
                cdouble v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

/// Linear convolution of two real sequences, evaluated at the roots of unity
/// of the smallest power-of-two order strictly greater than
/// (a.size()-1) + (b.size()-1).  Both inputs ride in one complex transform
/// (a in the real part, b in the imaginary part); the spectra are separated
/// by conjugate symmetry.
inline std::vector<double> convolve_real(const std::vector<double>& a,
                                         const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out_len) n <<= 1;

    std::vector<cdouble> z(n, cdouble(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) z[i] += cdouble(a[i], 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) z[i] += cdouble(0.0, b[i]);
    transform(z, false);

    std::vector<cdouble> prod(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cdouble zk = z[k];
        const cdouble zmk = std::conj(z[(n - k) & (n - 1)]);
        const cdouble ak = 0.5 * (zk + zmk);
        const cdouble bk = cdouble(0.0, -0.5) * (zk - zmk);
        prod[k] = ak * bk;
    }
    transform(prod, true);

    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = prod[i].real();
    return out;
}

}  // namespace toepsyz::fft

#endif
