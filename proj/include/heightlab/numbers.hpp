#ifndef HEIGHTLAB_NUMBERS_HPP
#define HEIGHTLAB_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/errors.hpp"

namespace heightlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }
inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Natural log of a positive big integer, accurate to double precision even
// when the value itself overflows double.
double log_int(const Int& n);
double log_rat_abs(const Rat& q); // log |q|, q != 0
double to_double(const Rat& q);   // safe for huge numerators/denominators

Int pow_int(const Int& base, unsigned e);
Rat pow_rat(const Rat& base, long e); // negative e allowed, base != 0

// Exact square root in Z / Q when it exists.
std::optional<Int> sqrt_exact(const Int& n);
std::optional<Rat> sqrt_exact(const Rat& q);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// All positive divisors of |n| (n != 0), unsorted-free: ascending order.
std::vector<Int> divisors(const Int& n);

// Prime factorization of |n| by trial division; pairs (p, exponent).
std::vector<std::pair<Int, int>> factor_integer(Int n);

int ord_p(Int n, const Int& p); // exponent of p in n, n != 0

// ---- parsing / printing -------------------------------------------------

// Accepts "a", "a/b", and decimal literals like "0.3" (exact, base 10).
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& q);

// ---- Gaussian rationals Q(i) --------------------------------------------

struct Gaussian {
    Rat re;
    Rat im;

    Gaussian() = default;
    Gaussian(Rat r) : re(std::move(r)) {}
    Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Gaussian conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; } // |z|^2, exact
    Gaussian inverse() const {
        if (is_zero()) throw ZeroElement("division by zero in Q(i)");
        Rat n = norm();
        return {re / n, -im / n};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        return a * b.inverse();
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const {
        return {to_double(re), to_double(im)};
    }
};

Gaussian pow_gaussian(const Gaussian& base, long e);
std::optional<Gaussian> sqrt_exact(const Gaussian& z);

// Accepts "a", "a/b", "a+bi", "bi", "i", "-i", "a-b/2i" (rational parts).
Gaussian parse_gaussian(const std::string& text);
std::string gaussian_to_string(const Gaussian& z);

} // namespace heightlab

#endif
