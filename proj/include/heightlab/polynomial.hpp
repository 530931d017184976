#ifndef HEIGHTLAB_POLYNOMIAL_HPP
#define HEIGHTLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "heightlab/errors.hpp"
#include "heightlab/numbers.hpp"

namespace heightlab {

// Dense univariate polynomial over a field K (K = Rat or Gaussian here).
// Coefficient i is the coefficient of t^i; the zero polynomial has an empty
// coefficient vector and degree -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(K c0) { c_.push_back(std::move(c0)); trim(); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K(1)); }
    static Poly constant(K v) { return Poly(std::move(v)); }
    // t - written as monomial(1) - and general c*t^k.
    static Poly monomial(unsigned k, K c = K(1)) {
        std::vector<K> v(k + 1, K(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const K& operator[](size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lc() const { return c_.back(); } // requires nonzero
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }

    bool is_constant() const { return c_.size() <= 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<K> v = a.c_;
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        std::vector<K> v = a.c_;
        for (auto& x : v) x = x * s;
        return Poly(std::move(v));
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Lexicographic on (degree, coefficients from constant term up); used for
    // canonical orderings of places.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    K eval(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    template <class T>
    T eval_as(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(v));
    }

    Poly make_monic() const {
        if (is_zero()) throw ZeroElement("make_monic(0)");
        K inv = K(1) / lc();
        return *this * inv;
    }

    // Coefficients reversed: t^deg * p(1/t).
    Poly reversed() const {
        std::vector<K> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw ZeroElement("polynomial division by zero");
        Poly r = a;
        std::vector<K> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, K(0));
        K binv = K(1) / b.lc();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            K f = r.lc() * binv;
            q[static_cast<size_t>(k)] = f;
            for (size_t i = 0; i < b.c_.size(); ++i)
                r.c_[i + static_cast<size_t>(k)] = r.c_[i + static_cast<size_t>(k)] - f * b.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

// Exact division; throws if b does not divide a.
template <class K>
Poly<K> div_exact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidArgument("div_exact: not divisible");
    return q;
}

template <class K>
bool divides(const Poly<K>& b, const Poly<K>& a) {
    if (b.is_zero()) return a.is_zero();
    return (a % b).is_zero();
}

// Monic gcd over the field K.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
        if (!b.is_zero()) b = b.make_monic();
    }
    if (a.is_zero()) return a;
    return a.make_monic();
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
struct ExtGcd {
    Poly<K> g, u, v;
};

template <class K>
ExtGcd<K> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::one(), u1 = Poly<K>::zero();
    Poly<K> v0 = Poly<K>::zero(), v1 = Poly<K>::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K inv = K(1) / r0.lc();
    return {r0 * inv, u0 * inv, v0 * inv};
}

// Yun's squarefree decomposition: returns pairs (factor, multiplicity) with
// the factors squarefree, pairwise coprime, monic, and
// p = lc * prod factor^multiplicity.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p) {
    std::vector<std::pair<Poly<K>, int>> out;
    if (p.degree() <= 0) return out;
    Poly<K> f = p.make_monic();
    Poly<K> d = f.derivative();
    Poly<K> a = gcd(f, d);
    Poly<K> b = div_exact(f, a);
    Poly<K> c = div_exact(d, a);
    int i = 1;
    while (b.degree() > 0) {
        Poly<K> w = c - b.derivative();
        Poly<K> g = gcd(b, w);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = div_exact(b, g);
        c = div_exact(w, g);
        ++i;
    }
    return out;
}

// ---- helpers specific to Q coefficients ----------------------------------

// Smallest positive integer D with D*p integral.
Int denominator_lcm(const Poly<Rat>& p);

// Primitive integer polynomial q and content c with p = c * q, lc(q) > 0.
std::pair<Rat, Poly<Rat>> primitive_part(const Poly<Rat>& p);

std::string poly_to_string(const Poly<Rat>& p, const std::string& var);
std::string poly_to_string(const Poly<Gaussian>& p, const std::string& var);

} // namespace heightlab

#endif
