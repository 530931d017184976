#ifndef HEIGHTLAB_GEOMETRY_HPP
#define HEIGHTLAB_GEOMETRY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/polynomial.hpp"

namespace heightlab::geom {

// Point of P^2 over Q(i), normalized so the first nonzero coordinate is 1.
struct P2Point {
    std::array<Gaussian, 3> z;

    static P2Point of(Gaussian z0, Gaussian z1, Gaussian z2);

    friend bool operator==(const P2Point& a, const P2Point& b) { return a.z == b.z; }
    friend bool operator<(const P2Point& a, const P2Point& b) { return a.z < b.z; }
    std::string to_string() const;
};

// Linear form a*z0 + b*z1 + c*z2 over Q(i), normalized so the first nonzero
// coefficient is 1 (the dropped scalar is returned by normalize()).
struct LinearForm {
    std::array<Gaussian, 3> a;

    LinearForm() : a{Gaussian(0), Gaussian(0), Gaussian(0)} {}
    LinearForm(Gaussian c0, Gaussian c1, Gaussian c2) : a{c0, c1, c2} {}

    bool is_zero() const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }
    Gaussian eval(const P2Point& p) const {
        return a[0] * p.z[0] + a[1] * p.z[1] + a[2] * p.z[2];
    }
    // Returns the scalar s with *this == s * normalized().
    std::pair<Gaussian, LinearForm> normalized() const;

    friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.a == y.a; }
    friend bool operator<(const LinearForm& x, const LinearForm& y) { return x.a < y.a; }
    std::string to_string() const;
};

// A line V(form) with a fixed degree-1 parameterization
// tau -> [p0 + tau*d0 : p1 + tau*d1 : p2 + tau*d2]  (tau = infinity -> d).
// The parameterization is derived canonically from the form, so two lines
// with the same normalized form are identical objects.
struct Line {
    LinearForm form;                 // normalized
    std::array<Gaussian, 3> dir;     // point at tau = infinity
    std::array<Gaussian, 3> base;    // point at tau = 0

    static Line from_form(const LinearForm& f);

    P2Point at(const Gaussian& tau) const;
    P2Point at_infinity() const;

    // Parameter of a point known to lie on the line; nullopt = tau infinity.
    std::optional<Gaussian> parameter_of(const P2Point& p) const;

    bool contains(const P2Point& p) const { return form.eval(p).is_zero(); }

    friend bool operator==(const Line& x, const Line& y) { return x.form == y.form; }
    friend bool operator<(const Line& x, const Line& y) { return x.form < y.form; }
    std::string to_string() const { return "V(" + form.to_string() + ")"; }
};

// Intersection point of two distinct lines (cross product of the forms).
P2Point meet(const Line& a, const Line& b);

// Restriction of a linear form to a line: a degree <= 1 polynomial in tau.
Poly<Gaussian> restrict_form(const LinearForm& f, const Line& line);

// Rational function on a line kept in factored shape: scalar * prod of
// degree <= 1 polynomials in tau with integer exponents.  Products of
// restricted linear forms stay factored, so divisor extraction needs no
// factorization.
struct LineFunction {
    Gaussian scalar{1};
    std::vector<std::pair<Poly<Gaussian>, long>> factors; // deg <= 1, nonzero

    static LineFunction constant(const Gaussian& c);
    // num/den as restricted forms
    static LineFunction ratio(Poly<Gaussian> num, Poly<Gaussian> den);

    void push(Poly<Gaussian> p, long e); // folds constants into scalar

    bool is_constant() const { return factors.empty(); }
    long numerator_degree() const;   // sum of positive exponents
    long denominator_degree() const; // -sum of negative exponents

    LineFunction operator*(const LineFunction& o) const;
    LineFunction pow(long e) const;

    // Value at a parameter; nullopt when tau hits a zero/pole.
    std::optional<Gaussian> value_at(const Gaussian& tau) const;
    std::optional<Gaussian> value_at_infinity() const;

    // Order of vanishing at finite tau and at infinity.
    long order_at(const Gaussian& tau) const;
    long order_at_infinity() const;

    // (root, multiplicity) pairs plus infinity order: the divisor on P^1.
    std::vector<std::pair<Gaussian, long>> finite_divisor() const;

    std::string to_string() const;
};

// 0-cycle with exact P^2 points.
struct ZeroCycleP2 {
    std::map<P2Point, int> points;

    void add(const P2Point& p, int mult);
    bool empty() const { return points.empty(); }
    friend bool operator==(const ZeroCycleP2& a, const ZeroCycleP2& b) {
        return a.points == b.points;
    }
    friend ZeroCycleP2 operator+(ZeroCycleP2 a, const ZeroCycleP2& b) {
        for (const auto& [p, m] : b.points) a.add(p, m);
        return a;
    }
    std::string to_string() const;
};

} // namespace heightlab::geom

#endif
