#ifndef HEIGHTLAB_ARCH_PAIRING_HPP
#define HEIGHTLAB_ARCH_PAIRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "heightlab/funcfield.hpp"
#include "heightlab/geometry.hpp"

namespace heightlab::archpair {

using funcfield::Divisor;
using funcfield::Place;
using funcfield::RationalFunction;
using geom::Line;
using geom::LineFunction;
using geom::P2Point;
using geom::ZeroCycleP2;

// Pairing value kept exact as a positive rational under log: the pairing is
// (1/2) * log(ratio_sq).  Squares keep Gaussian absolute values rational.
struct ExactLog {
    Rat ratio_sq{1};

    double value() const { return 0.5 * log_rat_abs(ratio_sq); }
    // The plain ratio when ratio_sq is a perfect square (all-Q data).
    std::optional<Rat> exact_ratio() const { return sqrt_exact(ratio_sq); }
    friend bool operator==(const ExactLog& a, const ExactLog& b) {
        return a.ratio_sq == b.ratio_sq;
    }
    friend ExactLog operator*(const ExactLog& a, const ExactLog& b) {
        return {a.ratio_sq * b.ratio_sq};
    }
};

// A precycle sum_alpha (f_alpha, Z_alpha) with Z_alpha either all of P^1 or
// a parameterized line in P^2 (one ambient per precycle).
struct TermP1 {
    RationalFunction f;
};
struct TermLine {
    Line line;
    LineFunction f;
};

struct Precycle0 {
    std::vector<TermP1> p1_terms;
    std::vector<TermLine> line_terms;

    bool on_p1() const { return line_terms.empty(); }
    void require_single_ambient() const;
};

// 0-cycle on the relevant ambient: places of P^1 or exact P^2 points.
struct ZeroCycle {
    std::map<Place, int> places;
    ZeroCycleP2 points;

    bool empty() const { return places.empty() && points.empty(); }
    void add(const Place& p, int m);
    friend ZeroCycle operator+(ZeroCycle a, const ZeroCycle& b);
    friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) {
        return a.places == b.places && a.points == b.points;
    }
};

// Convert a rational function over Q in the line parameter into the factored
// line-function shape, splitting quadratic places over Q(i) where possible.
LineFunction line_function_from_rational(const RationalFunction& f);

// boundary(xi') = sum div(f_alpha) as a 0-cycle (points on P^2 for line
// supports).
ZeroCycle boundary(const Precycle0& xi1p);

// <xi1, xi2> = sum_alpha sum_{q in Z_alpha cap xi2} mult(q) log|f_alpha(q)|,
// exact: ratio_sq multiplies |f(q)|^2 per point.  Preconditions: boundary
// support disjoint from |xi2|; f a unit at every xi2 point on its support.
ExactLog pair_m0(const Precycle0& xi1p, const ZeroCycle& xi2);

// (<xi1, div(g)>, <xi2, div(f)>): equal ratios by reciprocity.
std::pair<ExactLog, ExactLog> reciprocity_check(const Precycle0& xi1p, const Precycle0& xi2p);

// A finite self-map of P^1 given by a nonconstant rational function.
struct FiniteSelfMap {
    RationalFunction phi;

    explicit FiniteSelfMap(RationalFunction f);
    int degree() const {
        return std::max(phi.num().degree(), phi.den().degree());
    }
};

// Norm along phi: Norm(f)(s) = prod_{phi(tau)=s} f(tau), computed through
// resultants (root products) and Lagrange interpolation; divisor identity
// div(Norm f) = phi_* div(f).
RationalFunction norm_along(const FiniteSelfMap& phi, const RationalFunction& f);

// phi_* of a P^1 precycle: each term (f, P^1) becomes (Norm(f), P^1).
Precycle0 pushforward_precycle(const FiniteSelfMap& phi, const Precycle0& xi1p);

// phi^* of a 0-cycle on P^1 with ramification-weighted multiplicities.
ZeroCycle pullback_cycle(const FiniteSelfMap& phi, const ZeroCycle& xi2);

// div(f) as a ZeroCycle on P^1 (convenience for tests and the CLI).
ZeroCycle zero_cycle_of_divisor(const Divisor& d);

} // namespace heightlab::archpair

#endif
