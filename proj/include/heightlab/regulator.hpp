#ifndef HEIGHTLAB_REGULATOR_HPP
#define HEIGHTLAB_REGULATOR_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/geometry.hpp"

namespace heightlab::regulator {

using geom::Line;
using geom::LinearForm;
using geom::LineFunction;
using geom::P2Point;
using geom::ZeroCycleP2;

// scalar * prod form^exp on P^2; used for the K2 symbol entries f1, f2.
struct FormProduct {
    Gaussian scalar{1};
    std::vector<std::pair<LinearForm, long>> factors; // forms normalized

    static FormProduct constant(const Gaussian& c);
    void push(const LinearForm& f, long e); // normalizes and combines
    long total_degree() const;
    FormProduct operator*(const FormProduct& o) const;
    FormProduct pow(long e) const;

    // Net exponents over distinct lines (zero entries dropped).
    std::vector<std::pair<LinearForm, long>> divisor() const;

    // Restriction to a line as a factored function of the parameter.
    LineFunction restrict_to(const Line& line) const;

    std::string to_string() const;
};

struct SymbolPair {
    FormProduct f1;
    FormProduct f2; // both of total degree 0
};

struct K1Term {
    Line line;
    LineFunction g; // nonzero rational function of the line parameter
};

using K1Precycle = std::vector<K1Term>;

// Sum of div(g_j) pushed into P^2; empty iff the precycle is a cycle.
ZeroCycleP2 k1_boundary_check(const K1Precycle& xi);

// Tame-symbol K1 precycle of {f1, f2}: terms
// (-1)^(nu_D(f1) nu_D(f2)) (f1^{nu_D(f2)} / f2^{nu_D(f1)})|_D over the lines
// D in |div f1| cup |div f2|.
K1Precycle tame_symbol_cycle(const SymbolPair& sp);

// One arc gamma_j = g_j^{-1}[-inf, 0]: the preimage of the negative real ray
// under a Moebius function on the line.  Parameterized from g^{-1}(0) to
// g^{-1}(infinity); internally integrated in the chart v = g(tau).
struct Arc {
    Line line;
    // g(tau) = (alpha*tau + beta) / (gamma*tau + delta)
    Gaussian alpha, beta, gamma, delta;
    P2Point start; // g^{-1}(0)
    P2Point end;   // g^{-1}(infinity)
};

struct Contour {
    std::vector<Arc> arcs;
    bool closed = false;
};

enum class Orientation { ccw, cw };

// Numerical controls for the arc integrals.
struct QuadratureOptions {
    double tol = 1e-9;     // relative tolerance per arc
    double guard = 1e-8;   // singularity guard distance in the v-chart
    int max_depth = 16;    // adaptive subdivision cap: 2^max_depth intervals
    Orientation orientation = Orientation::ccw;
};

Contour build_gamma(const K1Precycle& xi);

// Integral of d arg f along one arc (in the arc's parameterized direction).
double integrate_darg(const FormProduct& f, const Arc& arc, const QuadratureOptions& opt);

// Sum over arcs of d arg f divided by 2*pi, rounded; gamma must be closed and
// f nonvanishing on it.  Residual >= 0.01 raises RoundingAmbiguous.
long winding_number(const FormProduct& f, const Contour& gamma, const QuadratureOptions& opt);

// The real m=1 pairing
//   -2*pi * integral over gamma of [log|f1| d arg f2 - log|f2| d arg f1]
// with gamma built from xi and orientation per opt.
double pair_m1_real(const K1Precycle& xi, const SymbolPair& sp, const QuadratureOptions& opt);

struct CurrentIdentityReport {
    ZeroCycleP2 endpoint_cycle; // sum over arcs of (start - end)
    ZeroCycleP2 boundary_cycle; // k1_boundary_check
    bool equal = false;
};

// m=1 specialization of the current identities: the arc-endpoint 0-cycle of
// build_gamma equals the K1 boundary under g -> g^{-1}{0, infinity}.
CurrentIdentityReport current_identity_check_m1(const K1Precycle& xi);

// Exact general-position test: the graphs of xi1 and xi2 are disjoint in
// P^2 x (P^1 \ {1}).  Throws GeneralPositionFailure when they meet.
void require_general_position(const K1Precycle& xi1, const K1Precycle& xi2);

} // namespace heightlab::regulator

#endif
