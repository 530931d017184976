#ifndef HEIGHTLAB_NERON_TATE_HPP
#define HEIGHTLAB_NERON_TATE_HPP

#include <string>
#include <vector>

#include "heightlab/polynomial.hpp"

namespace heightlab::nt {

// Elliptic curve over Q in long Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
class EllipticCurveQ {
public:
    EllipticCurveQ(Int a1, Int a2, Int a3, Int a4, Int a6);

    const Int& a1() const { return a1_; }
    const Int& a2() const { return a2_; }
    const Int& a3() const { return a3_; }
    const Int& a4() const { return a4_; }
    const Int& a6() const { return a6_; }
    const Int& discriminant() const { return disc_; }

    Int b2() const { return a1_ * a1_ + 4 * a2_; }
    Int b4() const { return 2 * a4_ + a1_ * a3_; }
    Int b6() const { return a3_ * a3_ + 4 * a6_; }
    Int b8() const {
        return a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
               a4_ * a4_;
    }

    std::string to_string() const;

private:
    Int a1_, a2_, a3_, a4_, a6_;
    Int disc_;
};

// Affine point or the point at infinity O; coordinates exact rationals.
struct ECPoint {
    bool infinity = true;
    Rat x;
    Rat y;

    static ECPoint O() { return {}; }
    static ECPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    std::string to_string() const;
};

bool is_on_curve(const EllipticCurveQ& E, const ECPoint& P);
void require_on_curve(const EllipticCurveQ& E, const ECPoint& P);

ECPoint ec_neg(const EllipticCurveQ& E, const ECPoint& P);
ECPoint ec_add(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_double(const EllipticCurveQ& E, const ECPoint& P);
ECPoint ec_mul(const EllipticCurveQ& E, long n, const ECPoint& P);

// log max(|num x(P)|, den x(P)); 0 at O.
double naive_height(const ECPoint& P);

// Constant C with |h(2P) - 4h(P)| <= C for every point, from (i) a
// coefficient bound on the duplication quotient and (ii) exact Bezout
// cofactors of the duplication polynomials.  The doubling-limit tail after n
// steps is bounded by C/3 * 4^-n.
double height_difference_bound(const EllipticCurveQ& E);

struct HeightOptions {
    double tol = 1e-9;
    int max_doublings = 12;
};

// Canonical height via the doubling limit 4^-n h(2^n P); exact coordinates
// throughout, torsion detected when an iterate hits O.
double canonical_height(const EllipticCurveQ& E, const ECPoint& P, const HeightOptions& opt);

// (h(P+Q) - h(P) - h(Q)) / 2.
double nt_pairing(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q,
                  const HeightOptions& opt);

// Degree-0 formal sum of points.
struct DegreeZeroDivisorClass {
    std::vector<std::pair<ECPoint, int>> terms;

    static DegreeZeroDivisorClass difference(const ECPoint& P, const ECPoint& Q);
    int total_degree() const;
};

// Abel-Jacobi on an elliptic curve: sum n_i P_i under the group law.
ECPoint class_to_point(const EllipticCurveQ& E, const DegreeZeroDivisorClass& d);

// Classes on C x C spanned by {diagonal, e x C, C x e}; the intersection
// form depends only on the genus.
struct SurfaceClass {
    int genus = 1;
    // coefficients over {Delta, e x C, C x e}
    long c_diag = 0, c_vert = 0, c_horiz = 0;
};

long intersection_number(const SurfaceClass& a, const SurfaceClass& b);
SurfaceClass delta11_class(int genus); // Delta - e x C - C x e

// deg(Delta(1,1)^2) computed by expanding the intersection form; equals -2g.
long delta11_self_intersection(int genus);

// deg(w1.w2) * <a1, a2>_NT through class_to_point.
double weighted_height_relation(long deg_w1w2, const EllipticCurveQ& E,
                             const DegreeZeroDivisorClass& a1,
                             const DegreeZeroDivisorClass& a2, const HeightOptions& opt);

// prod_j deg(Delta_{C_j}(1,1)^2) * <p1 - q1, p2 - q2>_NT.
double graded_height_ex5(const EllipticCurveQ& E, const ECPoint& p1, const ECPoint& q1,
                         const ECPoint& p2, const ECPoint& q2, const std::vector<int>& genera,
                         const HeightOptions& opt);

} // namespace heightlab::nt

#endif
