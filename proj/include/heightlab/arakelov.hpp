#ifndef HEIGHTLAB_ARAKELOV_HPP
#define HEIGHTLAB_ARAKELOV_HPP

#include <map>
#include <string>
#include <vector>

#include "heightlab/numbers.hpp"

namespace heightlab::arakelov {

// Q or a quadratic field Q(sqrt(d)), d squarefree != 0, 1.  The integral
// basis generator is omega = (1 + sqrt(d))/2 when d = 1 mod 4, else sqrt(d).
class NumberField {
public:
    static NumberField rationals();
    static NumberField quadratic(const Int& d);

    bool is_rational() const { return rational_; }
    const Int& d() const { return d_; }
    bool half_basis() const { return half_basis_; } // omega = (1 + sqrt d)/2
    Int discriminant() const;
    int real_embeddings() const;
    int complex_pairs() const;

    std::string to_string() const;

private:
    NumberField() = default;
    bool rational_ = true;
    Int d_ = 0;
    bool half_basis_ = false;
};

// a + b*omega; b = 0 over Q.
struct FieldElement {
    Rat a;
    Rat b;

    bool is_zero() const { return a == 0 && b == 0; }
};

Rat norm(const NumberField& k, const FieldElement& x);
Rat trace(const NumberField& k, const FieldElement& x);
FieldElement multiply(const NumberField& k, const FieldElement& x, const FieldElement& y);

enum class Splitting { rational, split, inert, ramified };

struct FinitePrime {
    Int p;
    Splitting splitting = Splitting::rational;
    int e = 1; // ramification index
    int f = 1; // residue degree
    Int root = 0; // split only: the Hensel root of omega's minimal polynomial mod p

    double log_norm() const { return f * log_int(p); }
    std::string label() const;
    friend bool operator<(const FinitePrime& a, const FinitePrime& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.root < b.root;
    }
    friend bool operator==(const FinitePrime& a, const FinitePrime& b) {
        return a.p == b.p && a.root == b.root && a.splitting == b.splitting;
    }
};

struct InfinitePlace {
    enum Kind { rational_real, real_plus, real_minus, complex_pair } kind;
    std::string label() const;
    friend bool operator<(const InfinitePlace& a, const InfinitePlace& b) {
        return a.kind < b.kind;
    }
};

struct ArakelovDivisor {
    std::map<FinitePrime, int> finite;
    std::map<InfinitePlace, double> infinite;

    void add_finite(const FinitePrime& p, int m);
    friend ArakelovDivisor operator+(ArakelovDivisor a, const ArakelovDivisor& b);
};

// Primes of k above p; sum of e*f equals the field degree.
std::vector<FinitePrime> factor_prime(const NumberField& k, const Int& p);

// Normalized exponential valuation v_P; split primes use the Hensel-lift
// membership test max{ j <= ord_p(N) : p^j | A + B*r_j }.
int valuation(const NumberField& k, const FieldElement& alpha, const FinitePrime& P);

// sum_P v_P(alpha) P + sum_{infinite} (-log|alpha|) with |.| squared at the
// complex place.
ArakelovDivisor principal_divisor(const NumberField& k, const FieldElement& alpha);

// deg(D) = sum m_P log N_P + sum lambda.
double degree(const NumberField& k, const ArakelovDivisor& D);

// degree(principal_divisor(alpha)); zero by the product formula.
double product_formula_check(const NumberField& k, const FieldElement& alpha);

// Square root of a mod prime p (a a quadratic residue); Tonelli-Shanks.
Int sqrt_mod_prime(Int a, const Int& p);

} // namespace heightlab::arakelov

#endif
