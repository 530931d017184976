#ifndef HEIGHTLAB_FUNCFIELD_HPP
#define HEIGHTLAB_FUNCFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/polynomial.hpp"

namespace heightlab::funcfield {

// A closed point of P^1 over Q: either the point at infinity or a monic
// irreducible polynomial of degree 1 or 2 in t.  The residue field has
// degree equal to the polynomial's degree (infinity is rational).
class Place {
public:
    static Place infinity() { return Place(true, {}); }
    static Place finite(Poly<Rat> minimal); // checks monic, irreducible, deg <= 2
    static Place at(const Rat& root);       // the place t - root

    bool is_infinity() const { return infinite_; }
    const Poly<Rat>& minimal_polynomial() const { return minpoly_; }
    int degree() const { return infinite_ ? 1 : minpoly_.degree(); }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite_ == b.infinite_ && a.minpoly_ == b.minpoly_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    // Canonical order: rational places by root, then quadratic places by
    // coefficient lex, infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite_ != b.infinite_) return !a.infinite_;
        if (a.infinite_) return false;
        if (a.minpoly_.degree() != b.minpoly_.degree())
            return a.minpoly_.degree() < b.minpoly_.degree();
        if (a.minpoly_.degree() == 1) return -a.minpoly_.coeff(0) < -b.minpoly_.coeff(0);
        return a.minpoly_ < b.minpoly_;
    }

    std::string to_string() const;

private:
    Place(bool inf, Poly<Rat> m) : infinite_(inf), minpoly_(std::move(m)) {}
    bool infinite_ = false;
    Poly<Rat> minpoly_;
};

// a + b*theta in the residue field of a place, theta a root of the place's
// minimal polynomial; b = 0 at degree-1 places and at infinity.
struct ResidueElement {
    Place place;
    Rat a;
    Rat b;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }
    std::string to_string() const;
};

ResidueElement residue_mul(const ResidueElement& x, const ResidueElement& y);
ResidueElement residue_inverse(const ResidueElement& x);
ResidueElement residue_pow(const ResidueElement& x, long e);
bool residue_equal(const ResidueElement& x, const ResidueElement& y);

// Norm down to Q: identity at degree-1 places, a^2 - c1*a*b + c0*b^2 at a
// degree-2 place with minimal polynomial t^2 + c1*t + c0.
Rat residue_norm(const ResidueElement& x);

// Quotient of polynomials in normalized coprime form: denominator monic,
// gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : num_(Poly<Rat>::zero()), den_(Poly<Rat>::one()) {}
    RationalFunction(Poly<Rat> num, Poly<Rat> den);
    explicit RationalFunction(Poly<Rat> num) : RationalFunction(std::move(num), Poly<Rat>::one()) {}

    static RationalFunction constant(const Rat& c) {
        return RationalFunction(Poly<Rat>::constant(c));
    }
    static RationalFunction t() { return RationalFunction(Poly<Rat>::monomial(1)); }

    const Poly<Rat>& num() const { return num_; }
    const Poly<Rat>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroElement("division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(long e) const;
    std::string to_string(const std::string& var = "t") const;

private:
    Poly<Rat> num_;
    Poly<Rat> den_;
};

// Formal Z-combination of places; degree_sum() tracks ord * deg(place).
struct Divisor {
    std::map<Place, int> support;

    void add(const Place& p, int mult);
    bool empty() const { return support.empty(); }
    int degree_sum() const;
    Divisor operator-() const;
    friend Divisor operator+(Divisor a, const Divisor& b);
};

// Complete factorization into places of degree <= 2.  unit is the scalar
// with p = unit * prod minpoly^mult.  Throws FactorDegreeExceeded when an
// irreducible factor of degree >= 3 is present.
struct PlaceFactorization {
    Rat unit;
    std::map<Place, int> factors; // finite places only
};
PlaceFactorization factor_into_places(const Poly<Rat>& p);

// Rational roots of an integer polynomial (with multiplicity folded out by
// the caller); exposed for reuse and tests.
std::vector<Rat> rational_roots(const Poly<Rat>& p);

// div(f) = zeros - poles, infinity order deg(den) - deg(num).
Divisor divisor_of(const RationalFunction& f);

// Vanishing order nu_p(f); f != 0.
int order_at(const RationalFunction& f, const Place& p);

// Value of f in the residue field of p; requires nu_p(f) = 0.
ResidueElement evaluate_at(const RationalFunction& f, const Place& p);

// Tame symbol T_p{f,g} = (-1)^(nu(f)nu(g)) * (f^nu(g) / g^nu(f))(p).
ResidueElement tame_symbol(const RationalFunction& f, const RationalFunction& g,
                           const Place& p);

// Product over all places of residue_norm(tame_symbol(f,g,p)).  Weil
// reciprocity: exactly 1.
Rat weil_product(const RationalFunction& f, const RationalFunction& g);

struct WeilFactor {
    Place place;
    ResidueElement symbol;
    Rat norm;
};
std::vector<WeilFactor> weil_factors(const RationalFunction& f, const RationalFunction& g);

// Parse a rational-function expression in one variable over Q.
// Grammar: integers, rationals a/b, the variable, + - * / ^ and parentheses;
// '/' is field division, '^' takes an integer exponent.
RationalFunction parse_rational_function(const std::string& text,
                                         const std::string& var = "t");

} // namespace heightlab::funcfield

#endif
