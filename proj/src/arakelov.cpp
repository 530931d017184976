#include "heightlab/arakelov.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace heightlab::arakelov {

using Big = boost::multiprecision::cpp_bin_float_50;

NumberField NumberField::rationals() { return NumberField(); }

NumberField NumberField::quadratic(const Int& d) {
    if (d == 0 || d == 1) throw InvalidArgument("d must be squarefree and != 0, 1");
    for (const auto& [p, e] : factor_integer(d))
        if (e >= 2) throw InvalidArgument("d must be squarefree");
    NumberField k;
    k.rational_ = false;
    k.d_ = d;
    // d mod 4 == 1 in the arithmetic sense (negative d included)
    Int r = d % 4;
    if (r < 0) r += 4;
    k.half_basis_ = (r == 1);
    return k;
}

Int NumberField::discriminant() const {
    if (rational_) return 1;
    return half_basis_ ? d_ : 4 * d_;
}

int NumberField::real_embeddings() const {
    if (rational_) return 1;
    return d_ > 0 ? 2 : 0;
}

int NumberField::complex_pairs() const { return (!rational_ && d_ < 0) ? 1 : 0; }

std::string NumberField::to_string() const {
    if (rational_) return "Q";
    return "Q(sqrt(" + d_.str() + "))";
}

Rat norm(const NumberField& k, const FieldElement& x) {
    if (k.is_rational()) return x.a;
    if (!k.half_basis()) return x.a * x.a - Rat(k.d()) * x.b * x.b;
    // omega = (1+sqrt d)/2: N(a + b*omega) = (a + b/2)^2 - d (b/2)^2
    Rat h = x.b / 2;
    return (x.a + h) * (x.a + h) - Rat(k.d()) * h * h;
}

Rat trace(const NumberField& k, const FieldElement& x) {
    if (k.is_rational()) return x.a;
    return k.half_basis() ? Rat(2 * x.a + x.b) : Rat(2 * x.a);
}

FieldElement multiply(const NumberField& k, const FieldElement& x, const FieldElement& y) {
    if (k.is_rational()) return {x.a * y.a, Rat(0)};
    if (!k.half_basis())
        return {x.a * y.a + Rat(k.d()) * x.b * y.b, x.a * y.b + x.b * y.a};
    // omega^2 = omega + (d-1)/4
    Rat m = Rat(k.d() - 1) / 4;
    return {x.a * y.a + m * x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

std::string FinitePrime::label() const {
    switch (splitting) {
        case Splitting::rational: return "(" + p.str() + ")";
        case Splitting::inert: return "(" + p.str() + ") inert";
        case Splitting::ramified: return "(" + p.str() + ") ramified";
        case Splitting::split:
            return "(" + p.str() + ", w - " + root.str() + ")";
    }
    return "?";
}

std::string InfinitePlace::label() const {
    switch (kind) {
        case rational_real: return "real";
        case real_plus: return "real+";
        case real_minus: return "real-";
        case complex_pair: return "complex";
    }
    return "?";
}

void ArakelovDivisor::add_finite(const FinitePrime& p, int m) {
    if (m == 0) return;
    auto it = finite.find(p);
    if (it == finite.end()) {
        finite.emplace(p, m);
    } else {
        it->second += m;
        if (it->second == 0) finite.erase(it);
    }
}

ArakelovDivisor operator+(ArakelovDivisor a, const ArakelovDivisor& b) {
    for (const auto& [p, m] : b.finite) a.add_finite(p, m);
    for (const auto& [pl, l] : b.infinite) a.infinite[pl] += l;
    return a;
}

Int sqrt_mod_prime(Int a, const Int& p) {
    using boost::multiprecision::powm;
    a %= p;
    if (a < 0) a += p;
    if (p == 2 || a == 0) return a;
    if (powm(a, (p - 1) / 2, p) != 1)
        throw InvalidArgument(a.str() + " is not a quadratic residue mod " + p.str());
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0, tt = t;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Kronecker symbol (d|p) for odd prime p.
int legendre(Int d, const Int& p) {
    using boost::multiprecision::powm;
    d %= p;
    if (d < 0) d += p;
    if (d == 0) return 0;
    Int r = powm(d, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Root of omega's minimal polynomial mod p for a split prime.
Int split_root_mod_p(const NumberField& k, const Int& p) {
    Int d = k.d() % p;
    if (d < 0) d += p;
    if (!k.half_basis()) return sqrt_mod_prime(d, p);
    if (p == 2) {
        // x^2 - x - (d-1)/4 mod 2 with (d-1)/4 even: roots 0 and 1; pick 0
        return 0;
    }
    Int s = sqrt_mod_prime(d, p);
    // omega = (1 + sqrt d)/2
    Int inv2 = (p + 1) / 2;
    return (1 + s) * inv2 % p;
}

// Hensel lift of the split root to a solution of omega's minimal polynomial
// mod p^prec.
Int lift_root(const NumberField& k, const Int& p, Int r, int prec) {
    using boost::multiprecision::powm;
    Int mod = p;
    // g(x) = x^2 - d  or  x^2 - x - (d-1)/4 ; g'(x) = 2x or 2x - 1
    auto g = [&](const Int& x, const Int& m) {
        Int v = k.half_basis() ? Int((x * x - x - (k.d() - 1) / 4) % m) : Int((x * x - k.d()) % m);
        if (v < 0) v += m;
        return v;
    };
    auto gp = [&](const Int& x, const Int& m) {
        Int v = (k.half_basis() ? Int(2 * x - 1) : Int(2 * x)) % m;
        if (v < 0) v += m;
        return v;
    };
    for (int j = 1; j < prec; ++j) {
        Int next_mod = mod * p;
        Int fr = g(r, next_mod);
        Int dr = gp(r, next_mod);
        // dr invertible mod next_mod: p odd or half-basis at 2
        Int inv = 1, base = dr, phi_exp = next_mod / p * (p - 1) - 1;
        inv = powm(base, phi_exp, next_mod);
        r = (r - fr * inv) % next_mod;
        if (r < 0) r += next_mod;
        mod = next_mod;
    }
    return r;
}

} // namespace

std::vector<FinitePrime> factor_prime(const NumberField& k, const Int& p) {
    if (!is_prime(p)) throw InvalidArgument(p.str() + " is not prime");
    if (k.is_rational()) return {FinitePrime{p, Splitting::rational, 1, 1, 0}};
    Int disc = k.discriminant();
    if (disc % p == 0) return {FinitePrime{p, Splitting::ramified, 2, 1, 0}};
    bool split;
    if (p == 2) {
        // unramified 2 requires d = 1 (mod 4); split iff d = 1 (mod 8)
        Int r = k.d() % 8;
        if (r < 0) r += 8;
        split = (r == 1);
    } else {
        split = legendre(k.d(), p) == 1;
    }
    if (!split) return {FinitePrime{p, Splitting::inert, 1, 2, 0}};
    Int r = split_root_mod_p(k, p);
    Int r2 = k.half_basis() ? Int((1 - r) % p) : Int((p - r) % p); // conjugate root
    if (r2 < 0) r2 += p;
    FinitePrime P1{p, Splitting::split, 1, 1, r < r2 ? r : r2};
    FinitePrime P2{p, Splitting::split, 1, 1, r < r2 ? r2 : r};
    return {P1, P2};
}

namespace {

// Integral numerator (A, B) and positive denominator m with
// alpha = (A + B*omega)/m.
struct Cleared {
    Int A, B, m;
};

Cleared clear_denominators(const FieldElement& alpha) {
    Int m = lcm_int(den(alpha.a), den(alpha.b));
    return {num(alpha.a * m), num(alpha.b * m), m};
}

int integral_valuation(const NumberField& k, const Int& A, const Int& B,
                       const FinitePrime& P) {
    FieldElement beta{Rat(A), Rat(B)};
    Rat nb = norm(k, beta);
    if (nb == 0) throw ZeroElement("valuation of zero");
    int J = ord_p(num(nb), P.p);
    switch (P.splitting) {
        case Splitting::rational:
            return ord_p(A, P.p);
        case Splitting::inert:
            return J / 2;
        case Splitting::ramified:
            return J;
        case Splitting::split: {
            if (J == 0) return 0;
            Int r = lift_root(k, P.p, P.root, J);
            Int x = A + B * r;
            if (x == 0) return J;
            return std::min(J, ord_p(x, P.p));
        }
    }
    throw InvalidArgument("unreachable");
}

} // namespace

int valuation(const NumberField& k, const FieldElement& alpha, const FinitePrime& P) {
    if (alpha.is_zero()) throw ZeroElement("valuation of zero");
    if (k.is_rational() && alpha.b != 0)
        throw InvalidArgument("element outside Q");
    Cleared c = clear_denominators(alpha);
    return integral_valuation(k, c.A, c.B, P) - P.e * ord_p(c.m, P.p);
}

ArakelovDivisor principal_divisor(const NumberField& k, const FieldElement& alpha) {
    if (alpha.is_zero()) throw ZeroElement("principal divisor of zero");
    if (k.is_rational() && alpha.b != 0) throw InvalidArgument("element outside Q");
    ArakelovDivisor D;
    Cleared c = clear_denominators(alpha);
    Rat nb = norm(k, FieldElement{Rat(c.A), Rat(c.B)});
    std::map<Int, int> primes;
    for (const auto& [p, e] : factor_integer(num(nb))) primes.emplace(p, 0);
    for (const auto& [p, e] : factor_integer(c.m)) primes.emplace(p, 0);
    for (const auto& [p, tag] : primes) {
        (void)tag;
        for (const auto& P : factor_prime(k, p)) {
            int v = valuation(k, alpha, P);
            D.add_finite(P, v);
        }
    }
    // infinite part, at 50-digit precision so the product formula closes to
    // well below the 1e-10 reporting tolerance
    if (k.is_rational()) {
        D.infinite[InfinitePlace{InfinitePlace::rational_real}] = -log_rat_abs(alpha.a);
    } else if (k.d() < 0) {
        // -log|tau(alpha)|^2 = -log N(alpha)
        D.infinite[InfinitePlace{InfinitePlace::complex_pair}] =
            -log_rat_abs(norm(k, alpha));
    } else {
        Big sq = sqrt(static_cast<Big>(k.d()));
        Big wplus = k.half_basis() ? (1 + sq) / 2 : sq;
        Big wminus = k.half_basis() ? (1 - sq) / 2 : -sq;
        Big a = static_cast<Big>(alpha.a), b = static_cast<Big>(alpha.b);
        D.infinite[InfinitePlace{InfinitePlace::real_plus}] =
            -static_cast<double>(log(boost::multiprecision::abs(a + b * wplus)));
        D.infinite[InfinitePlace{InfinitePlace::real_minus}] =
            -static_cast<double>(log(boost::multiprecision::abs(a + b * wminus)));
    }
    return D;
}

double degree(const NumberField& k, const ArakelovDivisor& D) {
    (void)k;
    double s = 0.0;
    for (const auto& [P, m] : D.finite) s += m * P.log_norm();
    for (const auto& [pl, l] : D.infinite) s += l;
    return s;
}

double product_formula_check(const NumberField& k, const FieldElement& alpha) {
    return degree(k, principal_divisor(k, alpha));
}

} // namespace heightlab::arakelov
