#include "doctest.h"

#include <random>

#include "heightlab/funcfield.hpp"

using namespace heightlab;
using namespace heightlab::funcfield;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }

Place place_of(const std::string& s) {
    return Place::finite(parse_rational_function(s).num());
}

} // namespace

TEST_SUITE("funcfield") {

TEST_CASE("divisor of t") {
    Divisor d = divisor_of(rf("t"));
    REQUIRE(d.support.size() == 2);
    CHECK(d.support.at(Place::at(Rat(0))) == 1);
    CHECK(d.support.at(Place::infinity()) == -1);
    CHECK(d.degree_sum() == 0);
}

TEST_CASE("divisor of (t-2)/(t-3)") {
    Divisor d = divisor_of(rf("(t-2)/(t-3)"));
    CHECK(d.support.at(Place::at(Rat(2))) == 1);
    CHECK(d.support.at(Place::at(Rat(3))) == -1);
    CHECK(d.support.count(Place::infinity()) == 0);
}

TEST_CASE("divisor of an irreducible quadratic") {
    Divisor d = divisor_of(rf("t^2+1"));
    Place q = place_of("t^2+1");
    CHECK(q.degree() == 2);
    CHECK(d.support.at(q) == 1);
    CHECK(d.support.at(Place::infinity()) == -2);
}

TEST_CASE("factorization splits products of distinct quadratics") {
    // (t^2+1)(t^2+2): both factors irreducible, same multiplicity
    auto f = factor_into_places(rf("(t^2+1)*(t^2+2)").num());
    CHECK(f.factors.size() == 2);
    CHECK(f.factors.at(place_of("t^2+1")) == 1);
    CHECK(f.factors.at(place_of("t^2+2")) == 1);
    // triple product, mixed multiplicities, non-monic content
    auto g = factor_into_places(rf("6*(t^2+1)^2*(t^2-2)*(t^2+t+1)").num());
    CHECK(g.factors.at(place_of("t^2+1")) == 2);
    CHECK(g.factors.at(place_of("t^2-2")) == 1);
    CHECK(g.factors.at(place_of("t^2+t+1")) == 1);
    CHECK(g.unit == Rat(6));
}

TEST_CASE("degree >= 3 irreducible factors are rejected") {
    CHECK_THROWS_AS(divisor_of(rf("t^3-2")), FactorDegreeExceeded);
    CHECK_THROWS_AS(divisor_of(rf("t^5+t+1")), FactorDegreeExceeded);
    // t^6 + ... product of three distinct quadratics is fine
    CHECK_NOTHROW(divisor_of(rf("(t^2+1)*(t^2+2)*(t^2+3)")));
}

TEST_CASE("order_at") {
    CHECK(order_at(rf("t^2"), Place::at(Rat(0))) == 2);
    CHECK(order_at(rf("(t-2)/(t-3)"), Place::infinity()) == 0);
    CHECK(order_at(rf("t^2+1"), place_of("t^2+1")) == 1);
    CHECK(order_at(rf("1/t"), Place::infinity()) == 1);
}

TEST_CASE("evaluate_at") {
    CHECK(evaluate_at(rf("t-2"), Place::at(Rat(0))).a == Rat(-2));
    // (t-2)/(t-3) at theta with theta^2 = -1: (theta-2)/(theta-3)
    ResidueElement v = evaluate_at(rf("(t-2)/(t-3)"), place_of("t^2+1"));
    // (theta-2)(theta+3)... direct check: v * (theta - 3) == theta - 2
    ResidueElement theta_minus_3{v.place, Rat(-3), Rat(1)};
    ResidueElement lhs = residue_mul(v, theta_minus_3);
    CHECK(lhs.a == Rat(-2));
    CHECK(lhs.b == Rat(1));
    CHECK_THROWS_AS(evaluate_at(rf("1/t"), Place::infinity()), NotAUnit);
}

TEST_CASE("residue norms") {
    Place q = place_of("t^2+1");
    CHECK(residue_norm(ResidueElement{Place::at(Rat(1)), Rat(5), Rat(0)}) == Rat(5));
    // (theta-2)/(theta-1): |i-2|^2 / |i-1|^2 = 5/2
    ResidueElement num{q, Rat(-2), Rat(1)}, den{q, Rat(-1), Rat(1)};
    ResidueElement x = residue_mul(num, residue_inverse(den));
    CHECK(residue_norm(x) == Rat(5, 2));
    CHECK(residue_norm(ResidueElement{q, Rat(0), Rat(0)}) == Rat(0));
}

TEST_CASE("tame symbol worked examples") {
    // Steinberg: {t, 1-t} at (t) -> 1
    ResidueElement s = tame_symbol(rf("t"), rf("1-t"), Place::at(Rat(0)));
    CHECK(s.is_one());
    // {t, t-2} at infinity: nu = -1 both, -(g/f)(inf) = -1
    ResidueElement u = tame_symbol(rf("t"), rf("t-2"), Place::infinity());
    CHECK(u.a == Rat(-1));
    CHECK(u.b == Rat(0));
    // {t^2+1, (t-1)/(t-2)} at (t-1): f(1)^1 = 2
    ResidueElement w = tame_symbol(rf("t^2+1"), rf("(t-1)/(t-2)"), Place::at(Rat(1)));
    CHECK(w.a == Rat(2));
}

TEST_CASE("weil product worked examples with factors") {
    auto fac = weil_factors(rf("t"), rf("t-2"));
    REQUIRE(fac.size() == 3);
    // canonical order: (t), (t-2), infinity
    CHECK(fac[0].norm == Rat(-1, 2));
    CHECK(fac[1].norm == Rat(2));
    CHECK(fac[2].norm == Rat(-1));
    CHECK(weil_product(rf("t"), rf("t-2")) == Rat(1));

    auto fac2 = weil_factors(rf("t^2+1"), rf("(t-1)/(t-2)"));
    REQUIRE(fac2.size() == 4);
    // order: (t-1), (t-2), (t^2+1), infinity
    CHECK(fac2[0].norm == Rat(2));
    CHECK(fac2[1].norm == Rat(1, 5));
    CHECK(fac2[2].norm == Rat(5, 2));
    CHECK(fac2[3].norm == Rat(1));
    CHECK(weil_product(rf("t^2+1"), rf("(t-1)/(t-2)")) == Rat(1));
}

TEST_CASE("weil product of a constant is 1") {
    CHECK(weil_product(rf("7/3"), rf("(t-1)*(t^2+2)/(t-5)^3")) == Rat(1));
}

TEST_CASE("bimultiplicativity of the tame symbol") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-6, 6);
    auto rand_fn = [&]() {
        while (true) {
            Rat a(coef(rng)), b(coef(rng)), c(coef(rng)), d(coef(rng));
            if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
            try {
                return RationalFunction(Poly<Rat>(std::vector<Rat>{a, b, Rat(1)}),
                                        Poly<Rat>(std::vector<Rat>{c, d, Rat(1)}));
            } catch (const Error&) { continue; }
        }
    };
    std::vector<Place> places = {Place::at(Rat(0)), Place::at(Rat(2)), Place::infinity(),
                                 place_of("t^2+1"), place_of("t^2-2")};
    for (int k = 0; k < 40; ++k) {
        RationalFunction f1 = rand_fn(), f2 = rand_fn(), g = rand_fn();
        for (const auto& p : places) {
            ResidueElement lhs = tame_symbol(f1 * f2, g, p);
            ResidueElement rhs = residue_mul(tame_symbol(f1, g, p), tame_symbol(f2, g, p));
            CHECK(residue_equal(lhs, rhs));
        }
    }
}

TEST_CASE("antisymmetry up to sign") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-8, 8);
    auto rand_lin = [&]() {
        while (true) {
            int a = coef(rng);
            if (a != 0) return rf("t-(" + std::to_string(a) + ")");
        }
    };
    for (int k = 0; k < 30; ++k) {
        RationalFunction f = rand_lin() * rand_lin();
        RationalFunction g = rand_lin();
        for (const auto& p : {Place::at(Rat(0)), Place::at(Rat(3)), Place::infinity()}) {
            long nf = order_at(f, p), ng = order_at(g, p);
            if ((nf * ng) % 2 != 0) continue;
            ResidueElement prod = residue_mul(tame_symbol(f, g, p), tame_symbol(g, f, p));
            CHECK(prod.is_one());
        }
    }
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(rf("t +"), SyntaxError);
    CHECK_THROWS_AS(rf("(t"), SyntaxError);
    CHECK_THROWS_AS(rf("x+1"), SyntaxError);
    CHECK(rf("1/2*t") == rf("t/2"));
}

} // TEST_SUITE
