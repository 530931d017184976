#include "doctest.h"

#include <random>

#include "heightlab/arch_pairing.hpp"

using namespace heightlab;
using namespace heightlab::archpair;
using funcfield::Place;

namespace {

funcfield::RationalFunction rf(const std::string& s) {
    return funcfield::parse_rational_function(s);
}

Precycle0 p1_precycle(std::initializer_list<std::string> fs) {
    Precycle0 xi;
    for (const auto& s : fs) xi.p1_terms.push_back({rf(s)});
    return xi;
}

ZeroCycle cycle(std::initializer_list<std::pair<Place, int>> terms) {
    ZeroCycle z;
    for (const auto& [p, m] : terms) z.add(p, m);
    return z;
}

Place quad(const std::string& s) { return Place::finite(rf(s).num()); }

} // namespace

TEST_SUITE("arch_pairing") {

TEST_CASE("boundary on P1") {
    ZeroCycle b = boundary(p1_precycle({"t"}));
    CHECK(b.places.at(Place::at(Rat(0))) == 1);
    CHECK(b.places.at(Place::infinity()) == -1);
    CHECK(boundary(p1_precycle({"t", "1/t"})).empty());
}

TEST_CASE("boundary of a line term lands on exact P2 points") {
    // g0 = -z1/z2 on V(z0): divisor [0:0:1] - [0:1:0]
    geom::Line l0 = geom::Line::from_form(
        geom::LinearForm(Gaussian(1), Gaussian(0), Gaussian(0)));
    geom::LineFunction g0 = geom::LineFunction::ratio(
        geom::restrict_form(geom::LinearForm(Gaussian(0), Gaussian(-1), Gaussian(0)), l0),
        geom::restrict_form(geom::LinearForm(Gaussian(0), Gaussian(0), Gaussian(1)), l0));
    Precycle0 xi;
    xi.line_terms.push_back({l0, g0});
    ZeroCycle b = boundary(xi);
    geom::P2Point e2 = geom::P2Point::of(Gaussian(0), Gaussian(0), Gaussian(1));
    geom::P2Point e1 = geom::P2Point::of(Gaussian(0), Gaussian(1), Gaussian(0));
    CHECK(b.points.points.at(e2) == 1);
    CHECK(b.points.points.at(e1) == -1);
}

TEST_CASE("pair_m0 worked values") {
    // <(t, P1), (2)-(3)> = log(2/3)
    ExactLog v = pair_m0(p1_precycle({"t"}),
                         cycle({{Place::at(Rat(2)), 1}, {Place::at(Rat(3)), -1}}));
    CHECK(v.ratio_sq == Rat(4, 9));
    CHECK(*v.exact_ratio() == Rat(2, 3));
    CHECK(v.value() == doctest::Approx(std::log(2.0 / 3.0)));

    CHECK(pair_m0(p1_precycle({"t"}), ZeroCycle{}).ratio_sq == Rat(1));

    // quadratic place: |N(sqrt 2)| / 25 = 2/25
    ExactLog w = pair_m0(p1_precycle({"t"}),
                         cycle({{quad("t^2-2"), 1}, {Place::at(Rat(5)), -2}}));
    CHECK(*w.exact_ratio() == Rat(2, 25));
}

TEST_CASE("pair_m0 on a line configuration") {
    // g0 = -z1/z2 on V(z0); xi2 = ([0:1:i]) - ([0:2:1]), both on the line
    geom::Line l0 = geom::Line::from_form(
        geom::LinearForm(Gaussian(1), Gaussian(0), Gaussian(0)));
    geom::LineFunction g0 = geom::LineFunction::ratio(
        geom::restrict_form(geom::LinearForm(Gaussian(0), Gaussian(-1), Gaussian(0)), l0),
        geom::restrict_form(geom::LinearForm(Gaussian(0), Gaussian(0), Gaussian(1)), l0));
    Precycle0 xi;
    xi.line_terms.push_back({l0, g0});
    ZeroCycle xi2;
    Gaussian i(Rat(0), Rat(1));
    xi2.points.add(geom::P2Point::of(Gaussian(0), Gaussian(1), i), 1);
    xi2.points.add(geom::P2Point::of(Gaussian(0), Gaussian(2), Gaussian(1)), -1);
    ExactLog v = pair_m0(xi, xi2);
    // |g0| = 1 at the Gaussian point, 2 at [0:2:1]
    CHECK(v.ratio_sq == Rat(1, 4));
    CHECK(v.value() == doctest::Approx(-std::log(2.0)));
    // points off the line contribute nothing
    xi2.points.add(geom::P2Point::of(Gaussian(5), Gaussian(1), Gaussian(1)), 3);
    CHECK(pair_m0(xi, xi2).ratio_sq == Rat(1, 4));
}

TEST_CASE("pair_m0 preconditions") {
    CHECK_THROWS_AS(pair_m0(p1_precycle({"t"}), cycle({{Place::at(Rat(0)), 1}})),
                    SupportsNotDisjoint);
    Precycle0 xi = p1_precycle({"t", "(t-5)/(t-2)"});
    CHECK_THROWS_AS(pair_m0(xi, cycle({{Place::at(Rat(1)), 1}, {Place::at(Rat(2)), -1}})),
                    SupportsNotDisjoint);
}

TEST_CASE("reciprocity worked example") {
    auto [l, r] = reciprocity_check(p1_precycle({"t"}), p1_precycle({"(t-2)/(t-3)"}));
    CHECK(*l.exact_ratio() == Rat(2, 3));
    CHECK(*r.exact_ratio() == Rat(2, 3));
    CHECK(l == r);

    auto [l2, r2] =
        reciprocity_check(p1_precycle({"t^2+1"}), p1_precycle({"(t-1)/(t-2)"}));
    CHECK(l2 == r2);
    CHECK(*l2.exact_ratio() == Rat(2, 5)); // |1+i|^2/|2+i|^2
}

TEST_CASE("reciprocity on random admissible pairs") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-9, 9);
    // degree-balanced so the boundary avoids infinity
    auto rand_fn = [&]() {
        int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        std::string s = "(t-(" + std::to_string(a) + "))*(t^2+(" + std::to_string(b) +
                        ")*t+(" + std::to_string(c) + "))";
        return rf(s + "/(t-(" + std::to_string(d) + "))^3");
    };
    int done = 0, rounds = 0;
    while (done < 30 && rounds < 2000) {
        ++rounds;
        Precycle0 a;
        a.p1_terms.push_back({rand_fn()});
        Precycle0 b;
        b.p1_terms.push_back({rand_fn()});
        try {
            auto [l, r] = reciprocity_check(a, b);
            CHECK(l == r);
            ++done;
        } catch (const Error&) { /* inadmissible sample: shared support */ }
    }
    CHECK(done == 30);
}

TEST_CASE("well-definedness: equal boundaries pair equally against trivial cycles") {
    // on P1 two precycles with equal boundary differ by a divisorless
    // function, i.e. a scalar, which drops against any degree-0 cycle
    funcfield::RationalFunction g = rf("(t-1)/(t-4)");
    ZeroCycle xi2 = zero_cycle_of_divisor(funcfield::divisor_of(g));
    Precycle0 a = p1_precycle({"(t-2)*(t^2+1)/(t-3)^3"});
    Precycle0 b = p1_precycle({"7*(t-2)*(t^2+1)/(t-3)^3"});
    Precycle0 c = p1_precycle({"(t-2)/(t-3)", "-5*(t^2+1)/(t-3)^2"});
    CHECK(boundary(a) == boundary(b));
    CHECK(boundary(a) == boundary(c));
    CHECK(pair_m0(a, xi2) == pair_m0(b, xi2));
    CHECK(pair_m0(a, xi2) == pair_m0(c, xi2));
}

TEST_CASE("cross-check of Weil reciprocity through the pairing") {
    // prod_q |h(q)|^{m_q} over div(g) equals prod_p |g(p)|^{n_p} over div(h)
    Precycle0 h = p1_precycle({"(t-5)*(t^2+1)/(t-6)^3"});
    Precycle0 g = p1_precycle({"(t-1)/(t-4)"});
    auto [l, r] = reciprocity_check(h, g);
    CHECK(l == r);
    CHECK(l.ratio_sq == Rat(4096, 4515625)); // (64/2125)^2, by hand
}

TEST_CASE("bilinearity at the ratio level") {
    ZeroCycle xi2 = cycle({{Place::at(Rat(2)), 1}, {Place::at(Rat(3)), -1}});
    ExactLog a = pair_m0(p1_precycle({"t"}), xi2);
    ExactLog b = pair_m0(p1_precycle({"t-1"}), xi2);
    ExactLog ab = pair_m0(p1_precycle({"t", "t-1"}), xi2);
    CHECK(ab == a * b);
    ZeroCycle dbl = xi2 + xi2;
    CHECK(pair_m0(p1_precycle({"t"}), dbl).ratio_sq == a.ratio_sq * a.ratio_sq);
}

TEST_CASE("norm along worked examples") {
    FiniteSelfMap sq(rf("t^2"));
    CHECK(norm_along(sq, rf("t")) == rf("-t"));
    auto d = funcfield::divisor_of(norm_along(sq, rf("t")));
    CHECK(d.support.at(Place::at(Rat(0))) == 1);
    CHECK(d.support.at(Place::infinity()) == -1);

    FiniteSelfMap ident(rf("t"));
    CHECK(norm_along(ident, rf("(t-2)/(t-3)")) == rf("(t-2)/(t-3)"));

    auto d2 = funcfield::divisor_of(norm_along(sq, rf("t-1")));
    CHECK(d2.support.at(Place::at(Rat(1))) == 1);
    CHECK(d2.support.at(Place::infinity()) == -1);
}

TEST_CASE("pushforward matches place-level divisor pushforward") {
    // phi = (t^2+1)/t, f = (t-3)/(t+2): check div(Norm f) degree bookkeeping
    FiniteSelfMap phi(rf("(t^2+1)/t"));
    funcfield::RationalFunction f = rf("(t-3)/(t+2)");
    auto d = funcfield::divisor_of(norm_along(phi, f));
    CHECK(d.degree_sum() == 0);
    // phi(3) = 10/3 and phi(-2) = -5/2 are the expected image points
    CHECK(d.support.at(Place::at(Rat(10, 3))) == 1);
    CHECK(d.support.at(Place::at(Rat(-5, 2))) == -1);
}

TEST_CASE("pullback worked examples") {
    FiniteSelfMap sq(rf("t^2"));
    ZeroCycle f1 = pullback_cycle(sq, cycle({{Place::at(Rat(1)), 1}}));
    CHECK(f1.places.at(Place::at(Rat(1))) == 1);
    CHECK(f1.places.at(Place::at(Rat(-1))) == 1);
    ZeroCycle f0 = pullback_cycle(sq, cycle({{Place::at(Rat(0)), 1}}));
    CHECK(f0.places.at(Place::at(Rat(0))) == 2);
    FiniteSelfMap ident(rf("t"));
    ZeroCycle any = cycle({{Place::at(Rat(7)), 3}, {quad("t^2+5"), -1}});
    CHECK(pullback_cycle(ident, any) == any);
    // fiber over a quadratic place has total degree deg(phi) * deg(place);
    // t^4 + 4 = (t^2-2t+2)(t^2+2t+2) splits, t^4 + 1 does not
    ZeroCycle fq = pullback_cycle(sq, cycle({{quad("t^2+4"), 1}}));
    int total = 0;
    for (const auto& [p, m] : fq.places) total += m * p.degree();
    CHECK(total == 4);
    CHECK(fq.places.at(quad("t^2-2*t+2")) == 1);
    CHECK(fq.places.at(quad("t^2+2*t+2")) == 1);
    CHECK_THROWS_AS(pullback_cycle(sq, cycle({{quad("t^2+1"), 1}})),
                    FactorDegreeExceeded);
}

TEST_CASE("degenerate maps are rejected") {
    CHECK_THROWS_AS(FiniteSelfMap(rf("5")), DegenerateMap);
}

TEST_CASE("projection formula on random Moebius and quadratic maps") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> coef(-5, 5);
    auto rand_phi = [&](bool quadratic) {
        while (true) {
            int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
            try {
                std::string num = quadratic
                                      ? "t^2+(" + std::to_string(a) + ")*t+(" +
                                            std::to_string(b) + ")"
                                      : "(" + std::to_string(a) + ")*t+(" + std::to_string(b) +
                                            ")";
                std::string den = "(" + std::to_string(c) + ")*t+(" + std::to_string(d) + ")";
                return FiniteSelfMap(rf("(" + num + ")/(" + den + ")"));
            } catch (const Error&) { continue; }
        }
    };
    auto rand_lin = [&]() { return rf("t-(" + std::to_string(coef(rng)) + ")"); };
    int done = 0, rounds = 0;
    while (done < 25 && rounds < 4000) {
        ++rounds;
        FiniteSelfMap phi = rand_phi(done % 2 == 0);
        Precycle0 xi1;
        xi1.p1_terms.push_back({rand_lin() / rand_lin()});
        funcfield::RationalFunction g = rand_lin() / rand_lin();
        try {
            ZeroCycle xi2 = zero_cycle_of_divisor(funcfield::divisor_of(g));
            ExactLog lhs = pair_m0(xi1, pullback_cycle(phi, xi2));
            ExactLog rhs = pair_m0(pushforward_precycle(phi, xi1), xi2);
            CHECK(lhs == rhs);
            ++done;
        } catch (const Error&) { /* inadmissible configuration, resample */ }
    }
    CHECK(done == 25);
}

} // TEST_SUITE
