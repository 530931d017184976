// heightlab: tame symbols and Weil reciprocity on P^1, the m = 0 and m = 1
// Archimedean pairings, Neron-Tate heights and the product-of-curves graded
// pairing, Arakelov degrees on quadratic number rings, and spreads of
// defining equations with symbolic constants.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "heightlab/arakelov.hpp"
#include "heightlab/arch_pairing.hpp"
#include "heightlab/funcfield.hpp"
#include "heightlab/regulator.hpp"
#include "heightlab/neron_tate.hpp"
#include "heightlab/presets.hpp"
#include "heightlab/spreads.hpp"

using json = nlohmann::ordered_json;
using namespace heightlab;

namespace {

struct Output {
    bool as_json = true;
    json report;
    std::string text;

    void line(const std::string& s) { text += s + "\n"; }
};

double env_tol() {
    const char* v = std::getenv("HEIGHTLAB_TOL");
    if (!v) return 1e-9;
    try {
        return std::stod(v);
    } catch (...) {
        throw InvalidArgument("HEIGHTLAB_TOL is not a number");
    }
}

// ---- input parsing helpers --------------------------------------------------

funcfield::Place parse_place(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo")
        return funcfield::Place::infinity();
    auto f = funcfield::parse_rational_function(s);
    if (f.den().degree() != 0)
        throw InvalidArgument("a place is a polynomial or 'inf'");
    return funcfield::Place::finite(f.num());
}

Gaussian gaussian_from_json(const json& j) {
    if (j.is_number_integer()) return Gaussian(Rat(j.get<long>()));
    if (j.is_string()) return parse_gaussian(j.get<std::string>());
    if (j.is_array() && j.size() == 2)
        return Gaussian(parse_rat(j[0].is_string() ? j[0].get<std::string>()
                                                   : std::to_string(j[0].get<long>())),
                        parse_rat(j[1].is_string() ? j[1].get<std::string>()
                                                   : std::to_string(j[1].get<long>())));
    throw InvalidArgument("expected a Gaussian rational (number, string, or [re, im])");
}

geom::LinearForm form_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw InvalidArgument("a linear form is an array of three coefficients");
    return geom::LinearForm(gaussian_from_json(j[0]), gaussian_from_json(j[1]),
                            gaussian_from_json(j[2]));
}

json load_json_arg(const std::string& arg) {
    // inline JSON or a file path
    std::string s = arg;
    size_t first = s.find_first_not_of(" \t\n");
    if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) {
        return json::parse(s);
    }
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot open " + arg);
    json j;
    in >> j;
    return j;
}

archpair::Precycle0 precycle_from_json(const json& j) {
    archpair::Precycle0 xi;
    if (!j.contains("terms")) throw InvalidArgument("precycle JSON needs \"terms\"");
    for (const auto& t : j.at("terms")) {
        std::string f = t.at("f").get<std::string>();
        const auto& sup = t.at("support");
        if (sup.is_string() && sup.get<std::string>() == "P1") {
            xi.p1_terms.push_back({funcfield::parse_rational_function(f)});
        } else if (sup.is_object() && sup.contains("line")) {
            geom::Line line = geom::Line::from_form(form_from_json(sup.at("line")));
            xi.line_terms.push_back(
                {line, archpair::line_function_from_rational(
                           funcfield::parse_rational_function(f))});
        } else {
            throw InvalidArgument("support must be \"P1\" or {\"line\": [a,b,c]}");
        }
    }
    xi.require_single_ambient();
    return xi;
}

archpair::ZeroCycle zero_cycle_from_json(const json& j) {
    archpair::ZeroCycle z;
    if (j.contains("div")) {
        auto d = funcfield::divisor_of(
            funcfield::parse_rational_function(j.at("div").get<std::string>()));
        return archpair::zero_cycle_of_divisor(d);
    }
    for (const auto& t : j.at("points")) {
        int mult = t.at("mult").get<int>();
        if (t.contains("place")) {
            z.add(parse_place(t.at("place").get<std::string>()), mult);
        } else if (t.contains("point")) {
            const auto& p = t.at("point");
            if (!p.is_array() || p.size() != 3)
                throw InvalidArgument("a P2 point is an array of three coordinates");
            z.points.add(geom::P2Point::of(gaussian_from_json(p[0]), gaussian_from_json(p[1]),
                                           gaussian_from_json(p[2])),
                         mult);
        } else {
            throw InvalidArgument("cycle entry needs \"place\" or \"point\"");
        }
    }
    return z;
}

regulator::FormProduct form_product_from_json(const json& j) {
    regulator::FormProduct f;
    if (j.contains("scalar")) f.scalar = gaussian_from_json(j.at("scalar"));
    if (f.scalar.is_zero()) throw ZeroElement("zero scalar in a form product");
    if (j.contains("factors"))
        for (const auto& t : j.at("factors"))
            f.push(form_from_json(t.at("form")), t.at("exp").get<long>());
    return f;
}

regulator::K1Precycle k1_from_json(const json& j) {
    regulator::K1Precycle xi;
    for (const auto& t : j.at("terms")) {
        geom::LinearForm line = form_from_json(t.at("line"));
        xi.push_back(presets::k1_term_from_forms(form_from_json(t.at("num")),
                                                 form_from_json(t.at("den")), line));
    }
    return xi;
}

// ---- report helpers ---------------------------------------------------------

json exact_log_json(const archpair::ExactLog& v) {
    json r;
    r["ratio_sq"] = rat_to_string(v.ratio_sq);
    if (auto q = v.exact_ratio()) r["ratio"] = rat_to_string(*q);
    r["value"] = v.value();
    return r;
}

std::string exact_log_text(const archpair::ExactLog& v) {
    std::string s;
    if (auto q = v.exact_ratio()) s += "ratio " + rat_to_string(*q) + ", ";
    return s + "value " + std::to_string(v.value());
}

// ---- subcommand bodies -------------------------------------------------------

void run_tame(Output& out, const std::string& fs, const std::string& gs,
              const std::string& at) {
    auto f = funcfield::parse_rational_function(fs);
    auto g = funcfield::parse_rational_function(gs);
    auto p = parse_place(at);
    auto sym = funcfield::tame_symbol(f, g, p);
    Rat nrm = funcfield::residue_norm(sym);
    out.report["result"] = {{"place", p.to_string()},
                            {"symbol", sym.to_string()},
                            {"norm", rat_to_string(nrm)}};
    out.line("T_" + p.to_string() + "{f,g} = " + sym.to_string() + "   (norm " +
             rat_to_string(nrm) + ")");
}

void run_weil(Output& out, const std::string& fs, const std::string& gs) {
    auto f = funcfield::parse_rational_function(fs);
    auto g = funcfield::parse_rational_function(gs);
    auto factors = funcfield::weil_factors(f, g);
    Rat prod(1);
    json arr = json::array();
    for (const auto& fac : factors) {
        prod *= fac.norm;
        arr.push_back(json{{"place", fac.place.to_string()},
                           {"symbol", fac.symbol.to_string()},
                           {"norm", rat_to_string(fac.norm)}});
        out.line("  " + fac.place.to_string() + " : " + fac.symbol.to_string() +
                 "   norm " + rat_to_string(fac.norm));
    }
    out.report["result"] = {{"factors", arr}, {"product", rat_to_string(prod)}};
    out.line("product = " + rat_to_string(prod));
}

void run_pair0(Output& out, const std::string& xi1_arg, const std::string& xi2_arg) {
    auto xi1 = precycle_from_json(load_json_arg(xi1_arg));
    auto xi2 = zero_cycle_from_json(load_json_arg(xi2_arg));
    archpair::ExactLog v = archpair::pair_m0(xi1, xi2);
    out.report["result"] = exact_log_json(v);
    out.line("<xi1, xi2> : " + exact_log_text(v));
}

void run_recip0(Output& out, const std::string& xi1_arg, const std::string& xi2_arg) {
    auto xi1 = precycle_from_json(load_json_arg(xi1_arg));
    auto xi2 = precycle_from_json(load_json_arg(xi2_arg));
    auto [l, r] = archpair::reciprocity_check(xi1, xi2);
    out.report["result"] = {{"pair_12", exact_log_json(l)},
                            {"pair_21", exact_log_json(r)},
                            {"equal", l == r}};
    out.line("<xi1, d xi2> : " + exact_log_text(l));
    out.line("<xi2, d xi1> : " + exact_log_text(r));
    out.line(l == r ? "reciprocity holds exactly" : "RECIPROCITY VIOLATED");
}

regulator::QuadratureOptions quad_options(double tol, double guard, const std::string& orientation) {
    regulator::QuadratureOptions q;
    q.tol = tol;
    q.guard = guard;
    if (orientation == "ccw") q.orientation = regulator::Orientation::ccw;
    else if (orientation == "cw") q.orientation = regulator::Orientation::cw;
    else throw InvalidArgument("orientation must be cw or ccw");
    return q;
}

void run_pair1(Output& out, const std::string& example, const std::string& input,
               const std::string& f1s, const std::string& ps,
               const regulator::QuadratureOptions& q) {
    regulator::K1Precycle xi;
    regulator::SymbolPair sp;
    if (example == "paper") {
        xi = presets::triangle_precycle();
        sp = presets::simplex_symbol_pair(parse_gaussian(f1s), parse_gaussian(ps));
    } else if (!input.empty()) {
        json j = load_json_arg(input);
        xi = k1_from_json(j.at("xi1"));
        sp.f1 = form_product_from_json(j.at("f1"));
        sp.f2 = form_product_from_json(j.at("f2"));
    } else {
        throw InvalidArgument("pair1 needs --example paper or --input <json>");
    }
    double v = regulator::pair_m1_real(xi, sp, q);
    out.report["result"] = {
        {"value", v},
        {"orientation", q.orientation == regulator::Orientation::ccw ? "ccw" : "cw"}};
    out.line("<xi1, xi2>_1 = " + std::to_string(v));
}

void run_winding(Output& out, const std::string& example, const std::string& input,
                 const std::string& ps, long power, const regulator::QuadratureOptions& q) {
    regulator::K1Precycle xi;
    regulator::FormProduct f;
    if (example == "paper") {
        xi = presets::triangle_precycle();
        f = presets::simplex_marker_function(parse_gaussian(ps)).pow(power);
    } else if (!input.empty()) {
        json j = load_json_arg(input);
        xi = k1_from_json(j.at("xi1"));
        f = form_product_from_json(j.at("f"));
    } else {
        throw InvalidArgument("winding needs --example paper or --input <json>");
    }
    regulator::Contour gamma = regulator::build_gamma(xi);
    long w = regulator::winding_number(f, gamma, q);
    out.report["result"] = {{"winding", w}, {"arcs", gamma.arcs.size()}};
    out.line("winding = " + std::to_string(w));
}

nt::EllipticCurveQ curve_from_string(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '[' && c != ']') s += c;
    std::vector<Int> a;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) a.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (a.size() != 5) throw InvalidArgument("curve must be a1,a2,a3,a4,a6");
    return nt::EllipticCurveQ(a[0], a[1], a[2], a[3], a[4]);
}

nt::ECPoint point_from_string(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '[' && c != ']') s += c;
    if (s == "O" || s == "o" || s == "inf") return nt::ECPoint::O();
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidArgument("point must be x,y or O");
    return nt::ECPoint::affine(parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1)));
}

void run_ntheight(Output& out, const std::string& curve, const std::string& point,
                  double tol) {
    nt::EllipticCurveQ E = curve_from_string(curve);
    nt::ECPoint P = point_from_string(point);
    nt::HeightOptions h;
    h.tol = tol;
    double v = nt::canonical_height(E, P, h);
    out.report["result"] = {{"canonical_height", v},
                            {"naive_height", nt::naive_height(P)},
                            {"tol", tol}};
    out.line("canonical height = " + std::to_string(v));
}

void run_ntpair(Output& out, const std::string& curve, const std::string& Ps,
                const std::string& Qs, double tol) {
    nt::EllipticCurveQ E = curve_from_string(curve);
    nt::HeightOptions h;
    h.tol = tol;
    double v = nt::nt_pairing(E, point_from_string(Ps), point_from_string(Qs), h);
    out.report["result"] = {{"pairing", v}, {"tol", tol}};
    out.line("<P, Q>_NT = " + std::to_string(v));
}

void run_ex5(Output& out, const std::string& curve, const std::string& p1s,
             const std::string& q1s, const std::string& p2s, const std::string& q2s,
             const std::string& genera_s, double tol) {
    nt::EllipticCurveQ E = curve_from_string(curve);
    std::vector<int> genera;
    std::string cur;
    for (char c : genera_s + ",") {
        if (c == ',') {
            if (!cur.empty()) genera.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    nt::HeightOptions h;
    h.tol = tol;
    long factor = 1;
    for (int g : genera) factor *= nt::delta11_self_intersection(g);
    double v = nt::graded_height_ex5(E, point_from_string(p1s), point_from_string(q1s),
                                     point_from_string(p2s), point_from_string(q2s), genera,
                                     h);
    json gs = json::array();
    for (int g : genera) gs.push_back(g);
    out.report["result"] = {{"value", v}, {"chow_kunneth_factor", factor}, {"genera", gs}};
    out.line("graded height = " + std::to_string(v) + "  (projector factor " +
             std::to_string(factor) + ")");
}

void run_arakelov(Output& out, long d, const std::string& alpha_s) {
    arakelov::NumberField k =
        d == 0 ? arakelov::NumberField::rationals() : arakelov::NumberField::quadratic(d);
    auto comma = alpha_s.find(',');
    arakelov::FieldElement alpha{
        parse_rat(comma == std::string::npos ? alpha_s : alpha_s.substr(0, comma)),
        comma == std::string::npos ? Rat(0) : parse_rat(alpha_s.substr(comma + 1))};
    arakelov::ArakelovDivisor D = arakelov::principal_divisor(k, alpha);
    json fin = json::array();
    for (const auto& [P, m] : D.finite) {
        fin.push_back(json{{"prime", P.label()},
                           {"e", P.e},
                           {"f", P.f},
                           {"mult", m},
                           {"log_norm", P.log_norm()},
                           {"term", m * P.log_norm()}});
        out.line("  " + P.label() + "  m=" + std::to_string(m) +
                 "  log N = " + std::to_string(P.log_norm()));
    }
    json inf = json::array();
    for (const auto& [pl, l] : D.infinite) {
        inf.push_back(json{{"place", pl.label()}, {"lambda", l}});
        out.line("  " + pl.label() + "  lambda = " + std::to_string(l));
    }
    double deg = arakelov::degree(k, D);
    out.report["result"] = {{"field", k.to_string()},
                            {"norm", rat_to_string(arakelov::norm(k, alpha))},
                            {"finite", fin},
                            {"infinite", inf},
                            {"degree", deg}};
    out.line("degree(div(alpha)) = " + std::to_string(deg));
}

void run_spread(Output& out, std::vector<std::string> exprs, const std::string& example,
                bool over_z) {
    std::vector<spreads::PolyExpr> inputs;
    if (example == "affine") {
        inputs.push_back(presets::spread_example_affine());
    } else if (example == "projective") {
        inputs = presets::spread_example_projective_system();
    } else if (!example.empty()) {
        throw InvalidArgument("unknown spread example '" + example + "'");
    }
    for (const auto& e : exprs) inputs.push_back(spreads::parse_poly(e));
    if (inputs.empty()) throw InvalidArgument("spread needs --expr or --example");
    spreads::SpreadPresentation sp = spreads::spread_system(inputs, over_z);
    spreads::VerifyReport rep = spreads::verify_spread(sp);

    json subs = json::array();
    for (const auto& [c, n] : sp.substitution)
        subs.push_back(json{{"constant", c.to_string()}, {"variable", n}});
    json mains = json::array();
    for (const auto& p : sp.main) mains.push_back(spreads::mp_to_string(p));
    json rels = json::array();
    for (const auto& r : sp.relations) rels.push_back(spreads::mp_to_string(r));
    out.report["result"] = {{"main", mains},
                            {"relations", rels},
                            {"substitution", subs},
                            {"verified", rep.pass},
                            {"max_relation_residual", rep.max_relation_residual},
                            {"max_coefficient_residual", rep.max_coefficient_residual}};
    for (const auto& p : sp.main) out.line("main: " + spreads::mp_to_string(p));
    for (const auto& r : sp.relations)
        out.line("relation: " + spreads::mp_to_string(r) + " = 0");
    for (const auto& [c, n] : sp.substitution) out.line("  " + n + " <- " + c.to_string());
    out.line(rep.pass ? "verification passed at 1e-30" : "VERIFICATION FAILED");
    if (!rep.pass) throw VerificationFailed("spread verification failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"height-pairing machinery: tame symbols, Archimedean pairings, "
                 "canonical heights, Arakelov degrees, spreads"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_mode = "json";
    app.add_option("--output", output_mode, "json or text");

    double tol = 1e-9;
    try {
        tol = env_tol();
    } catch (const Error& e) {
        std::cout << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    double guard = 1e-8;
    std::string orientation = "ccw";

    std::string f_s, g_s, at_s;
    auto* tame = app.add_subcommand("tame", "tame symbol T_p{f,g}");
    tame->add_option("--f", f_s)->required();
    tame->add_option("--g", g_s)->required();
    tame->add_option("--at", at_s, "place: a polynomial in t, or inf")->required();

    auto* weil = app.add_subcommand("weil", "Weil reciprocity product over all places");
    weil->add_option("--f", f_s)->required();
    weil->add_option("--g", g_s)->required();

    std::string xi1_s, xi2_s;
    auto* pair0 = app.add_subcommand("pair0", "m=0 Archimedean pairing");
    pair0->add_option("--xi1", xi1_s, "precycle JSON (inline or file)")->required();
    pair0->add_option("--xi2", xi2_s, "0-cycle JSON, or {\"div\": \"f\"}")->required();

    auto* recip0 = app.add_subcommand("recip0", "m=0 reciprocity check");
    recip0->add_option("--xi1", xi1_s)->required();
    recip0->add_option("--xi2", xi2_s)->required();

    std::string example_s, input_s, f1_s = "2", p_s = "3/10+3/10i";
    auto* pair1 = app.add_subcommand("pair1", "m=1 real Archimedean pairing");
    pair1->add_option("--example", example_s, "preset: paper");
    pair1->add_option("--input", input_s, "JSON with xi1, f1, f2");
    pair1->add_option("--f1", f1_s, "constant f1 for the paper preset");
    pair1->add_option("--p", p_s, "marker point for the paper preset");
    pair1->add_option("--tol", tol);
    pair1->add_option("--guard", guard);
    pair1->add_option("--orientation", orientation, "cw|ccw");

    long power = 1;
    auto* winding = app.add_subcommand("winding", "winding number along the contour");
    winding->add_option("--example", example_s, "preset: paper");
    winding->add_option("--input", input_s, "JSON with xi1 and f");
    winding->add_option("--p", p_s, "marker point for the paper preset");
    winding->add_option("--power", power, "marker exponent");
    winding->add_option("--tol", tol);
    winding->add_option("--guard", guard);
    winding->add_option("--orientation", orientation, "cw|ccw");

    std::string curve_s, point_s, P_s, Q_s, p1_s, q1_s, p2_s, q2_s, genera_s = "1";
    double nt_tol = 1e-6;
    auto* ntheight = app.add_subcommand("ntheight", "Neron-Tate canonical height");
    ntheight->add_option("--curve", curve_s, "a1,a2,a3,a4,a6")->required();
    ntheight->add_option("--point", point_s, "x,y or O")->required();
    ntheight->add_option("--tol", nt_tol);

    auto* ntpair = app.add_subcommand("ntpair", "Neron-Tate pairing");
    ntpair->add_option("--curve", curve_s)->required();
    ntpair->add_option("--P", P_s)->required();
    ntpair->add_option("--Q", Q_s)->required();
    ntpair->add_option("--tol", nt_tol);

    auto* ex5 = app.add_subcommand("ex5", "graded height pairing on a product of curves");
    ex5->add_option("--curve", curve_s)->required();
    ex5->add_option("--p1", p1_s)->required();
    ex5->add_option("--q1", q1_s)->required();
    ex5->add_option("--p2", p2_s)->required();
    ex5->add_option("--q2", q2_s)->required();
    ex5->add_option("--genera", genera_s, "comma list of genera g_2..g_nu");
    ex5->add_option("--tol", nt_tol);

    long d = 0;
    std::string alpha_s;
    auto* arak = app.add_subcommand("arakelov", "Arakelov divisor of a field element");
    arak->add_option("--d", d, "squarefree d of Q(sqrt d); omit for Q");
    arak->add_option("--alpha", alpha_s, "a,b meaning a + b*omega")->required();

    std::vector<std::string> exprs;
    bool over_z = false;
    auto* spread = app.add_subcommand("spread", "spread out symbolic constants");
    spread->add_option("--expr", exprs, "polynomial text (repeatable)");
    spread->add_option("--example", example_s, "preset: affine or projective");
    spread->add_flag("--over-z", over_z, "append the inverted-denominator relation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    Output out;
    out.as_json = output_mode == "json";
    CLI::App* sub = app.get_subcommands().front();
    out.report["schema"] = 1;
    out.report["subcommand"] = sub->get_name();

    try {
        if (sub == tame) {
            out.report["inputs"] = {{"f", f_s}, {"g", g_s}, {"at", at_s}};
            run_tame(out, f_s, g_s, at_s);
        } else if (sub == weil) {
            out.report["inputs"] = {{"f", f_s}, {"g", g_s}};
            run_weil(out, f_s, g_s);
        } else if (sub == pair0) {
            out.report["inputs"] = {{"xi1", xi1_s}, {"xi2", xi2_s}};
            run_pair0(out, xi1_s, xi2_s);
        } else if (sub == recip0) {
            out.report["inputs"] = {{"xi1", xi1_s}, {"xi2", xi2_s}};
            run_recip0(out, xi1_s, xi2_s);
        } else if (sub == pair1) {
            out.report["inputs"] = {{"example", example_s}, {"f1", f1_s}, {"p", p_s},
                                    {"tol", tol},           {"guard", guard},
                                    {"orientation", orientation}};
            run_pair1(out, example_s, input_s, f1_s, p_s,
                      quad_options(tol, guard, orientation));
        } else if (sub == winding) {
            out.report["inputs"] = {{"example", example_s}, {"p", p_s}, {"power", power},
                                    {"tol", tol},           {"orientation", orientation}};
            run_winding(out, example_s, input_s, p_s, power,
                        quad_options(tol, guard, orientation));
        } else if (sub == ntheight) {
            out.report["inputs"] = {{"curve", curve_s}, {"point", point_s}, {"tol", nt_tol}};
            run_ntheight(out, curve_s, point_s, nt_tol);
        } else if (sub == ntpair) {
            out.report["inputs"] = {{"curve", curve_s}, {"P", P_s}, {"Q", Q_s},
                                    {"tol", nt_tol}};
            run_ntpair(out, curve_s, P_s, Q_s, nt_tol);
        } else if (sub == ex5) {
            out.report["inputs"] = {{"curve", curve_s}, {"p1", p1_s}, {"q1", q1_s},
                                    {"p2", p2_s},       {"q2", q2_s}, {"genera", genera_s},
                                    {"tol", nt_tol}};
            run_ex5(out, curve_s, p1_s, q1_s, p2_s, q2_s, genera_s, nt_tol);
        } else if (sub == arak) {
            out.report["inputs"] = {{"d", d}, {"alpha", alpha_s}};
            run_arakelov(out, d, alpha_s);
        } else if (sub == spread) {
            out.report["inputs"] = {{"expr", exprs}, {"example", example_s},
                                    {"over_z", over_z}};
            run_spread(out, exprs, example_s, over_z);
        }
        out.report["status"] = "ok";
        if (out.as_json) std::cout << out.report.dump(2) << "\n";
        else std::cout << out.text;
        return 0;
    } catch (const Error& e) {
        out.report["status"] = "error";
        out.report["error"] = {{"type", e.kind()}, {"message", e.what()}};
        if (out.as_json) std::cout << out.report.dump(2) << "\n";
        else std::cout << e.kind() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        out.report["status"] = "error";
        out.report["error"] = {{"type", "InternalError"}, {"message", e.what()}};
        if (out.as_json) std::cout << out.report.dump(2) << "\n";
        else std::cout << "error: " << e.what() << "\n";
        return 1;
    }
}
