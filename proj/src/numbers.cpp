#include "heightlab/numbers.hpp"

#include <algorithm>
#include <cctype>

namespace heightlab {

double log_int(const Int& n) {
    if (n <= 0) throw InvalidArgument("log_int requires a positive integer");
    unsigned bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 900) return std::log(n.convert_to<double>());
    unsigned shift = bits - 512;
    Int top = n >> shift;
    return std::log(top.convert_to<double>()) + shift * 0.6931471805599453;
}

double log_rat_abs(const Rat& q) {
    if (q == 0) throw InvalidArgument("log of zero");
    return log_int(abs_int(num(q))) - log_int(den(q));
}

double to_double(const Rat& q) {
    if (q == 0) return 0.0;
    Int n = abs_int(num(q)), d = den(q);
    unsigned bn = boost::multiprecision::msb(n), bd = boost::multiprecision::msb(d);
    if (bn < 900 && bd < 900)
        return q.convert_to<double>();
    double v = std::exp(log_int(n) - log_int(d));
    return num(q) < 0 ? -v : v;
}

Int pow_int(const Int& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw ZeroElement("negative power of zero");
    }
    unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    Rat r(pow_int(num(base), ae), pow_int(den(base), ae));
    if (e < 0) r = Rat(1) / r;
    return r;
}

std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rat> sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = sqrt_exact(num(q));
    auto d = sqrt_exact(den(q));
    if (n && d) return Rat(*n, *d);
    return std::nullopt;
}

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    n = abs_int(n);
    if (n == 0) throw ZeroElement("factor_integer(0)");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factor_integer(n);
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t sz = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ord_p(Int n, const Int& p) {
    if (n == 0) throw ZeroElement("ord_p(0)");
    n = abs_int(n);
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw SyntaxError("empty rational literal");
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    auto digits = [&](std::string& dst) {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) dst += s[i++];
        return i > start;
    };
    std::string a;
    if (!digits(a)) throw SyntaxError("bad rational literal: " + text);
    Rat r;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::string b;
        if (!digits(b) || i != s.size()) throw SyntaxError("bad rational literal: " + text);
        Int bd(b);
        if (bd == 0) throw SyntaxError("zero denominator: " + text);
        r = Rat(Int(a), bd);
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::string b;
        digits(b);
        if (i != s.size()) throw SyntaxError("bad rational literal: " + text);
        Int scale = pow_int(Int(10), static_cast<unsigned>(b.size()));
        r = Rat(Int(a) * scale + (b.empty() ? Int(0) : Int(b)), scale);
    } else if (i == s.size()) {
        r = Rat(Int(a));
    } else {
        throw SyntaxError("bad rational literal: " + text);
    }
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

Gaussian pow_gaussian(const Gaussian& base, long e) {
    if (e == 0) return Gaussian(1);
    Gaussian b = e < 0 ? base.inverse() : base;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Gaussian r(1);
    while (ae) {
        if (ae & 1) r = r * b;
        b = b * b;
        ae >>= 1;
    }
    return r;
}

std::optional<Gaussian> sqrt_exact(const Gaussian& z) {
    // (x+yi)^2 = u+vi  =>  x^2 = (u + |z|)/2, y = v/(2x)  (v != 0 case)
    if (z.im == 0) {
        if (auto r = sqrt_exact(z.re)) return Gaussian(*r);
        if (auto r = sqrt_exact(Rat(-z.re))) return Gaussian(Rat(0), *r);
        return std::nullopt;
    }
    auto r = sqrt_exact(z.norm());
    if (!r) return std::nullopt;
    auto x = sqrt_exact(Rat((z.re + *r) / 2));
    if (!x || *x == 0) return std::nullopt;
    return Gaussian(*x, z.im / (2 * *x));
}

Gaussian parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw SyntaxError("empty Gaussian literal");
    // Split into one or two signed terms; a term ending in 'i' is imaginary.
    std::vector<std::pair<char, std::string>> terms;
    size_t i = 0;
    char sign = '+';
    if (s[i] == '+' || s[i] == '-') sign = s[i++];
    while (i <= s.size()) {
        size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        terms.emplace_back(sign, s.substr(start, i - start));
        if (i == s.size()) break;
        sign = s[i++];
    }
    if (terms.empty() || terms.size() > 2) throw SyntaxError("bad Gaussian literal: " + text);
    Gaussian out(0);
    bool seen_re = false, seen_im = false;
    for (auto& [sg, body] : terms) {
        if (body.empty()) throw SyntaxError("bad Gaussian literal: " + text);
        bool imag = body.back() == 'i';
        if (imag) body.pop_back();
        if (imag && body.empty()) body = "1";
        if (imag && body.back() == '*') body.pop_back();
        Rat v = parse_rat(body.empty() ? "1" : body);
        if (sg == '-') v = -v;
        if (imag) {
            if (seen_im) throw SyntaxError("bad Gaussian literal: " + text);
            out.im = v;
            seen_im = true;
        } else {
            if (seen_re) throw SyntaxError("bad Gaussian literal: " + text);
            out.re = v;
            seen_re = true;
        }
    }
    return out;
}

std::string gaussian_to_string(const Gaussian& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string s;
    if (z.re != 0) s = rat_to_string(z.re);
    if (z.im > 0 && !s.empty()) s += "+";
    if (z.im == -1) s += "-";
    else if (z.im != 1) s += rat_to_string(z.im) + "*";
    s += "i";
    return s;
}

} // namespace heightlab
