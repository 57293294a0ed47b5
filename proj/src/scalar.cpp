#include "alg3/scalar.hpp"

#include <cctype>

namespace alg3 {

Rational rat_normalize(const Int& num, const Int& den) {
    if (den == 0) throw ZeroDenominator{};
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool rat_is_square(const Rational& x, Rational* root) {
    if (sgn(x) < 0) return false;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = rat_normalize(rn, rd);
    }
    return true;
}

std::string rat_to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

// Parses [sign] digits [/ digits] starting at pos; advances pos.
std::optional<Rational> parse_rat_at(const std::string& s, size_t& pos) {
    size_t p = pos;
    bool neg = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        neg = s[p] == '-';
        ++p;
    }
    size_t d0 = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == d0) return std::nullopt;
    Int num(s.substr(d0, p - d0));
    Int den(1);
    if (p < s.size() && s[p] == '/') {
        ++p;
        size_t d1 = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == d1) return std::nullopt;
        den = Int(s.substr(d1, p - d1));
        if (den == 0) return std::nullopt;
    }
    if (neg) num = -num;
    pos = p;
    return rat_normalize(num, den);
}

}  // namespace

std::optional<Rational> rat_parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    size_t pos = 0;
    auto r = parse_rat_at(s, pos);
    if (!r || pos != s.size()) return std::nullopt;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    Rational n = norm();
    return {re / n, -im / n};
}

bool scalar_is_square(const Scalar& x, Scalar* root) {
    if (x.is_zero()) {
        if (root) *root = Scalar(0);
        return true;
    }
    if (x.is_real()) {
        Rational r;
        if (sgn(x.re) > 0 && rat_is_square(x.re, &r)) {
            if (root) *root = Scalar(r);
            return true;
        }
        if (sgn(x.re) < 0 && rat_is_square(-x.re, &r)) {
            // negative real square in Q(i): (ri)^2 = -r^2
            if (root) *root = Scalar(Rational(0), r);
            return true;
        }
        return false;
    }
    // x = (p+qi)^2 requires norm(x) = (p^2+q^2)^2 and p^2 = (re + |x|)/2.
    Rational nr;
    if (!rat_is_square(x.norm(), &nr)) return false;
    Rational p2 = (x.re + nr) / 2;
    Rational p;
    if (!rat_is_square(p2, &p)) return false;
    Scalar cand;
    if (p != 0) {
        cand = Scalar(p, x.im / (2 * p));
    } else {
        Rational q;
        if (!rat_is_square(-x.re, &q)) return false;
        cand = Scalar(Rational(0), q);
    }
    if (cand * cand != x) return false;
    if (root) *root = cand;
    return true;
}

std::string scalar_to_string(const Scalar& x) {
    if (x.im == 0) return rat_to_string(x.re);
    std::string out = rat_to_string(x.re);
    if (sgn(x.im) >= 0)
        out += "+" + rat_to_string(x.im);
    else
        out += "-" + rat_to_string(-x.im);
    out += " i";
    return out;
}

std::optional<Scalar> scalar_parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) return std::nullopt;
    size_t pos = 0;
    auto first = parse_rat_at(s, pos);
    if (!first) return std::nullopt;
    if (pos == s.size()) return Scalar(*first);
    if (s[pos] == 'i' && pos + 1 == s.size()) return Scalar(Rational(0), *first);
    auto second = parse_rat_at(s, pos);
    if (!second) return std::nullopt;
    if (pos == s.size() || s[pos] != 'i' || pos + 1 != s.size()) return std::nullopt;
    return Scalar(*first, *second);
}

bool in_half_plane(const Scalar& x) {
    int s = sgn(x.re);
    return s > 0 || (s == 0 && sgn(x.im) >= 0);
}

}  // namespace alg3
