#include "alg3/poly.hpp"

namespace alg3 {

Poly1 Poly1::monic() const {
    if (is_zero()) return {};
    Poly1 r = *this;
    Scalar inv = leading().inverse();
    for (auto& x : r.c) x *= inv;
    return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), Scalar(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
    std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), Scalar(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return Poly1(std::move(c));
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c.size() + b.c.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return Poly1(std::move(c));
}

std::pair<Poly1, Poly1> poly_divmod(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw DivisionByZero{};
    Poly1 rem = num;
    if (num.degree() < den.degree()) return {Poly1{}, rem};
    std::vector<Scalar> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Scalar(0));
    Scalar lead_inv = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Scalar factor = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = factor;
        for (size_t i = 0; i < den.c.size(); ++i)
            rem.c[static_cast<size_t>(shift) + i] -= factor * den.c[i];
        rem.trim();
    }
    return {Poly1(std::move(q)), rem};
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void Poly3::add_term(const Key& k, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Scalar Poly3::eval(const std::vector<Scalar>& x) const {
    Scalar acc(0);
    for (const auto& [k, s] : terms) {
        Scalar t = s;
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < k[v]; ++e) t *= x[static_cast<size_t>(v)];
        acc += t;
    }
    return acc;
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [k, s] : b.terms) r.add_term(k, s);
    return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [k, s] : b.terms) r.add_term(k, -s);
    return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ka, sa] : a.terms)
        for (const auto& [kb, sb] : b.terms)
            r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, sa * sb);
    return r;
}

Poly3 poly_det(const std::vector<std::vector<Poly3>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Poly3 det;
    for (size_t j = 0; j < 3; ++j) {
        Poly3 minor = m[1][(j + 1) % 3] * m[2][(j + 2) % 3] - m[1][(j + 2) % 3] * m[2][(j + 1) % 3];
        det = det + m[0][j] * minor;
    }
    return det;
}

}  // namespace alg3
