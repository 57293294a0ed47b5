#pragma once

#include <array>
#include <map>
#include <vector>

#include "alg3/scalar.hpp"

namespace alg3 {

/// Univariate polynomial over the scalar field, coefficients low to high.
struct Poly1 {
    std::vector<Scalar> c;

    Poly1() = default;
    explicit Poly1(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Scalar& leading() const { return c.back(); }

    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly1 derivative() const {
        if (c.size() <= 1) return {};
        std::vector<Scalar> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Scalar(static_cast<long>(i));
        return Poly1(std::move(d));
    }

    Poly1 monic() const;

    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly1, Poly1> poly_divmod(const Poly1& num, const Poly1& den);

/// Monic gcd over the scalar field.
Poly1 poly_gcd(Poly1 a, Poly1 b);

/// Sparse polynomial in at most three variables, used for the exact
/// polynomial-identity shape decisions.
struct Poly3 {
    using Key = std::array<int, 3>;
    std::map<Key, Scalar> terms;

    static Poly3 constant(const Scalar& s) {
        Poly3 p;
        if (!s.is_zero()) p.terms[{0, 0, 0}] = s;
        return p;
    }
    static Poly3 variable(int i) {
        Poly3 p;
        Key k{0, 0, 0};
        k[i] = 1;
        p.terms[k] = Scalar(1);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Key& k, const Scalar& s);

    Scalar eval(const std::vector<Scalar>& x) const;

    friend Poly3 operator+(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
};

/// 3x3 (or 2x2) determinant of polynomial entries.
Poly3 poly_det(const std::vector<std::vector<Poly3>>& m);

}  // namespace alg3
