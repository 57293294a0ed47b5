#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "alg3/errors.hpp"

namespace alg3 {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical reduced rational with positive denominator. Throws ZeroDenominator.
Rational rat_normalize(const Int& num, const Int& den);

/// Exact square test; writes the nonnegative root when present.
bool rat_is_square(const Rational& x, Rational* root = nullptr);

std::string rat_to_string(const Rational& x);

/// Parses "p/q" or "p" (whitespace-insensitive). Rejects zero denominators.
std::optional<Rational> rat_parse(std::string_view text);

enum class FieldMode { Real, Complex };

inline const char* field_mode_name(FieldMode m) {
    return m == FieldMode::Real ? "real" : "complex";
}

/// Gaussian rational a + bi. In Real mode tables the imaginary part is zero.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    // Raw rationals may arrive unreduced; mpq arithmetic needs canonical form.
    Scalar(Rational r) : re(std::move(r)), im(0) {  // NOLINT(google-explicit-constructor)
        re.canonicalize();
    }
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    Scalar(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    Scalar operator-() const { return {-re, -im}; }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    Scalar inverse() const;
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar imaginary_unit() { return {0, 1}; }

/// Exact square test in Q(i); writes a root when present.
bool scalar_is_square(const Scalar& x, Scalar* root = nullptr);

/// Scalar text format: "p/q", "p/q+r/s i", integer shorthand.
std::string scalar_to_string(const Scalar& x);

std::optional<Scalar> scalar_parse(std::string_view text);

/// Half-plane rule for the family parameter: re > 0, or re = 0 and im >= 0.
bool in_half_plane(const Scalar& x);

}  // namespace alg3
