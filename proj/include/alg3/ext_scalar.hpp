#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alg3/scalar.hpp"

namespace alg3 {

/// Element of a quadratic extension tower over Q(i): base + sums of
/// coefficients times products of at most two independent square roots.
///
/// Representation: a list of radicands r_1[, r_2] (each a non-square in Q(i),
/// no square ratio between them) and one coefficient per subset of radicands,
/// indexed by bitmask; the subset product of roots is the basis element.
class ExtScalar {
public:
    ExtScalar() : coef_(1, Scalar(0)) {}
    ExtScalar(Scalar s) : coef_{std::move(s)} {}  // NOLINT(google-explicit-constructor)
    ExtScalar(long v) : coef_{Scalar(v)} {}       // NOLINT(google-explicit-constructor)

    /// Formal square root of a scalar; collapses to a plain scalar when the
    /// radicand is a square in Q(i).
    static ExtScalar radical(const Scalar& radicand);

    int depth() const { return static_cast<int>(rads_.size()); }
    bool is_zero() const;
    bool is_scalar() const { return rads_.empty(); }
    const Scalar& as_scalar() const;
    const std::vector<Scalar>& radicands() const { return rads_; }

    ExtScalar operator-() const;
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    ExtScalar& operator*=(const ExtScalar& o);
    ExtScalar inverse() const;
    ExtScalar& operator/=(const ExtScalar& o) { return *this *= o.inverse(); }

    friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
    friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
    friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }
    friend bool operator==(const ExtScalar& a, const ExtScalar& b);
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    std::string to_string() const;

    /// High-precision numeric value (principal square roots), as re/im pair.
    std::pair<mpf_class, mpf_class> evaluate(unsigned prec_bits = 256) const;

private:
    std::vector<Scalar> rads_;
    std::vector<Scalar> coef_;  // size 1 << rads_.size()

    void normalize();
    static void align(const ExtScalar& a, const ExtScalar& b, std::vector<Scalar>& rads,
                      std::vector<Scalar>& ca, std::vector<Scalar>& cb);
    friend ExtScalar ext_from_parts(std::vector<Scalar> rads, std::vector<Scalar> coef);
};

/// Exact square root per the field rules: Real mode rejects negative
/// radicands (NegativeRadicand) and non-real ones (ModeMismatch); squares
/// collapse to plain scalars.
ExtScalar scalar_sqrt(const Scalar& x, FieldMode mode);

}  // namespace alg3
