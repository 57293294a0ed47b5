#include "alg3/ext_scalar.hpp"

#include <algorithm>
#include <cstddef>

namespace alg3 {

namespace {

// Product of radicands selected by mask.
Scalar mask_product(const std::vector<Scalar>& rads, unsigned mask) {
    Scalar p(1);
    for (size_t b = 0; b < rads.size(); ++b)
        if (mask & (1u << b)) p *= rads[b];
    return p;
}

}  // namespace

ExtScalar ext_from_parts(std::vector<Scalar> rads, std::vector<Scalar> coef) {
    ExtScalar x;
    x.rads_ = std::move(rads);
    x.coef_ = std::move(coef);
    x.normalize();
    return x;
}

ExtScalar ExtScalar::radical(const Scalar& radicand) {
    Scalar root;
    if (scalar_is_square(radicand, &root)) {
        if (!in_half_plane(root)) root = -root;
        return ExtScalar(root);
    }
    return ext_from_parts({radicand}, {Scalar(0), Scalar(1)});
}

bool ExtScalar::is_zero() const {
    for (const auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

const Scalar& ExtScalar::as_scalar() const {
    if (!is_scalar()) throw Error("ExtScalar is not a plain scalar: " + to_string());
    return coef_[0];
}

void ExtScalar::normalize() {
    // Fold radicands that are squares into the coefficients.
    for (size_t b = 0; b < rads_.size();) {
        Scalar root;
        if (!scalar_is_square(rads_[b], &root)) {
            ++b;
            continue;
        }
        if (!in_half_plane(root)) root = -root;
        std::vector<Scalar> nc(coef_.size() >> 1, Scalar(0));
        unsigned bit = 1u << b;
        for (unsigned m = 0; m < coef_.size(); ++m) {
            unsigned low = m & (bit - 1);
            unsigned high = (m >> (b + 1)) << b;
            unsigned nm = high | low;
            if (m & bit)
                nc[nm] += coef_[m] * root;
            else
                nc[nm] += coef_[m];
        }
        rads_.erase(rads_.begin() + static_cast<std::ptrdiff_t>(b));
        coef_ = std::move(nc);
    }
    // Drop radicands whose components all vanish.
    for (size_t b = 0; b < rads_.size();) {
        unsigned bit = 1u << b;
        bool used = false;
        for (unsigned m = 0; m < coef_.size(); ++m)
            if ((m & bit) && !coef_[m].is_zero()) used = true;
        if (used) {
            ++b;
            continue;
        }
        std::vector<Scalar> nc(coef_.size() >> 1, Scalar(0));
        for (unsigned m = 0; m < coef_.size(); ++m) {
            if (m & bit) continue;
            unsigned low = m & (bit - 1);
            unsigned high = (m >> (b + 1)) << b;
            nc[high | low] = coef_[m];
        }
        rads_.erase(rads_.begin() + static_cast<std::ptrdiff_t>(b));
        coef_ = std::move(nc);
    }
}

void ExtScalar::align(const ExtScalar& a, const ExtScalar& b, std::vector<Scalar>& rads,
                      std::vector<Scalar>& ca, std::vector<Scalar>& cb) {
    rads = a.rads_;
    // Image of each b-radicand root in the merged tower: root = c * prod(mask).
    std::vector<std::pair<unsigned, Scalar>> img(b.rads_.size());
    for (size_t j = 0; j < b.rads_.size(); ++j) {
        const Scalar& r = b.rads_[j];
        bool placed = false;
        for (unsigned mask = 1; mask < (1u << rads.size()) && !placed; ++mask) {
            Scalar ratio = r / mask_product(rads, mask);
            Scalar c;
            if (scalar_is_square(ratio, &c)) {
                if (!in_half_plane(c)) c = -c;
                img[j] = {mask, c};
                placed = true;
            }
        }
        if (!placed) {
            if (rads.size() >= 2) throw UnsupportedTower{};
            rads.push_back(r);
            img[j] = {1u << (rads.size() - 1), Scalar(1)};
        }
    }
    size_t n = 1u << rads.size();
    ca.assign(n, Scalar(0));
    for (size_t m = 0; m < a.coef_.size(); ++m) ca[m] = a.coef_[m];
    cb.assign(n, Scalar(0));
    for (size_t m = 0; m < b.coef_.size(); ++m) {
        unsigned mask = 0;
        Scalar c = b.coef_[m];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < b.rads_.size(); ++j) {
            if (!(m & (1u << j))) continue;
            unsigned shared = mask & img[j].first;
            c *= img[j].second * mask_product(rads, shared);
            mask ^= img[j].first;
        }
        cb[mask] += c;
    }
}

ExtScalar ExtScalar::operator-() const {
    ExtScalar r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    std::vector<Scalar> rads, ca, cb;
    align(*this, o, rads, ca, cb);
    for (size_t m = 0; m < ca.size(); ++m) ca[m] += cb[m];
    *this = ext_from_parts(std::move(rads), std::move(ca));
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) { return *this += -o; }

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
    std::vector<Scalar> rads, ca, cb;
    align(*this, o, rads, ca, cb);
    std::vector<Scalar> out(ca.size(), Scalar(0));
    for (unsigned m1 = 0; m1 < ca.size(); ++m1) {
        if (ca[m1].is_zero()) continue;
        for (unsigned m2 = 0; m2 < cb.size(); ++m2) {
            if (cb[m2].is_zero()) continue;
            out[m1 ^ m2] += ca[m1] * cb[m2] * mask_product(rads, m1 & m2);
        }
    }
    *this = ext_from_parts(std::move(rads), std::move(out));
    return *this;
}

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    if (rads_.empty()) return ExtScalar(coef_[0].inverse());
    // Split off the last radicand: x = A + B*sqrt(r); then
    // 1/x = (A - B*sqrt(r)) / (A^2 - B^2 r), the denominator one level down.
    size_t b = rads_.size() - 1;
    unsigned bit = 1u << b;
    std::vector<Scalar> sub(rads_.begin(), rads_.end() - 1);
    std::vector<Scalar> lo(coef_.size() >> 1), hi(coef_.size() >> 1);
    for (unsigned m = 0; m < coef_.size(); ++m) {
        unsigned nm = m & (bit - 1);
        if (m & bit)
            hi[nm] = coef_[m];
        else
            lo[nm] = coef_[m];
    }
    ExtScalar A = ext_from_parts(sub, lo);
    ExtScalar B = ext_from_parts(sub, hi);
    ExtScalar R{rads_[b]};
    ExtScalar den = A * A - B * B * R;
    ExtScalar deninv = den.inverse();
    ExtScalar conj_part = -(B * deninv);
    ExtScalar base_part = A * deninv;
    // Reassemble base_part + conj_part * sqrt(r) in the full tower.
    ExtScalar root = ext_from_parts({rads_[b]}, {Scalar(0), Scalar(1)});
    return base_part + conj_part * root;
}

bool operator==(const ExtScalar& a, const ExtScalar& b) { return (a - b).is_zero(); }

std::string ExtScalar::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (unsigned m = 0; m < coef_.size(); ++m) {
        if (coef_[m].is_zero()) continue;
        std::string term = scalar_to_string(coef_[m]);
        bool compound = term.find_first_of("+- ", 1) != std::string::npos;
        if (compound && m != 0) term = "(" + term + ")";
        for (size_t b = 0; b < rads_.size(); ++b)
            if (m & (1u << b)) term += "*sqrt(" + scalar_to_string(rads_[b]) + ")";
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

namespace {

struct MpComplex {
    mpf_class re, im;
};

MpComplex mp_sqrt(const MpComplex& z, unsigned prec) {
    mpf_class n = z.re * z.re + z.im * z.im;
    mpf_class r(0, prec);
    mpf_sqrt(r.get_mpf_t(), n.get_mpf_t());
    mpf_class p2 = (r + z.re) / 2;
    if (p2 < 0) p2 = 0;
    mpf_class p(0, prec), q(0, prec);
    mpf_sqrt(p.get_mpf_t(), p2.get_mpf_t());
    mpf_class q2 = (r - z.re) / 2;
    if (q2 < 0) q2 = 0;
    mpf_sqrt(q.get_mpf_t(), q2.get_mpf_t());
    if (z.im < 0) q = -q;
    return {p, q};
}

MpComplex mp_of_scalar(const Scalar& s, unsigned prec) {
    mpf_class re(0, prec), im(0, prec);
    re = mpf_class(s.re.get_num(), prec) / mpf_class(s.re.get_den(), prec);
    im = mpf_class(s.im.get_num(), prec) / mpf_class(s.im.get_den(), prec);
    return {re, im};
}

}  // namespace

std::pair<mpf_class, mpf_class> ExtScalar::evaluate(unsigned prec_bits) const {
    std::vector<MpComplex> roots;
    roots.reserve(rads_.size());
    for (const auto& r : rads_) roots.push_back(mp_sqrt(mp_of_scalar(r, prec_bits), prec_bits));
    MpComplex acc{mpf_class(0, prec_bits), mpf_class(0, prec_bits)};
    for (unsigned m = 0; m < coef_.size(); ++m) {
        if (coef_[m].is_zero()) continue;
        MpComplex t = mp_of_scalar(coef_[m], prec_bits);
        for (size_t b = 0; b < rads_.size(); ++b) {
            if (!(m & (1u << b))) continue;
            MpComplex nt{t.re * roots[b].re - t.im * roots[b].im,
                         t.re * roots[b].im + t.im * roots[b].re};
            t = nt;
        }
        acc.re += t.re;
        acc.im += t.im;
    }
    return {acc.re, acc.im};
}

ExtScalar scalar_sqrt(const Scalar& x, FieldMode mode) {
    if (mode == FieldMode::Real) {
        if (!x.is_real()) throw ModeMismatch("square root of non-real scalar in Real mode");
        if (sgn(x.re) < 0) throw NegativeRadicand(scalar_to_string(x));
        Rational root;
        if (rat_is_square(x.re, &root)) return ExtScalar(Scalar(root));
        return ExtScalar::radical(x);
    }
    return ExtScalar::radical(x);
}

}  // namespace alg3
