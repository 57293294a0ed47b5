#include "alg3/classify.hpp"

#include <complex>
#include <sstream>

#include "alg3/poly.hpp"

namespace alg3 {

const char* witness_status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::ExactVerified: return "exact";
        case WitnessStatus::OmittedCubicRoot: return "omitted-cubic-root";
        case WitnessStatus::OmittedUnsupported: return "omitted-unsupported";
    }
    return "?";
}

namespace {

void expect(bool cond, const std::string& msg) {
    if (!cond) throw InternalContradiction(msg);
}

ElementExt ext_scale(const ExtScalar& c, const ElementExt& v) {
    ElementExt r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

ElementExt ext_add(const ElementExt& a, const ElementExt& b) {
    ElementExt r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ElementExt ext_sub(const ElementExt& a, const ElementExt& b) {
    ElementExt r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool ext_vec_zero(const ElementExt& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool ext_vec_eq(const ElementExt& a, const ElementExt& b) { return ext_vec_zero(ext_sub(a, b)); }

/// v = c * w for the unique c, when v and w are proportional.
std::optional<ExtScalar> ratio_of(const ElementExt& v, const ElementExt& w) {
    size_t pivot = w.size();
    for (size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == w.size()) return std::nullopt;
    ExtScalar c = v[pivot] / w[pivot];
    if (!ext_vec_eq(v, ext_scale(c, w))) return std::nullopt;
    return c;
}

/// Coordinates of v in the span of the given vectors, when consistent.
std::optional<std::vector<ExtScalar>> coords_in(const std::vector<ElementExt>& basis,
                                                const ElementExt& v) {
    int dim = static_cast<int>(v.size());
    Mat<ExtScalar> m(dim, static_cast<int>(basis.size()));
    for (int i = 0; i < dim; ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            m.at(i, static_cast<int>(j)) = basis[j][static_cast<size_t>(i)];
    return solve(m, v);
}

Mat<ExtScalar> rows_from(const std::vector<ElementExt>& rows) {
    int dim = static_cast<int>(rows[0].size());
    Mat<ExtScalar> m(static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return m;
}

TraceStep step(std::string id,
               std::vector<std::pair<std::string, std::string>> bound = {}) {
    return TraceStep{std::move(id), std::move(bound)};
}

std::string sstr(const Scalar& s) { return scalar_to_string(s); }

/// Internal outcome of a pipeline: label plus the canonical basis realized
/// inside the input algebra (rows = canonical basis vectors, input coords).
struct Reduction {
    Label label;
    std::optional<std::vector<ElementExt>> rows;
    std::vector<TraceStep> trace;
    WitnessStatus status = WitnessStatus::ExactVerified;
};

ClassifyResult finish(const StructureTable& a, InvariantProfile profile, Reduction red) {
    ClassifyResult r;
    r.label = std::move(red.label);
    r.profile = std::move(profile);
    r.trace = std::move(red.trace);
    r.witness_status = red.status;
    bool table_constructible =
        !r.label.is_family() || (r.label.k && r.label.k->is_scalar());
    if (red.rows && table_constructible) {
        Mat<ExtScalar> basis = rows_from(*red.rows);
        Mat<ExtScalar> w = mat_inverse(basis);
        StructureTable canon = canonical_table(r.label, a.mode);
        expect(satisfies_iso_criterion(a, canon, w), "constructed witness fails the criterion for " +
                                                         r.label.to_string());
        r.witness = std::move(w);
        r.witness_status = WitnessStatus::ExactVerified;
    } else if (red.rows && !table_constructible) {
        r.witness_status = WitnessStatus::OmittedUnsupported;
    }
    return r;
}

ExtScalar ext_sqrt_checked(const Scalar& x, FieldMode mode) { return scalar_sqrt(x, mode); }

}  // namespace

bool satisfies_iso_criterion(const StructureTable& a, const StructureTable& b,
                             const Mat<ExtScalar>& m) {
    if (a.dim != b.dim || m.rows != a.dim || m.cols != a.dim)
        throw DimensionMismatch("criterion check");
    int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t) {
                ExtScalar lhs(0);
                for (int s = 0; s < n; ++s) {
                    if (a.at(i, j, s).is_zero()) continue;
                    lhs += ExtScalar(a.at(i, j, s)) * m.at(s, t);
                }
                ExtScalar rhs(0);
                for (int k = 0; k < n; ++k) {
                    if (m.at(i, k).is_zero()) continue;
                    for (int l = 0; l < n; ++l) {
                        if (b.at(k, l, t).is_zero() || m.at(j, l).is_zero()) continue;
                        rhs += ExtScalar(b.at(k, l, t)) * m.at(i, k) * m.at(j, l);
                    }
                }
                if (!(lhs - rhs).is_zero()) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// dimension 1

ClassifyResult classify_dim1(const StructureTable& a) {
    if (a.dim != 1) throw DimensionMismatch("classify_dim1");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    Reduction red;
    Scalar k = a.at(0, 0, 0);
    if (k.is_zero()) {
        red.label = Label::fixed(Family::A1_0);
        red.rows = std::vector<ElementExt>{{ExtScalar(1)}};
        red.trace.push_back(step("dim1/zero"));
    } else {
        red.label = Label::fixed(Family::A1_1);
        red.rows = std::vector<ElementExt>{{ExtScalar(k.inverse())}};
        red.trace.push_back(step("dim1/idempotent", {{"k", sstr(k)}}));
    }
    return finish(a, std::move(profile), std::move(red));
}

// ---------------------------------------------------------------------------
// dimension 2

namespace {

// Dependency coefficient of a curled element: x^2 = kappa * x.
Scalar curled_coefficient(const StructureTable& t, const Element& x) {
    Element x2 = multiply(t, x, x);
    ElementExt v = lift_vec(x2), w = lift_vec(x);
    auto c = ratio_of(v, w);
    expect(c.has_value() && c->is_scalar(), "curled element with non-proportional square");
    return c->as_scalar();
}

struct Dim2Red {
    Family fam;
    std::vector<ElementExt> rows;  // canonical basis in the table's coordinates
    std::vector<TraceStep> trace;
};

Dim2Red reduce_dim2(const StructureTable& t) {
    Dim2Red out;
    Shape shape = algebra_shape(t);
    if (shape == Shape::Curled) {
        Element e = unit_vector(2, 0);
        Element f = unit_vector(2, 1);
        Scalar k1 = curled_coefficient(t, e);
        if (!k1.is_zero())
            for (auto& x : e) x = x / k1;
        Scalar k2 = curled_coefficient(t, f);
        if (!k2.is_zero())
            for (auto& x : f) x = x / k2;
        int k = k1.is_zero() ? 0 : 1;
        int l = k2.is_zero() ? 0 : 1;
        auto coord = [&](const Element& v) {
            auto c = coords_in({lift_vec(e), lift_vec(f)}, lift_vec(v));
            expect(c.has_value(), "curled product outside the plane");
            expect((*c)[0].is_scalar() && (*c)[1].is_scalar(), "non-rational curled coordinates");
            return std::array<Scalar, 2>{(*c)[0].as_scalar(), (*c)[1].as_scalar()};
        };
        auto ef = coord(multiply(t, e, f));
        auto fe = coord(multiply(t, f, e));
        auto as_bit = [](const Scalar& s) {
            expect(s.is_zero() || s == Scalar(1), "curled product coefficient outside {0,1}");
            return s.is_zero() ? 0 : 1;
        };
        std::array<int, 6> tup{k, l, as_bit(ef[0]), as_bit(ef[1]), as_bit(fe[0]), as_bit(fe[1])};
        out.trace.push_back(step("dim2/curled", {{"k", std::to_string(tup[0])},
                                                 {"l", std::to_string(tup[1])},
                                                 {"a", std::to_string(tup[2])},
                                                 {"b", std::to_string(tup[3])},
                                                 {"c", std::to_string(tup[4])},
                                                 {"d", std::to_string(tup[5])}}));
        ElementExt E = lift_vec(e), F = lift_vec(f);
        ElementExt EmF = ext_sub(E, F);
        if (tup == std::array<int, 6>{0, 0, 0, 0, 0, 0}) {
            out.fam = Family::A2_0;
            out.rows = {E, F};
        } else if (tup == std::array<int, 6>{0, 1, 0, 0, 1, 0}) {
            out.fam = Family::A2_1;
            out.rows = {E, F};
        } else if (tup == std::array<int, 6>{0, 1, 1, 0, 0, 0}) {
            out.fam = Family::A2_2;
            out.rows = {E, F};
        } else if (tup == std::array<int, 6>{1, 0, 0, 0, 0, 1}) {
            out.fam = Family::A2_2;
            out.rows = {F, E};
        } else if (tup == std::array<int, 6>{1, 0, 0, 1, 0, 0}) {
            out.fam = Family::A2_1;
            out.rows = {F, E};
        } else if (tup == std::array<int, 6>{1, 1, 0, 1, 1, 0}) {
            out.fam = Family::A2_1;
            out.rows = {EmF, F};
        } else if (tup == std::array<int, 6>{1, 1, 1, 0, 0, 1}) {
            out.fam = Family::A2_2;
            out.rows = {EmF, F};
        } else {
            throw InternalContradiction("curled pair outside the seven solutions");
        }
        return out;
    }
    // straight plane: g^3 = b g^2 + c g
    auto gopt = find_straight_element(t, ElementRequest::Straight);
    expect(gopt.has_value(), "straight plane without straight element");
    Element g = *gopt;
    Element g2 = multiply(t, g, g);
    Element g3 = multiply(t, g, g2);
    auto bc = coords_in({lift_vec(g2), lift_vec(g)}, lift_vec(g3));
    expect(bc.has_value(), "g^3 outside span{g, g^2}");
    Scalar b = (*bc)[0].as_scalar();
    Scalar c = (*bc)[1].as_scalar();
    ElementExt G = lift_vec(g), G2 = lift_vec(g2);
    if (b.is_zero() && c.is_zero()) {
        out.fam = Family::A2_3;
        out.rows = {G2, G};
        out.trace.push_back(step("dim2/straight/b=0,c=0"));
        return out;
    }
    if (c.is_zero()) {
        ExtScalar binv = ExtScalar(b).inverse();
        ElementExt e = ext_scale(binv * binv, G2);
        ElementExt f = ext_sub(ext_scale(binv, G), e);
        out.fam = Family::A2_4;
        out.rows = {e, f};
        out.trace.push_back(step("dim2/straight/b!=0,c=0", {{"b", sstr(b)}}));
        return out;
    }
    ElementExt e = ext_scale(ExtScalar(c).inverse(), ext_sub(G2, ext_scale(ExtScalar(b), G)));
    ElementExt h = ext_sub(ext_scale(ExtScalar(2), G), ext_scale(ExtScalar(b), e));
    Scalar D = b * b + Scalar(4) * c;
    if (D.is_zero()) {
        out.fam = Family::A2_6;
        out.rows = {e, h};
        out.trace.push_back(step("dim2/straight/D=0", {{"b", sstr(b)}, {"c", sstr(c)}}));
        return out;
    }
    if (t.mode == FieldMode::Real && sgn(D.re) < 0) {
        ExtScalar s = ext_sqrt_checked(-D, t.mode);
        out.fam = Family::A2_5m;
        out.rows = {e, ext_scale(s.inverse(), h)};
        out.trace.push_back(
            step("dim2/straight/D<0", {{"b", sstr(b)}, {"c", sstr(c)}, {"D", sstr(D)}}));
        return out;
    }
    ExtScalar s = scalar_sqrt(D, FieldMode::Complex);  // formal root is fine in either mode
    out.fam = Family::A2_5;
    out.rows = {e, ext_scale(s.inverse(), h)};
    out.trace.push_back(step(t.mode == FieldMode::Real ? "dim2/straight/D>0" : "dim2/straight/D!=0",
                             {{"b", sstr(b)}, {"c", sstr(c)}, {"D", sstr(D)}}));
    return out;
}

}  // namespace

ClassifyResult classify_dim2(const StructureTable& a) {
    if (a.dim != 2) throw DimensionMismatch("classify_dim2");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    Dim2Red red = reduce_dim2(a);
    Reduction r;
    r.label = Label::fixed(red.fam);
    r.rows = std::move(red.rows);
    r.trace = std::move(red.trace);
    return finish(a, std::move(profile), std::move(r));
}

// ---------------------------------------------------------------------------
// dimension 3, unital

namespace {

// Rational (or Gaussian-rational) root of a monic cubic, if one exists.
// Scales to integer coefficients, locates roots numerically, and verifies
// nearby integer candidates exactly.
std::optional<Scalar> find_cubic_scalar_root(const Poly1& p, FieldMode mode) {
    if (p.degree() != 3) throw Error("cubic expected");
    Scalar lead = p.c[3];
    Scalar c2 = p.c[2] / lead, c1 = p.c[1] / lead, c0 = p.c[0] / lead;
    Int lden = 1;
    for (const Scalar* s : {&c2, &c1, &c0}) {
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), s->re.get_den().get_mpz_t());
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), s->im.get_den().get_mpz_t());
    }
    Rational L(lden);
    // y^3 + A y^2 + B y + C with Gaussian integer coefficients, y = L x
    Scalar A = c2 * Scalar(L), B = c1 * Scalar(L * L), C = c0 * Scalar(L * L * L);
    auto to_cd = [](const Scalar& s) {
        return std::complex<double>(s.re.get_d(), s.im.get_d());
    };
    std::complex<double> ca = to_cd(A), cb = to_cd(B), cc = to_cd(C);
    if (std::abs(ca) > 1e14 || std::abs(cb) > 1e14 || std::abs(cc) > 1e14) return std::nullopt;
    // Durand-Kerner on y^3 + ca y^2 + cb y + cc
    auto eval = [&](std::complex<double> z) { return ((z + ca) * z + cb) * z + cc; };
    std::array<std::complex<double>, 3> roots{std::complex<double>(0.4, 0.9),
                                              std::complex<double>(-0.91, 0.62),
                                              std::complex<double>(0.3, -1.1)};
    double scale = std::max({1.0, std::abs(ca), std::sqrt(std::abs(cb)), std::cbrt(std::abs(cc))});
    for (auto& r : roots) r *= scale;
    for (int it = 0; it < 200; ++it)
        for (int i = 0; i < 3; ++i) {
            std::complex<double> denom(1, 0);
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            if (std::abs(denom) < 1e-300) continue;
            roots[static_cast<size_t>(i)] -= eval(roots[static_cast<size_t>(i)]) / denom;
        }
    auto exact_zero = [&](const Scalar& y) {
        Scalar v = ((Scalar(y) + A) * y + B) * y + C;
        return v.is_zero();
    };
    for (const auto& r : roots) {
        long long re0 = std::llround(r.real());
        long long im0 = mode == FieldMode::Real ? 0 : std::llround(r.imag());
        for (long long dr = -1; dr <= 1; ++dr)
            for (long long di = -1; di <= 1; ++di) {
                if (mode == FieldMode::Real && di != 0) continue;
                Scalar y(Rational(static_cast<long>(re0 + dr)),
                         Rational(static_cast<long>(im0 + di)));
                if (exact_zero(y)) {
                    Scalar x = y;
                    x.re /= L;
                    x.im /= L;
                    return x;
                }
            }
    }
    return std::nullopt;
}

struct Complement {
    ElementExt f1;  // square-completed complement vector
    Scalar r;       // f1^2 = r * u
};

Complement complete_square(const StructureTable& t, const ElementExt& u, const ElementExt& x) {
    ElementExt x2 = multiply_ext(t, x, x);
    auto pq = coords_in({x, u}, x2);
    expect(pq.has_value(), "complement square outside span{x, 1}");
    ExtScalar p = (*pq)[0], q = (*pq)[1];
    expect(p.is_scalar() && q.is_scalar(), "irrational complement relation");
    ElementExt f1 = ext_sub(x, ext_scale(ExtScalar(p.as_scalar() / Scalar(2)), u));
    Scalar r = q.as_scalar() + p.as_scalar() * p.as_scalar() / Scalar(4);
    ElementExt sq = multiply_ext(t, f1, f1);
    expect(ext_vec_eq(sq, ext_scale(ExtScalar(r), u)), "square completion failed");
    return {f1, r};
}

Reduction unital_not_straight(const StructureTable& a, const ElementExt& u, bool commutative) {
    Reduction red;
    // Two unit vectors completing {1} to a basis.
    std::vector<ElementExt> comp;
    for (int i = 0; i < 3 && comp.size() < 2; ++i) {
        std::vector<ElementExt> trial{u};
        trial.insert(trial.end(), comp.begin(), comp.end());
        trial.push_back(lift_vec(unit_vector(3, i)));
        Mat<ExtScalar> m = rows_from(trial);
        if (mat_rank(m) == static_cast<int>(trial.size())) comp.push_back(trial.back());
    }
    expect(comp.size() == 2, "no basis completion of the identity");
    Complement cv = complete_square(a, u, comp[0]);
    Complement cw = complete_square(a, u, comp[1]);
    if (commutative) {
        expect(cv.r.is_zero() && cw.r.is_zero(), "commutative case with nonzero square residue");
        expect(ext_vec_zero(multiply_ext(a, cv.f1, cw.f1)) &&
                   ext_vec_zero(multiply_ext(a, cw.f1, cv.f1)),
               "radical products do not vanish");
        red.label = Label::fixed(Family::U3_0);
        red.rows = std::vector<ElementExt>{u, cv.f1, cw.f1};
        red.trace.push_back(step("unital3/not-straight/commutative"));
        return red;
    }
    red.label = Label::fixed(Family::U3_1);
    red.trace.push_back(step("unital3/not-straight/noncommutative",
                             {{"r_v", sstr(cv.r)}, {"r_w", sstr(cw.r)}}));
    expect(!cv.r.is_zero() || !cw.r.is_zero(), "noncommutative case with two null squares");
    auto root_of = [&](const Scalar& r) {
        if (a.mode == FieldMode::Real)
            expect(sgn(r.re) > 0, "negative square residue over the reals");
        return scalar_sqrt(r, FieldMode::Complex);
    };
    ElementExt f, g;
    if (cv.r.is_zero() || cw.r.is_zero()) {
        const Complement& zero = cv.r.is_zero() ? cv : cw;
        const Complement& nonzero = cv.r.is_zero() ? cw : cv;
        f = zero.f1;
        g = ext_scale(root_of(nonzero.r).inverse(), nonzero.f1);
        auto fg = coords_in({u, f, g}, multiply_ext(a, f, g));
        auto gf = coords_in({u, f, g}, multiply_ext(a, g, f));
        expect(fg && gf, "products outside the algebra");
        expect((*fg)[0].is_zero() && (*fg)[2].is_zero() && (*gf)[0].is_zero() &&
                   (*gf)[2].is_zero(),
               "unexpected product shape");
        ExtScalar b = (*fg)[1], b2 = (*gf)[1];
        expect((b == ExtScalar(1) || b == ExtScalar(-1)) && b2 == -b,
               "product coefficients off the two-case split");
        if (b == ExtScalar(-1)) g = ext_scale(ExtScalar(-1), g);
    } else {
        ElementExt f0 = ext_scale(root_of(cv.r).inverse(), cv.f1);
        ElementExt g0 = ext_scale(root_of(cw.r).inverse(), cw.f1);
        auto dec = [&](const ElementExt& x) {
            auto c = coords_in({u, f0, g0}, x);
            expect(c.has_value(), "product outside the algebra");
            return *c;
        };
        auto fg = dec(multiply_ext(a, f0, g0));
        auto gf = dec(multiply_ext(a, g0, f0));
        auto is = [&](long x, const ExtScalar& v) { return v == ExtScalar(x); };
        ElementExt fp, gp;
        if (is(-1, fg[0]) && is(1, fg[1]) && is(1, fg[2]) && is(-1, gf[0]) && is(-1, gf[1]) &&
            is(-1, gf[2])) {
            fp = ext_add(f0, g0);
            gp = g0;
        } else if (is(1, fg[0]) && is(-1, fg[1]) && is(1, fg[2]) && is(1, gf[0]) &&
                   is(1, gf[1]) && is(-1, gf[2])) {
            fp = ext_sub(f0, g0);
            gp = ext_scale(ExtScalar(-1), g0);
        } else if (is(1, fg[0]) && is(1, fg[1]) && is(-1, fg[2]) && is(1, gf[0]) &&
                   is(-1, gf[1]) && is(1, gf[2])) {
            fp = ext_sub(f0, g0);
            gp = g0;
        } else if (is(-1, fg[0]) && is(-1, fg[1]) && is(-1, fg[2]) && is(-1, gf[0]) &&
                   is(1, gf[1]) && is(1, gf[2])) {
            fp = ext_add(f0, g0);
            gp = ext_scale(ExtScalar(-1), g0);
        } else {
            throw InternalContradiction("double-unit case outside the four solutions");
        }
        f = fp;
        g = gp;
    }
    expect(ext_vec_zero(multiply_ext(a, f, f)), "f^2 != 0 after reduction");
    expect(ext_vec_eq(multiply_ext(a, g, g), u), "g^2 != 1 after reduction");
    expect(ext_vec_eq(multiply_ext(a, f, g), f), "fg != f after reduction");
    expect(ext_vec_eq(multiply_ext(a, g, f), ext_scale(ExtScalar(-1), f)),
           "gf != -f after reduction");
    red.rows = std::vector<ElementExt>{u, f, g};
    return red;
}

}  // namespace

ClassifyResult classify_unital3(const StructureTable& a) {
    if (a.dim != 3) throw DimensionMismatch("classify_unital3");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    auto id = find_identity(a);
    expect(id.has_value(), "classify_unital3 on a non-unital table");
    ElementExt u = lift_vec(*id);

    // Unitally straight iff det(1, x, x^2) is not the zero polynomial.
    std::vector<std::vector<Poly3>> rows(3, std::vector<Poly3>(3));
    {
        std::vector<Poly3> sq(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int s = 0; s < 3; ++s) {
                    const Scalar& c = a.at(i, j, s);
                    if (c.is_zero()) continue;
                    Poly3::Key k{0, 0, 0};
                    k[i] += 1;
                    k[j] += 1;
                    sq[static_cast<size_t>(s)].add_term(k, c);
                }
        for (int j = 0; j < 3; ++j) {
            rows[0][static_cast<size_t>(j)] = Poly3::constant((*id)[static_cast<size_t>(j)]);
            rows[1][static_cast<size_t>(j)] = Poly3::variable(j);
            rows[2][static_cast<size_t>(j)] = sq[static_cast<size_t>(j)];
        }
    }
    bool unitally_straight = !poly_det(rows).is_zero();

    if (!unitally_straight) {
        Reduction red = unital_not_straight(a, u, profile.commutative);
        return finish(a, std::move(profile), std::move(red));
    }

    // Grid scan for h with {1, h, h^2} a basis.
    Element h;
    {
        std::vector<int> idx(3, 0);
        bool found = false;
        while (!found) {
            int pos = 2;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] <= 7) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            expect(pos >= 0, "no unitally-straight generator on the grid");
            Element x{Scalar(idx[0]), Scalar(idx[1]), Scalar(idx[2])};
            Element x2 = multiply(a, x, x);
            Mat<Scalar> m(3, 3);
            for (int j = 0; j < 3; ++j) {
                m.at(0, j) = (*id)[static_cast<size_t>(j)];
                m.at(1, j) = x[static_cast<size_t>(j)];
                m.at(2, j) = x2[static_cast<size_t>(j)];
            }
            if (!mat_det(m).is_zero()) {
                h = x;
                found = true;
            }
        }
    }
    ElementExt he = lift_vec(h);
    ElementExt h2 = multiply_ext(a, he, he);
    ElementExt h3 = multiply_ext(a, he, h2);
    auto abc = coords_in({h2, he, u}, h3);
    expect(abc.has_value(), "h^3 escaped the algebra");
    Scalar ca = (*abc)[0].as_scalar(), cb = (*abc)[1].as_scalar(), cc = (*abc)[2].as_scalar();
    Poly1 p({-cc, -cb, -ca, Scalar(1)});
    Poly1 g = poly_gcd(p, p.derivative());
    Reduction red;

    if (g.degree() == 2) {
        Scalar alpha = ca / Scalar(3);
        ElementExt f = ext_sub(he, ext_scale(ExtScalar(alpha), u));
        ElementExt gg = multiply_ext(a, f, f);
        expect(ext_vec_zero(multiply_ext(a, f, gg)), "triple-root relation violated");
        red.label = Label::fixed(Family::U3_4);
        red.rows = std::vector<ElementExt>{u, f, gg};
        red.trace.push_back(step("unital3/triple-root", {{"alpha", sstr(alpha)}}));
        return finish(a, std::move(profile), std::move(red));
    }

    if (g.degree() == 1) {
        Scalar beta = -(g.c[0] / g.c[1]);
        Scalar alpha = ca - Scalar(2) * beta;
        expect(alpha != beta, "double root equal to the simple root");
        ElementExt v = ext_sub(he, ext_scale(ExtScalar(beta), u));
        ElementExt v2 = multiply_ext(a, v, v);
        Scalar dd = (alpha - beta) * (alpha - beta);
        ElementExt e = ext_scale(ExtScalar(dd.inverse()), v2);
        ElementExt f = ext_sub(u, e);
        ElementExt gvec = multiply_ext(a, v, f);
        red.label = Label::fixed(Family::U3_3);
        red.rows = std::vector<ElementExt>{e, f, gvec};
        red.trace.push_back(
            step("unital3/double-root", {{"alpha", sstr(alpha)}, {"beta", sstr(beta)}}));
        return finish(a, std::move(profile), std::move(red));
    }

    // Squarefree cubic.
    Family fam = Family::U3_2;
    Scalar disc;
    {
        // discriminant of X^3 + B X^2 + C X + D with B=-a, C=-b, D=-c
        Scalar B = -ca, C = -cb, Dk = -cc;
        disc = Scalar(18) * B * C * Dk - Scalar(4) * B * B * B * Dk + B * B * C * C -
               Scalar(4) * C * C * C - Scalar(27) * Dk * Dk;
    }
    if (a.mode == FieldMode::Real) {
        expect(!disc.is_zero(), "squarefree cubic with zero discriminant");
        fam = sgn(disc.re) > 0 ? Family::U3_2 : Family::U3_2m;
    }
    red.label = Label::fixed(fam);
    red.trace.push_back(step(fam == Family::U3_2m ? "unital3/squarefree-nonsplit"
                                                  : "unital3/squarefree",
                             {{"a", sstr(ca)}, {"b", sstr(cb)}, {"c", sstr(cc)},
                              {"disc", sstr(disc)}}));
    auto alpha = find_cubic_scalar_root(p, a.mode);
    if (!alpha) {
        red.status = WitnessStatus::OmittedCubicRoot;
        return finish(a, std::move(profile), std::move(red));
    }
    Scalar pp = *alpha - ca;
    Scalar qq = *alpha * *alpha - ca * *alpha - cb;
    Scalar discq = pp * pp - Scalar(4) * qq;
    Scalar denom_alpha = *alpha * *alpha + pp * *alpha + qq;
    expect(!denom_alpha.is_zero(), "deflation degenerated");
    ElementExt e_alpha = ext_scale(
        ExtScalar(denom_alpha.inverse()),
        ext_add(ext_add(h2, ext_scale(ExtScalar(pp), he)), ext_scale(ExtScalar(qq), u)));
    if (fam == Family::U3_2m) {
        expect(sgn(discq.re) < 0, "nonsplit case with nonnegative quadratic discriminant");
        ElementExt fB = ext_sub(u, e_alpha);
        ElementExt gB = multiply_ext(a, he, fB);
        auto rel = coords_in({gB, fB}, multiply_ext(a, gB, gB));
        expect(rel.has_value(), "quadratic block relation missing");
        Scalar bt = (*rel)[0].as_scalar(), ct = (*rel)[1].as_scalar();
        Scalar DB = bt * bt + Scalar(4) * ct;
        expect(sgn(DB.re) < 0, "nonsplit block with nonnegative discriminant");
        ExtScalar s = ext_sqrt_checked(-DB, a.mode);
        ElementExt gvec = ext_scale(
            s.inverse(), ext_sub(ext_scale(ExtScalar(2), gB), ext_scale(ExtScalar(bt), fB)));
        red.rows = std::vector<ElementExt>{e_alpha, fB, gvec};
        return finish(a, std::move(profile), std::move(red));
    }
    // Split case: idempotents for the two quadratic roots.
    ExtScalar s = scalar_sqrt(discq, FieldMode::Complex);
    ExtScalar beta = (ExtScalar(-pp) + s) * ExtScalar(Scalar(Rational(1, 2)));
    ExtScalar gamma = (ExtScalar(-pp) - s) * ExtScalar(Scalar(Rational(1, 2)));
    ExtScalar al{*alpha};
    auto shifted = [&](const ExtScalar& root) { return ext_sub(he, ext_scale(root, u)); };
    auto idem = [&](const ExtScalar& r1, const ExtScalar& r2, const ExtScalar& r3) {
        // (h - r2)(h - r3) / ((r1 - r2)(r1 - r3))
        ElementExt num = multiply_ext(a, shifted(r2), shifted(r3));
        ExtScalar den = (r1 - r2) * (r1 - r3);
        return ext_scale(den.inverse(), num);
    };
    ElementExt e1 = idem(al, beta, gamma);
    ElementExt e2 = idem(beta, al, gamma);
    ElementExt e3 = idem(gamma, al, beta);
    expect(ext_vec_eq(e1, e_alpha), "idempotent mismatch");
    red.rows = std::vector<ElementExt>{e1, e2, e3};
    return finish(a, std::move(profile), std::move(red));
}

// ---------------------------------------------------------------------------
// dimension 3, curled

namespace {

Label curled_label_from_profile(const InvariantProfile& p) {
    if (p.alpha == 0) return Label::fixed(Family::C3_0);
    if (p.alpha == 1) return Label::fixed(Family::C3_1);
    if (p.alpha == 3) {
        if (p.beta == 1 && p.gamma == 1) return Label::fixed(Family::C3_2);
        if (p.beta == 2 && p.gamma == 0) return Label::fixed(Family::C3_3);
        if (p.beta == 0 && p.gamma == 2) return Label::fixed(Family::C3_4);
    }
    throw ProfileNotInCatalog("curled profile " + p.to_string());
}

}  // namespace

ClassifyResult classify_curled3(const StructureTable& a) {
    if (a.dim != 3) throw DimensionMismatch("classify_curled3");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    expect(profile.shape == Shape::Curled, "classify_curled3 on a non-curled table");
    expect(!profile.unital, "curled three-dimensional table cannot be unital");
    Label by_profile = curled_label_from_profile(profile);
    Reduction red;

    // Case split: does some pair (x, y) have {x, y, xy} independent?
    // The determinant has per-variable degree at most two, so the grid
    // {0,1,2}^6 decides the identity exactly.
    std::optional<std::pair<Element, Element>> pair;
    {
        std::vector<int> idx(6, 0);
        while (!pair) {
            Element x{Scalar(idx[0]), Scalar(idx[1]), Scalar(idx[2])};
            Element y{Scalar(idx[3]), Scalar(idx[4]), Scalar(idx[5])};
            Element xy = multiply(a, x, y);
            Mat<Scalar> m(3, 3);
            for (int j = 0; j < 3; ++j) {
                m.at(0, j) = x[static_cast<size_t>(j)];
                m.at(1, j) = y[static_cast<size_t>(j)];
                m.at(2, j) = xy[static_cast<size_t>(j)];
            }
            if (!mat_det(m).is_zero()) {
                pair = {x, y};
                break;
            }
            int pos = 5;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] <= 2) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }

    if (pair) {
        // Case (a): independent {e, f, ef} with e, f normalized idempotent-or-nil.
        Element e = pair->first, f = pair->second;
        Scalar k1 = curled_coefficient(a, e);
        if (!k1.is_zero())
            for (auto& x : e) x = x / k1;
        Scalar k2 = curled_coefficient(a, f);
        if (!k2.is_zero())
            for (auto& x : f) x = x / k2;
        int k = k1.is_zero() ? 0 : 1;
        int l = k2.is_zero() ? 0 : 1;
        ElementExt E = lift_vec(e), F = lift_vec(f);
        ElementExt G = multiply_ext(a, E, F);
        auto dec = [&](const ElementExt& x) {
            auto c = coords_in({E, F, G}, x);
            expect(c.has_value(), "element escaped the basis");
            return *c;
        };
        // fe = le + kf - g is forced; assert it.
        auto fe = dec(multiply_ext(a, F, E));
        expect(fe[0] == ExtScalar(l) && fe[1] == ExtScalar(k) && fe[2] == ExtScalar(-1),
               "pair case relation violated");
        red.trace.push_back(step("curled3/pair", {{"k", std::to_string(k)},
                                                  {"l", std::to_string(l)}}));
        if (k == 0 && l == 0) {
            red.label = Label::fixed(Family::C3_1);
            red.rows = std::vector<ElementExt>{ext_scale(ExtScalar(-1), G), F, E};
        } else if (k == 0 && l == 1) {
            red.label = Label::fixed(Family::C3_2);
            red.rows = std::vector<ElementExt>{ext_sub(E, G), F, G};
        } else if (k == 1 && l == 0) {
            red.label = Label::fixed(Family::C3_2);
            red.rows = std::vector<ElementExt>{G, E, ext_sub(F, G)};
        } else {
            red.label = Label::fixed(Family::C3_2);
            red.rows = std::vector<ElementExt>{ext_sub(E, G), F, ext_sub(G, F)};
        }
    } else {
        // Case (c): every pair generates a two-dimensional subalgebra.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Element prod = multiply(a, unit_vector(3, i), unit_vector(3, j));
                expect(prod[2].is_zero(), "pairwise subalgebra is not the coordinate plane");
            }
        StructureTable sub(2, a.mode);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int s = 0; s < 2; ++s) sub.at(i, j, s) = a.at(i, j, s);
        Dim2Red b = reduce_dim2(sub);
        expect(b.fam == Family::A2_0 || b.fam == Family::A2_1 || b.fam == Family::A2_2,
               "curled algebra with a straight plane");
        ElementExt E(3, ExtScalar(0)), F(3, ExtScalar(0));
        for (int j = 0; j < 2; ++j) {
            E[static_cast<size_t>(j)] = b.rows[0][static_cast<size_t>(j)];
            F[static_cast<size_t>(j)] = b.rows[1][static_cast<size_t>(j)];
        }
        Element g = unit_vector(3, 2);
        Scalar kg = curled_coefficient(a, g);
        if (!kg.is_zero())
            for (auto& x : g) x = x / kg;
        int k = kg.is_zero() ? 0 : 1;
        ElementExt G = lift_vec(g);
        auto dec = [&](const ElementExt& x) {
            auto c = coords_in({E, F, G}, x);
            expect(c.has_value(), "element escaped the basis");
            return *c;
        };
        auto eg = dec(multiply_ext(a, E, G));
        auto ge = dec(multiply_ext(a, G, E));
        auto fg = dec(multiply_ext(a, F, G));
        auto gf = dec(multiply_ext(a, G, F));
        auto bit = [&](const ExtScalar& v, const char* what) {
            expect(v.is_zero() || v == ExtScalar(1), std::string("coefficient outside {0,1} in ") + what);
            return v.is_zero() ? 0 : 1;
        };
        red.trace.push_back(step("curled3/plane", {{"B", family_name(b.fam)},
                                                   {"k", std::to_string(k)}}));
        if (b.fam == Family::A2_0) {
            expect(eg[1].is_zero() && eg[2].is_zero() && ge[1].is_zero() && ge[2].is_zero() &&
                       fg[0].is_zero() && fg[2].is_zero() && gf[0].is_zero() && gf[2].is_zero(),
                   "zero-plane products misshaped");
            int pa = bit(eg[0], "eg"), pa2 = bit(ge[0], "ge");
            int pb = bit(fg[1], "fg"), pb2 = bit(gf[1], "gf");
            if (k == 0) {
                expect(pa + pa2 + pb + pb2 == 0, "nonzero products over a nil generator");
                red.label = Label::fixed(Family::C3_0);
                red.rows = std::vector<ElementExt>{E, F, G};
            } else {
                expect(pa + pa2 == 1 && pb + pb2 == 1, "annihilation pattern violated");
                if (pa == 0 && pb == 0) {
                    red.label = Label::fixed(Family::C3_3);
                    red.rows = std::vector<ElementExt>{E, F, G};
                } else if (pa == 0 && pb == 1) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{E, G, F};
                } else if (pa == 1 && pb == 0) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{F, G, E};
                } else {
                    red.label = Label::fixed(Family::C3_4);
                    red.rows = std::vector<ElementExt>{E, F, G};
                }
            }
        } else if (b.fam == Family::A2_1) {
            expect(eg[1].is_zero() && eg[2].is_zero() && ge[1].is_zero() && ge[2].is_zero() &&
                       fg[0].is_zero() && gf[0].is_zero(),
                   "A2_1-plane products misshaped");
            int pa = bit(eg[0], "eg"), pa2 = bit(ge[0], "ge");
            int pb = bit(fg[1], "fg"), pc = bit(fg[2], "fg");
            int pb2 = bit(gf[1], "gf"), pc2 = bit(gf[2], "gf");
            if (k == 0) {
                expect(pa == 0 && pa2 == 0 && pb == 0 && pb2 == 0 && pc + pc2 == 1,
                       "nil-generator pattern violated");
                if (pc2 == 1) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{E, F, G};
                } else {
                    red.label = Label::fixed(Family::C3_3);
                    red.rows = std::vector<ElementExt>{E, G, F};
                }
            } else {
                expect(pa == 0 && pa2 == 1, "idempotent-generator pattern violated");
                if (pb == 0 && pc == 1 && pb2 == 1 && pc2 == 0) {
                    red.label = Label::fixed(Family::C3_3);
                    red.rows = std::vector<ElementExt>{E, ext_sub(G, F), G};
                } else if (pb == 1 && pc == 0 && pb2 == 0 && pc2 == 1) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{E, F, ext_sub(F, G)};
                } else {
                    throw InternalContradiction("A2_1-plane case outside the two patterns");
                }
            }
        } else {
            expect(eg[1].is_zero() && eg[2].is_zero() && ge[1].is_zero() && ge[2].is_zero() &&
                       fg[0].is_zero() && gf[0].is_zero(),
                   "A2_2-plane products misshaped");
            int pa = bit(eg[0], "eg"), pa2 = bit(ge[0], "ge");
            int pb = bit(fg[1], "fg"), pc = bit(fg[2], "fg");
            int pb2 = bit(gf[1], "gf"), pc2 = bit(gf[2], "gf");
            if (k == 0) {
                expect(pa == 0 && pa2 == 0 && pb == 0 && pb2 == 0 && pc + pc2 == 1,
                       "nil-generator pattern violated");
                if (pc == 1) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{G, F, E};
                } else {
                    red.label = Label::fixed(Family::C3_4);
                    red.rows = std::vector<ElementExt>{E, G, F};
                }
            } else {
                expect(pa == 1 && pa2 == 0, "idempotent-generator pattern violated");
                if (pb == 1 && pc == 0 && pb2 == 0 && pc2 == 1) {
                    red.label = Label::fixed(Family::C3_4);
                    red.rows = std::vector<ElementExt>{E, ext_sub(G, F), F};
                } else if (pb == 0 && pc == 1 && pb2 == 1 && pc2 == 0) {
                    red.label = Label::fixed(Family::C3_2);
                    red.rows = std::vector<ElementExt>{ext_sub(F, G), F, E};
                } else {
                    throw InternalContradiction("A2_2-plane case outside the two patterns");
                }
            }
        }
    }
    expect(red.label == by_profile, "curled witness path disagrees with the profile label");
    return finish(a, std::move(profile), std::move(red));
}

// ---------------------------------------------------------------------------
// dimension 3, straight

ClassifyResult classify_straight3(const StructureTable& a) {
    if (a.dim != 3) throw DimensionMismatch("classify_straight3");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    expect(profile.shape == Shape::Straight && !profile.unital,
           "classify_straight3 expects a straight non-unital table");
    auto hopt = find_straight_element(a, ElementRequest::Straight);
    expect(hopt.has_value(), "straight table without straight element");
    ElementExt h = lift_vec(*hopt);
    ElementExt h2 = multiply_ext(a, h, h);
    ElementExt h3 = multiply_ext(a, h, h2);
    ElementExt h4 = multiply_ext(a, h, h3);
    auto rel = coords_in({h3, h2, h}, h4);
    expect(rel.has_value(), "h^4 escaped the algebra");
    Scalar ca = (*rel)[0].as_scalar(), cb = (*rel)[1].as_scalar(), cc = (*rel)[2].as_scalar();
    expect(cc.is_zero(), "non-unital straight table with c != 0");
    Reduction red;
    if (ca.is_zero() && cb.is_zero()) {
        red.label = Label::fixed(Family::S3_1);
        red.rows = std::vector<ElementExt>{h, h2, h3};
        red.trace.push_back(step("straight3/a=0,b=0"));
        return finish(a, std::move(profile), std::move(red));
    }
    if (cb.is_zero()) {
        ExtScalar ainv = ExtScalar(ca).inverse();
        ElementExt e = ext_scale(ainv * ainv * ainv, h3);
        ElementExt f = ext_sub(ext_scale(ainv, h), e);
        ElementExt g = ext_sub(ext_scale(ainv * ainv, h2), e);
        red.label = Label::fixed(Family::S3_2);
        red.rows = std::vector<ElementExt>{e, f, g};
        red.trace.push_back(step("straight3/a!=0,b=0", {{"a", sstr(ca)}}));
        return finish(a, std::move(profile), std::move(red));
    }
    ElementExt gann = ext_sub(ext_sub(h3, ext_scale(ExtScalar(ca), h2)), ext_scale(ExtScalar(cb), h));
    Scalar b2inv = (cb * cb).inverse();
    ElementExt e = ext_scale(ExtScalar(b2inv),
                             ext_sub(ext_scale(ExtScalar(ca * ca + cb), h2), ext_scale(ExtScalar(ca), h3)));
    Scalar D = ca * ca + Scalar(4) * cb;
    ElementExt hB;
    Scalar DB;
    if (!ca.is_zero()) {
        hB = ext_sub(ext_scale(ExtScalar(2), h2), ext_scale(ExtScalar(ca * ca + Scalar(2) * cb), e));
        DB = ca * ca * D;
    } else {
        hB = ext_scale(ExtScalar(2), h3);
        DB = Scalar(4) * cb * cb * cb;
    }
    if (D.is_zero()) {
        expect(!ca.is_zero(), "degenerate branch requires a != 0");
        expect(ext_vec_zero(multiply_ext(a, hB, hB)), "degenerate branch: f^2 != 0");
        red.label = Label::fixed(Family::S3_4);
        red.rows = std::vector<ElementExt>{e, hB, gann};
        red.trace.push_back(step("straight3/D=0", {{"a", sstr(ca)}, {"b", sstr(cb)}}));
        return finish(a, std::move(profile), std::move(red));
    }
    if (a.mode == FieldMode::Real && sgn(D.re) < 0) {
        ExtScalar s = ext_sqrt_checked(-DB, a.mode);
        ElementExt f = ext_scale(s.inverse(), hB);
        red.label = Label::fixed(Family::S3_3m);
        red.rows = std::vector<ElementExt>{e, f, gann};
        red.trace.push_back(
            step("straight3/D<0", {{"a", sstr(ca)}, {"b", sstr(cb)}, {"D", sstr(D)}}));
        return finish(a, std::move(profile), std::move(red));
    }
    ExtScalar s = scalar_sqrt(DB, FieldMode::Complex);
    ElementExt f = ext_scale(s.inverse(), hB);
    red.label = Label::fixed(Family::S3_3);
    red.rows = std::vector<ElementExt>{e, f, gann};
    red.trace.push_back(step(a.mode == FieldMode::Real ? "straight3/D>0" : "straight3/D!=0",
                             {{"a", sstr(ca)}, {"b", sstr(cb)}, {"D", sstr(D)}}));
    return finish(a, std::move(profile), std::move(red));
}

// ---------------------------------------------------------------------------
// dimension 3, waved

WavedParameter waved_parameter(const StructureTable& a) {
    require_associative(a);
    auto sq = square_span_basis(a);
    auto la = left_annihilator_basis(a);
    auto ra = right_annihilator_basis(a);
    if (sq.size() != 1 || la.size() != 1 || ra.size() != 1)
        throw DegenerateForm("profile is not (1,1,1)");
    ElementExt e = lift_vec(sq[0]);
    auto c1 = ratio_of(lift_vec(la[0]), e);
    auto c2 = ratio_of(lift_vec(ra[0]), e);
    if (!c1 || !c2) throw DegenerateForm("annihilators differ from the square span");
    // Basis of a complement of Ke.
    std::vector<Element> comp;
    for (int i = 0; i < 3 && comp.size() < 2; ++i) {
        std::vector<Element> trial{sq[0]};
        trial.insert(trial.end(), comp.begin(), comp.end());
        trial.push_back(unit_vector(3, i));
        Mat<Scalar> m(static_cast<int>(trial.size()), 3);
        for (size_t r = 0; r < trial.size(); ++r)
            for (int j = 0; j < 3; ++j) m.at(static_cast<int>(r), j) = trial[r][static_cast<size_t>(j)];
        if (mat_rank(m) == static_cast<int>(trial.size())) comp.push_back(unit_vector(3, i));
    }
    if (comp.size() != 2) throw DegenerateForm("no complement of the square span");
    Mat<Scalar> q(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Element prod = multiply(a, comp[static_cast<size_t>(i)], comp[static_cast<size_t>(j)]);
            auto r = ratio_of(lift_vec(prod), e);
            if (!r || !r->is_scalar()) throw DegenerateForm("products leave the square span");
            q.at(i, j) = r->as_scalar();
        }
    Scalar det_q = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0);
    if (det_q.is_zero()) throw DegenerateForm("induced form is singular");
    Scalar t_half = (q.at(0, 1) - q.at(1, 0)) / Scalar(2);
    Scalar det_t = t_half * t_half;
    Scalar det_s = det_q - det_t;  // 2x2 identity det(Q) = det(S) + det(T)
    {
        Scalar s01 = (q.at(0, 1) + q.at(1, 0)) / Scalar(2);
        Scalar check = q.at(0, 0) * q.at(1, 1) - s01 * s01;
        expect(check == det_s, "symmetric/antisymmetric determinant identity failed");
    }
    Scalar lambda = det_t / det_q;
    WavedParameter out;
    if (a.mode == FieldMode::Real) {
        int sign = sgn(det_q.re);
        out.detq_sign_real = sign;
        if (sign > 0) {
            out.family = Family::W3_3;
            out.k_squared = Scalar(4) * lambda;
        } else {
            out.family = Family::W3_3m;
            out.k_squared = Scalar(-4) * lambda;
        }
        expect(sgn(out.k_squared.re) >= 0, "negative k^2 over the reals");
        out.k = scalar_sqrt(out.k_squared, FieldMode::Real);
    } else {
        out.family = Family::W3_3;
        out.k_squared = Scalar(4) * lambda;
        out.k = scalar_sqrt(out.k_squared, FieldMode::Complex);
    }
    return out;
}

namespace {

struct WavedSide {
    Family fam;
    ElementExt E, F;  // canonical basis of the plane, ambient coordinates
    std::vector<Element> span;
};

WavedSide analyze_plane(const StructureTable& a, const Element& gen) {
    Element gen2 = multiply(a, gen, gen);
    // Products of (gen, gen2) in their own span, as a 2-dim table.
    auto coord2 = [&](const Element& v) {
        auto c = coords_in({lift_vec(gen), lift_vec(gen2)}, lift_vec(v));
        expect(c.has_value(), "plane is not closed under products");
        return std::array<Scalar, 2>{(*c)[0].as_scalar(), (*c)[1].as_scalar()};
    };
    StructureTable sub(2, a.mode);
    Element basis_prod[2][2] = {{gen2, multiply(a, gen, gen2)},
                                {multiply(a, gen2, gen), multiply(a, gen2, gen2)}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto c = coord2(basis_prod[i][j]);
            sub.at(i, j, 0) = c[0];
            sub.at(i, j, 1) = c[1];
        }
    Dim2Red red = reduce_dim2(sub);
    WavedSide side;
    side.fam = red.fam;
    auto lift_row = [&](const std::vector<ExtScalar>& row) {
        ElementExt v(3, ExtScalar(0));
        ElementExt g1 = lift_vec(gen), g2 = lift_vec(gen2);
        for (size_t i = 0; i < 3; ++i) v[i] = row[0] * g1[i] + row[1] * g2[i];
        return v;
    };
    side.E = lift_row(red.rows[0]);
    side.F = lift_row(red.rows[1]);
    side.span = {gen, gen2};
    return side;
}

int plane_rank(Family f) {
    switch (f) {
        case Family::A2_3: return 0;
        case Family::A2_4: return 1;
        case Family::A2_5: return 2;
        case Family::A2_6: return 3;
        default: return 4;
    }
}

// Intersection direction of the two planes (each given by two spanning vectors).
Element plane_intersection(const WavedSide& s1, const WavedSide& s2) {
    Mat<Scalar> m(3, 4);
    for (int i = 0; i < 3; ++i) {
        m.at(i, 0) = s1.span[0][static_cast<size_t>(i)];
        m.at(i, 1) = s1.span[1][static_cast<size_t>(i)];
        m.at(i, 2) = -s2.span[0][static_cast<size_t>(i)];
        m.at(i, 3) = -s2.span[1][static_cast<size_t>(i)];
    }
    auto kern = kernel_basis(m);
    expect(kern.size() == 1, "plane intersection is not one-dimensional");
    Element d(3, Scalar(0));
    for (int i = 0; i < 3; ++i)
        d[static_cast<size_t>(i)] = kern[0][0] * s1.span[0][static_cast<size_t>(i)] +
                                    kern[0][1] * s1.span[1][static_cast<size_t>(i)];
    bool zero = true;
    for (auto& x : d)
        if (!x.is_zero()) zero = false;
    expect(!zero, "zero intersection vector");
    return d;
}

struct WavedWitness {
    Label label;
    std::vector<ElementExt> rows;
    std::string case_id;
    std::vector<std::pair<std::string, std::string>> bound;
    bool k_is_rational = true;
};

WavedWitness waved_witness_path(const StructureTable& a) {
    auto fopt = find_straight_element(a, ElementRequest::NonCurled);
    expect(fopt.has_value(), "waved table without non-curled element");
    Element f = *fopt;
    // Complete {f, f^2} to a basis and make the third vector non-curled.
    Element f2 = multiply(a, f, f);
    Element g0;
    {
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i) {
            Element cand = unit_vector(3, i);
            Mat<Scalar> m(3, 3);
            for (int j = 0; j < 3; ++j) {
                m.at(0, j) = f[static_cast<size_t>(j)];
                m.at(1, j) = f2[static_cast<size_t>(j)];
                m.at(2, j) = cand[static_cast<size_t>(j)];
            }
            if (!mat_det(m).is_zero()) {
                g0 = cand;
                found = true;
            }
        }
        expect(found, "no basis completion of the generated plane");
    }
    auto non_curled = [&](const Element& x) {
        Element x2 = multiply(a, x, x);
        Mat<Scalar> m(2, 3);
        for (int j = 0; j < 3; ++j) {
            m.at(0, j) = x[static_cast<size_t>(j)];
            m.at(1, j) = x2[static_cast<size_t>(j)];
        }
        return mat_rank(m) == 2;
    };
    Element g = g0;
    for (long l = 1; !non_curled(g); ++l) {
        expect(l <= 8, "no non-curled completion found");
        for (int j = 0; j < 3; ++j)
            g[static_cast<size_t>(j)] = Scalar(l) * f[static_cast<size_t>(j)] + g0[static_cast<size_t>(j)];
    }

    WavedSide s1 = analyze_plane(a, f);
    WavedSide s2 = analyze_plane(a, g);
    expect(s1.fam != Family::A2_5m && s2.fam != Family::A2_5m,
           "nonsplit plane inside a waved table");
    if (plane_rank(s2.fam) < plane_rank(s1.fam)) std::swap(s1, s2);
    Element d = plane_intersection(s1, s2);
    ElementExt dx = lift_vec(d);

    WavedWitness w;
    auto set = [&](Family fam, std::vector<ElementExt> rows, std::string id) {
        w.label = Label::fixed(fam);
        w.rows = std::move(rows);
        w.case_id = std::move(id);
    };

    if (s1.fam == Family::A2_3 && s2.fam == Family::A2_3) {
        // Intersection is the unique nil line of both planes.
        ElementExt e = s1.E;
        auto lr = ratio_of(s2.E, e);
        expect(lr.has_value(), "nil lines of the two planes differ");
        ExtScalar l = *lr;
        ElementExt ff = s1.F, gg = s2.F;
        expect(ext_vec_zero(multiply_ext(a, e, gg)) && ext_vec_zero(multiply_ext(a, gg, e)),
               "nil direction does not annihilate");
        auto ar = ratio_of(multiply_ext(a, ff, gg), e);
        auto ar2 = ratio_of(multiply_ext(a, gg, ff), e);
        expect(ar.has_value() && ar2.has_value(), "cross products leave the nil line");
        ExtScalar ca = *ar, ca2 = *ar2;
        ElementExt g1 = ext_sub(ext_scale(ca, ff), gg);
        ExtScalar t = l - ca * ca2;
        expect(ca.is_scalar() && ca2.is_scalar() && t.is_scalar() && l.is_scalar(),
               "irrational coefficients in commuting-plane case");
        Scalar ts = t.as_scalar();
        Scalar diff = ca.as_scalar() - ca2.as_scalar();
        w.bound = {{"l", sstr(l.as_scalar())},
                   {"a", sstr(ca.as_scalar())},
                   {"a'", sstr(ca2.as_scalar())}};
        if (ts.is_zero() && diff.is_zero()) {
            set(Family::W3_1, {e, g1, ff}, "waved3/aa1");
        } else if (ts.is_zero()) {
            ElementExt g2 = ext_scale(ExtScalar(diff.inverse()), g1);
            set(Family::W3_2, {e, ext_sub(ff, g2), g2}, "waved3/aa2");
        } else {
            bool negative_real = a.mode == FieldMode::Real && sgn(ts.re) < 0;
            Family fam = negative_real ? Family::W3_3m : Family::W3_3;
            Scalar rad = negative_real ? -ts : ts;
            Scalar ksq = diff * diff / rad;
            ExtScalar s = scalar_sqrt(rad, FieldMode::Complex);
            ElementExt g2 = ext_scale(s.inverse(), g1);
            ExtScalar k = ExtScalar(diff) / s;
            Scalar k_rat;
            bool rational = k.is_scalar();
            ExtScalar k_norm = k;
            if (rational) {
                k_rat = k.as_scalar();
                bool flip = a.mode == FieldMode::Real ? sgn(k_rat.re) < 0 : !in_half_plane(k_rat);
                if (flip) {
                    k_rat = -k_rat;
                    k_norm = ExtScalar(k_rat);
                    g2 = ext_scale(ExtScalar(-1), g2);
                }
            } else {
                k_norm = a.mode == FieldMode::Real ? scalar_sqrt(ksq, FieldMode::Real)
                                                   : scalar_sqrt(ksq, FieldMode::Complex);
            }
            w.label = Label::with_param_squared(fam, ksq, k_norm);
            w.rows = {e, ff, g2};
            w.case_id = negative_real ? "waved3/aa4" : "waved3/aa3";
            w.k_is_rational = rational;
            w.bound.push_back({"k^2", sstr(ksq)});
        }
        return w;
    }

    if (s1.fam == Family::A2_4 && s2.fam == Family::A2_4) {
        auto de = ratio_of(dx, s1.E);
        auto de2 = ratio_of(dx, s2.E);
        auto dfn = ratio_of(dx, s1.F);
        auto dfn2 = ratio_of(dx, s2.F);
        if (de && de2) {
            expect(ext_vec_eq(s1.E, s2.E), "distinct idempotents on the same line");
            ElementExt e = s1.E, ff = s1.F, gg = s2.F;
            expect(ext_vec_zero(multiply_ext(a, ff, gg)) &&
                       ext_vec_zero(multiply_ext(a, gg, ff)) &&
                       ext_vec_zero(multiply_ext(a, e, gg)) &&
                       ext_vec_zero(multiply_ext(a, gg, e)),
                   "idempotent-intersection case demands vanishing products");
            set(Family::W3_4, {e, ff, gg}, "waved3/bb1");
            return w;
        }
        expect(dfn.has_value() && dfn2.has_value(), "intersection misses both canonical lines");
        ElementExt e = s1.F;  // shared nil direction
        ElementExt ff = s1.E, gg = s2.E;
        auto fg = coords_in({e, ff, gg}, multiply_ext(a, ff, gg));
        auto gf = coords_in({e, ff, gg}, multiply_ext(a, gg, ff));
        expect(fg && gf && (*fg)[0].is_zero() && (*gf)[0].is_zero(),
               "cross products touch the nil direction");
        bool fg_g = (*fg)[1].is_zero() && (*fg)[2] == ExtScalar(1);
        bool fg_f = (*fg)[1] == ExtScalar(1) && (*fg)[2].is_zero();
        bool gf_f = (*gf)[1] == ExtScalar(1) && (*gf)[2].is_zero();
        bool gf_g = (*gf)[1].is_zero() && (*gf)[2] == ExtScalar(1);
        if (fg_g && gf_f)
            set(Family::W3_5, {e, ext_sub(ff, gg), gg}, "waved3/bb2");
        else if (fg_f && gf_g)
            set(Family::W3_6, {e, ext_sub(ff, gg), gg}, "waved3/bb2");
        else
            throw InternalContradiction("nil-intersection case outside the two patterns");
        return w;
    }

    if (s1.fam == Family::A2_4 && s2.fam == Family::A2_5) {
        auto du = ratio_of(dx, s1.E);
        expect(du.has_value(), "intersection misses the idempotent of the first plane");
        // Idempotent spanning the intersection.
        ElementExt d2 = multiply_ext(a, dx, dx);
        auto delta = ratio_of(d2, dx);
        expect(delta.has_value() && !delta->is_zero(), "intersection direction is not idempotent");
        ElementExt uvec = ext_scale(delta->inverse(), dx);
        ElementExt plus(3), minus(3);
        for (size_t i = 0; i < 3; ++i) {
            plus[i] = (s2.E[i] + s2.F[i]) * ExtScalar(Scalar(Rational(1, 2)));
            minus[i] = (s2.E[i] - s2.F[i]) * ExtScalar(Scalar(Rational(1, 2)));
        }
        ElementExt gg;
        if (ext_vec_eq(uvec, plus))
            gg = minus;
        else if (ext_vec_eq(uvec, minus))
            gg = plus;
        else if (ext_vec_eq(uvec, s2.E))
            throw InternalContradiction("identity-line intersection in a waved table");
        else
            throw InternalContradiction("intersection is no idempotent line of the split plane");
        expect(ext_vec_eq(uvec, s1.E), "idempotents disagree across the planes");
        ElementExt e = s1.E, ff = s1.F;
        auto fg = coords_in({e, ff, gg}, multiply_ext(a, ff, gg));
        auto gf = coords_in({e, ff, gg}, multiply_ext(a, gg, ff));
        expect(fg && gf, "products escaped the basis");
        bool fg_zero = (*fg)[0].is_zero() && (*fg)[1].is_zero() && (*fg)[2].is_zero();
        bool gf_zero = (*gf)[0].is_zero() && (*gf)[1].is_zero() && (*gf)[2].is_zero();
        bool fg_f = (*fg)[0].is_zero() && (*fg)[1] == ExtScalar(1) && (*fg)[2].is_zero();
        bool gf_f = (*gf)[0].is_zero() && (*gf)[1] == ExtScalar(1) && (*gf)[2].is_zero();
        if (gf_f && fg_zero)
            set(Family::W3_7, {e, ff, gg}, "waved3/bc2");
        else if (fg_f && gf_zero)
            set(Family::W3_8, {e, ff, gg}, "waved3/bc2");
        else
            throw InternalContradiction("mixed-plane case outside the two patterns");
        return w;
    }

    if (s1.fam == Family::A2_5 && s2.fam == Family::A2_5) {
        ElementExt d2 = multiply_ext(a, dx, dx);
        auto delta = ratio_of(d2, dx);
        expect(delta.has_value() && !delta->is_zero(), "intersection direction is not idempotent");
        ElementExt uvec = ext_scale(delta->inverse(), dx);
        if (ext_vec_eq(uvec, s1.E) || ext_vec_eq(uvec, s2.E))
            throw InternalContradiction("identity-line intersection in a waved table");
        ElementExt e = uvec;
        ElementExt ff = ext_sub(s1.E, e);
        ElementExt gg = ext_sub(s2.E, e);
        expect(ext_vec_eq(multiply_ext(a, ff, ff), ff) && ext_vec_eq(multiply_ext(a, gg, gg), gg),
               "complementary idempotents failed");
        expect(ext_vec_zero(multiply_ext(a, e, ff)) && ext_vec_zero(multiply_ext(a, ff, e)) &&
                   ext_vec_zero(multiply_ext(a, e, gg)) && ext_vec_zero(multiply_ext(a, gg, e)),
               "orthogonality failed");
        auto fg = coords_in({e, ff, gg}, multiply_ext(a, ff, gg));
        auto gf = coords_in({e, ff, gg}, multiply_ext(a, gg, ff));
        expect(fg && gf && (*fg)[0].is_zero() && (*gf)[0].is_zero(), "products misshaped");
        bool fg_g = (*fg)[1].is_zero() && (*fg)[2] == ExtScalar(1);
        bool gf_f = (*gf)[1] == ExtScalar(1) && (*gf)[2].is_zero();
        bool fg_f = (*fg)[1] == ExtScalar(1) && (*fg)[2].is_zero();
        bool gf_g = (*gf)[1].is_zero() && (*gf)[2] == ExtScalar(1);
        if (fg_g && gf_f)
            set(Family::W3_7, {e, ext_sub(ff, gg), gg}, "waved3/cc3");
        else if (fg_f && gf_g)
            set(Family::W3_8, {e, ext_sub(ff, gg), gg}, "waved3/cc3");
        else
            throw InternalContradiction("split-plane case outside the two patterns");
        return w;
    }

    if (s1.fam == Family::A2_6 && s2.fam == Family::A2_6) {
        auto dn1 = ratio_of(dx, s1.F);
        auto dn2 = ratio_of(dx, s2.F);
        if (!dn1 || !dn2)
            throw InternalContradiction("identity-line intersection in a waved table");
        ElementExt e = s1.F, ff = s1.E, gg = s2.E;
        expect(ext_vec_eq(multiply_ext(a, e, gg), e) && ext_vec_eq(multiply_ext(a, gg, e), e),
               "shared nil direction is not matched by the second identity");
        auto fg = coords_in({e, ff, gg}, multiply_ext(a, ff, gg));
        auto gf = coords_in({e, ff, gg}, multiply_ext(a, gg, ff));
        expect(fg && gf && (*fg)[0].is_zero() && (*gf)[0].is_zero(), "products misshaped");
        bool fg_f = (*fg)[1] == ExtScalar(1) && (*fg)[2].is_zero();
        bool gf_g = (*gf)[1].is_zero() && (*gf)[2] == ExtScalar(1);
        bool fg_g = (*fg)[1].is_zero() && (*fg)[2] == ExtScalar(1);
        bool gf_f = (*gf)[1] == ExtScalar(1) && (*gf)[2].is_zero();
        ElementExt gmf = ext_sub(gg, ff);
        if (fg_f && gf_g)
            set(Family::W3_9, {e, ff, gmf}, "waved3/dd2");
        else if (fg_g && gf_f)
            set(Family::W3_10, {e, ff, gmf}, "waved3/dd2");
        else
            throw InternalContradiction("degenerate-plane case yields a unital table");
        return w;
    }

    throw InternalContradiction("plane pair (" + family_name(s1.fam) + ", " +
                                family_name(s2.fam) + ") cannot occur in a waved table");
}

}  // namespace

ClassifyResult classify_waved3(const StructureTable& a) {
    if (a.dim != 3) throw DimensionMismatch("classify_waved3");
    require_associative(a);
    InvariantProfile profile = invariant_profile(a);
    expect(profile.shape == Shape::Waved && !profile.unital,
           "classify_waved3 expects a waved non-unital table");

    // Invariant-first label.
    Label tree_label;
    std::optional<WavedParameter> param;
    if (profile.alpha == 1 && profile.beta == 2 && profile.gamma == 2) {
        if (!profile.commutative)
            tree_label = Label::fixed(Family::W3_2);
        else if (!profile.square_of_square_zero)
            tree_label = Label::fixed(Family::W3_4);
        else
            tree_label = Label::fixed(Family::W3_1);
    } else if (profile.alpha == 1 && profile.beta == 1 && profile.gamma == 1) {
        param = waved_parameter(a);
        tree_label = Label::with_param_squared(param->family, param->k_squared, param->k);
    } else if (profile.alpha == 2 && profile.beta == 2 && profile.gamma == 1) {
        tree_label = Label::fixed(Family::W3_5);
    } else if (profile.alpha == 2 && profile.beta == 1 && profile.gamma == 2) {
        tree_label = Label::fixed(Family::W3_6);
    } else if (profile.alpha == 3) {
        if (profile.zeropotent_plane && profile.beta == 1 && profile.gamma == 0)
            tree_label = Label::fixed(Family::W3_10);
        else if (profile.zeropotent_plane && profile.beta == 0 && profile.gamma == 1)
            tree_label = Label::fixed(Family::W3_9);
        else if (!profile.zeropotent_plane && profile.beta == 1 && profile.gamma == 0)
            tree_label = Label::fixed(Family::W3_7);
        else if (!profile.zeropotent_plane && profile.beta == 0 && profile.gamma == 1)
            tree_label = Label::fixed(Family::W3_8);
        else
            throw ProfileNotInCatalog("waved profile " + profile.to_string());
    } else {
        throw ProfileNotInCatalog("waved profile " + profile.to_string());
    }

    // Constructive path: witness plus an independent label computation.
    WavedWitness ww = waved_witness_path(a);
    expect(ww.label == tree_label,
           "witness path label " + ww.label.to_string() + " disagrees with invariant label " +
               tree_label.to_string());
    Reduction red;
    red.label = tree_label;
    red.trace.push_back(step(ww.case_id, ww.bound));
    if (param) {
        red.trace.push_back(step("waved3/parameter",
                                 {{"k^2", sstr(param->k_squared)},
                                  {"detQ_sign", param->detq_sign_real
                                                    ? std::to_string(*param->detq_sign_real)
                                                    : std::string("-")}}));
    }
    red.rows = std::move(ww.rows);
    if (tree_label.is_family() && !ww.k_is_rational) {
        red.rows.reset();
        red.status = WitnessStatus::OmittedUnsupported;
    }
    return finish(a, std::move(profile), std::move(red));
}

// ---------------------------------------------------------------------------
// master dispatch

ClassifyResult classify(const StructureTable& a) {
    if (a.dim < 1 || a.dim > 3)
        throw DimensionMismatch("classification covers dimensions 1..3 only");
    if (a.mode == FieldMode::Real && !a.all_real())
        throw ModeMismatch("Real-mode table with complex entries");
    require_associative(a);
    if (a.dim == 1) return classify_dim1(a);
    if (a.dim == 2) return classify_dim2(a);
    if (find_identity(a)) return classify_unital3(a);
    switch (algebra_shape(a)) {
        case Shape::Curled: return classify_curled3(a);
        case Shape::Straight: return classify_straight3(a);
        case Shape::Waved: return classify_waved3(a);
    }
    throw InternalContradiction("unreachable shape");
}

}  // namespace alg3
