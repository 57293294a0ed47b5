#include "alg3/invariants.hpp"

#include <sstream>

#include "alg3/poly.hpp"

namespace alg3 {

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Curled: return "curled";
        case Shape::Waved: return "waved";
        case Shape::Straight: return "straight";
    }
    return "?";
}

std::string InvariantProfile::to_string() const {
    std::ostringstream os;
    os << "alpha=" << alpha << " beta=" << beta << " gamma=" << gamma
       << " commutative=" << (commutative ? "true" : "false")
       << " unital=" << (unital ? "true" : "false") << " shape=" << shape_name(shape)
       << " zeropotent=" << (zeropotent ? "true" : "false")
       << " square_of_square_zero=" << (square_of_square_zero ? "true" : "false")
       << " zeropotent_plane=" << (zeropotent_plane ? "true" : "false");
    return os.str();
}

namespace {

int rank_of_vectors(const std::vector<Element>& rows, int dim) {
    Mat<Scalar> m(static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return mat_rank(m);
}

// Symbolic coordinates of x^2 and x^3 with x = sum x_i e_i.
std::vector<Poly3> symbolic_square(const StructureTable& t) {
    std::vector<Poly3> q(static_cast<size_t>(t.dim));
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int s = 0; s < t.dim; ++s) {
                const Scalar& c = t.at(i, j, s);
                if (c.is_zero()) continue;
                Poly3::Key k{0, 0, 0};
                k[i] += 1;
                k[j] += 1;
                q[static_cast<size_t>(s)].add_term(k, c);
            }
    return q;
}

std::vector<Poly3> symbolic_next_power(const StructureTable& t, const std::vector<Poly3>& prev) {
    std::vector<Poly3> q(static_cast<size_t>(t.dim));
    for (int i = 0; i < t.dim; ++i) {
        Poly3 xi = Poly3::variable(i);
        for (int j = 0; j < t.dim; ++j) {
            Poly3 term = xi * prev[static_cast<size_t>(j)];
            for (int s = 0; s < t.dim; ++s) {
                const Scalar& c = t.at(i, j, s);
                if (c.is_zero()) continue;
                q[static_cast<size_t>(s)] = q[static_cast<size_t>(s)] + term * Poly3::constant(c);
            }
        }
    }
    return q;
}

bool curled_identically(const StructureTable& t, const std::vector<Poly3>& sq) {
    if (t.dim == 1) return true;
    for (int i = 0; i < t.dim; ++i)
        for (int j = i + 1; j < t.dim; ++j) {
            Poly3 minor = Poly3::variable(i) * sq[static_cast<size_t>(j)] -
                          Poly3::variable(j) * sq[static_cast<size_t>(i)];
            if (!minor.is_zero()) return false;
        }
    return true;
}

}  // namespace

Shape element_shape(const StructureTable& t, const Element& x) {
    bool zero = true;
    for (const auto& v : x)
        if (!v.is_zero()) zero = false;
    if (zero) throw Error("element_shape of the zero element");
    Element x2 = multiply(t, x, x);
    if (rank_of_vectors({x, x2}, t.dim) < 2) return Shape::Curled;
    if (t.dim == 2) return Shape::Straight;
    Element x3 = multiply(t, x, x2);
    if (rank_of_vectors({x, x2, x3}, t.dim) < 3) return Shape::Waved;
    return Shape::Straight;
}

Shape algebra_shape(const StructureTable& t) {
    auto sq = symbolic_square(t);
    if (curled_identically(t, sq)) return Shape::Curled;
    if (t.dim == 2) return Shape::Straight;
    auto cube = symbolic_next_power(t, sq);
    std::vector<std::vector<Poly3>> rows(3, std::vector<Poly3>(3));
    for (int j = 0; j < 3; ++j) {
        rows[0][static_cast<size_t>(j)] = Poly3::variable(j);
        rows[1][static_cast<size_t>(j)] = sq[static_cast<size_t>(j)];
        rows[2][static_cast<size_t>(j)] = cube[static_cast<size_t>(j)];
    }
    if (!poly_det(rows).is_zero()) return Shape::Straight;
    return Shape::Waved;
}

std::vector<Element> square_span_basis(const StructureTable& t) {
    Mat<Scalar> m(t.dim * t.dim, t.dim);
    int r = 0;
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j) {
            for (int s = 0; s < t.dim; ++s) m.at(r, s) = t.at(i, j, s);
            ++r;
        }
    rref(m);
    std::vector<Element> basis;
    for (int i = 0; i < m.rows; ++i) {
        Element v = m.row(i);
        bool zero = true;
        for (const auto& x : v)
            if (!x.is_zero()) zero = false;
        if (!zero) basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::vector<Element> annihilator_basis(const StructureTable& t, bool left) {
    Mat<Scalar> m(t.dim * t.dim, t.dim);
    int row = 0;
    for (int j = 0; j < t.dim; ++j)
        for (int s = 0; s < t.dim; ++s) {
            for (int i = 0; i < t.dim; ++i)
                m.at(row, i) = left ? t.at(i, j, s) : t.at(j, i, s);
            ++row;
        }
    auto kern = kernel_basis(m);
    std::vector<Element> basis;
    for (auto& v : kern) basis.emplace_back(v.begin(), v.end());
    return basis;
}

}  // namespace

std::vector<Element> left_annihilator_basis(const StructureTable& t) {
    return annihilator_basis(t, true);
}

std::vector<Element> right_annihilator_basis(const StructureTable& t) {
    return annihilator_basis(t, false);
}

std::optional<Element> find_straight_element(const StructureTable& t, ElementRequest want) {
    std::vector<int> idx(static_cast<size_t>(t.dim), 0);
    // Lexicographic scan over {0..7}^dim. A degree-6 polynomial in three
    // variables cannot vanish on the whole grid unless it is identically zero.
    while (true) {
        int pos = t.dim - 1;
        while (pos >= 0) {
            if (++idx[static_cast<size_t>(pos)] <= 7) break;
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        Element x(static_cast<size_t>(t.dim));
        for (int i = 0; i < t.dim; ++i) x[static_cast<size_t>(i)] = Scalar(idx[static_cast<size_t>(i)]);
        Element x2 = multiply(t, x, x);
        if (want == ElementRequest::NonCurled) {
            if (rank_of_vectors({x, x2}, t.dim) == 2) return x;
            continue;
        }
        if (t.dim == 2) {
            if (rank_of_vectors({x, x2}, t.dim) == 2) return x;
            continue;
        }
        Element x3 = multiply(t, x, x2);
        if (rank_of_vectors({x, x2, x3}, t.dim) == 3) return x;
    }
}

namespace {

struct QuadFactors {
    bool wildcard = false;   // zero form, divisible by every linear form
    bool factorable = true;  // false for rank 3 or definite-over-R rank 2
    std::vector<ElementExt> forms;
};

ElementExt scale_to_ext(const Element& v) { return ElementExt(v.begin(), v.end()); }

bool form_nonzero(const ElementExt& f) {
    for (const auto& x : f)
        if (!x.is_zero()) return true;
    return false;
}

bool projectively_equal(const ElementExt& f, const ElementExt& g) {
    if (!form_nonzero(f) || !form_nonzero(g)) return false;
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j)
            if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
    return true;
}

// Factors a quadratic form on K^3 given by a symmetric Gram matrix into
// linear forms over at most one square root, when possible.
QuadFactors factor_quadratic(const Mat<Scalar>& g, FieldMode mode) {
    QuadFactors out;
    int rank = mat_rank(g);
    if (rank == 0) {
        out.wildcard = true;
        return out;
    }
    if (rank == 3) {
        out.factorable = false;
        return out;
    }
    if (rank == 1) {
        int r = 0;
        while (r < 3) {
            bool nonzero = false;
            for (int j = 0; j < 3; ++j)
                if (!g.at(r, j).is_zero()) nonzero = true;
            if (nonzero) break;
            ++r;
        }
        ElementExt form(3);
        for (int j = 0; j < 3; ++j) form[static_cast<size_t>(j)] = ExtScalar(g.at(r, j));
        out.forms.push_back(std::move(form));
        return out;
    }
    // rank 2: restrict to a complement of the kernel and factor the binary form.
    auto kern = kernel_basis(g);
    Element n = Element(kern[0].begin(), kern[0].end());
    // Complete {n} to a basis with two unit vectors.
    std::vector<Element> cols;
    for (int i = 0; i < 3 && cols.size() < 2; ++i) {
        std::vector<Element> trial = cols;
        trial.push_back(unit_vector(3, i));
        trial.push_back(n);
        if (rank_of_vectors(trial, 3) == static_cast<int>(trial.size())) cols.insert(cols.end(), {unit_vector(3, i)});
    }
    Mat<Scalar> p(3, 3);
    for (int i = 0; i < 3; ++i) {
        p.at(i, 0) = cols[0][static_cast<size_t>(i)];
        p.at(i, 1) = cols[1][static_cast<size_t>(i)];
        p.at(i, 2) = n[static_cast<size_t>(i)];
    }
    Mat<Scalar> pinv = mat_inverse(p);
    auto quad_value = [&](const Element& u, const Element& v) {
        Scalar acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += u[static_cast<size_t>(i)] * g.at(i, j) * v[static_cast<size_t>(j)];
        return acc;
    };
    Scalar a = quad_value(cols[0], cols[0]);
    Scalar b = quad_value(cols[0], cols[1]) * Scalar(2);
    Scalar c = quad_value(cols[1], cols[1]);
    // Coordinate functions of the restriction: rows 0 and 1 of pinv.
    ElementExt pf = scale_to_ext(pinv.row(0));
    ElementExt qf = scale_to_ext(pinv.row(1));
    auto combine = [&](const ExtScalar& cp, const ExtScalar& cq) {
        ElementExt f(3);
        for (size_t i = 0; i < 3; ++i) f[i] = cp * pf[i] + cq * qf[i];
        return f;
    };
    if (!a.is_zero() || !c.is_zero()) {
        if (a.is_zero()) {
            std::swap(a, c);
            std::swap(pf, qf);
        }
        Scalar disc = b * b - Scalar(4) * a * c;
        if (mode == FieldMode::Real && sgn(disc.re) < 0) {
            out.factorable = false;
            return out;
        }
        ExtScalar s = scalar_sqrt(disc, mode);
        ExtScalar inv2a = ExtScalar(Scalar(2) * a).inverse();
        ExtScalar t1 = (ExtScalar(-b) + s) * inv2a;
        ExtScalar t2 = (ExtScalar(-b) - s) * inv2a;
        out.forms.push_back(combine(ExtScalar(1), -t1));
        out.forms.push_back(combine(ExtScalar(1), -t2));
    } else {
        // b p q with b != 0 (rank 2)
        out.forms.push_back(combine(ExtScalar(1), ExtScalar(0)));
        out.forms.push_back(combine(ExtScalar(0), ExtScalar(1)));
    }
    return out;
}

}  // namespace

bool zeropotent_plane(const StructureTable& t) {
    if (t.dim == 1) return false;
    if (t.dim == 2) return is_zeropotent(t);
    bool all_wild = true;
    std::vector<QuadFactors> fs;
    for (int s = 0; s < t.dim; ++s) {
        Mat<Scalar> g(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g.at(i, j) = (t.at(i, j, s) + t.at(j, i, s)) / Scalar(2);
        QuadFactors f = factor_quadratic(g, t.mode);
        if (f.wildcard) continue;
        if (!f.factorable || f.forms.empty()) return false;
        all_wild = false;
        fs.push_back(std::move(f));
    }
    if (all_wild) return true;  // squares vanish identically
    for (const auto& cand : fs[0].forms) {
        bool common = true;
        for (size_t k = 1; k < fs.size() && common; ++k) {
            bool hit = false;
            for (const auto& f : fs[k].forms)
                if (projectively_equal(cand, f)) hit = true;
            common = hit;
        }
        if (common) return true;
    }
    return false;
}

InvariantProfile invariant_profile(const StructureTable& t) {
    require_associative(t);
    InvariantProfile p;
    auto sq_basis = square_span_basis(t);
    p.alpha = static_cast<int>(sq_basis.size());
    p.beta = static_cast<int>(left_annihilator_basis(t).size());
    p.gamma = static_cast<int>(right_annihilator_basis(t).size());
    p.commutative = true;
    for (int i = 0; i < t.dim && p.commutative; ++i)
        for (int j = 0; j < t.dim && p.commutative; ++j)
            for (int s = 0; s < t.dim; ++s)
                if (t.at(i, j, s) != t.at(j, i, s)) {
                    p.commutative = false;
                    break;
                }
    p.unital = find_identity(t).has_value();
    p.shape = algebra_shape(t);
    p.zeropotent = is_zeropotent(t);
    p.square_of_square_zero = true;
    for (const auto& u : sq_basis)
        for (const auto& v : sq_basis) {
            Element w = multiply(t, u, v);
            for (const auto& x : w)
                if (!x.is_zero()) p.square_of_square_zero = false;
        }
    p.zeropotent_plane = zeropotent_plane(t);
    return p;
}

}  // namespace alg3
