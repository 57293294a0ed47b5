#include "alg3/table.hpp"

#include <sstream>

namespace alg3 {

Element multiply(const StructureTable& t, const Element& x, const Element& y) {
    if (static_cast<int>(x.size()) != t.dim || static_cast<int>(y.size()) != t.dim)
        throw DimensionMismatch("multiply operands");
    Element z(t.dim, Scalar(0));
    for (int i = 0; i < t.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < t.dim; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Scalar xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int s = 0; s < t.dim; ++s)
                z[static_cast<size_t>(s)] += xy * t.at(i, j, s);
        }
    }
    return z;
}

ElementExt multiply_ext(const StructureTable& t, const ElementExt& x, const ElementExt& y) {
    if (static_cast<int>(x.size()) != t.dim || static_cast<int>(y.size()) != t.dim)
        throw DimensionMismatch("multiply operands");
    ElementExt z(t.dim, ExtScalar(0));
    for (int i = 0; i < t.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < t.dim; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            ExtScalar xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int s = 0; s < t.dim; ++s) {
                if (t.at(i, j, s).is_zero()) continue;
                z[static_cast<size_t>(s)] += xy * ExtScalar(t.at(i, j, s));
            }
        }
    }
    return z;
}

std::vector<std::array<int, 3>> check_associativity(const StructureTable& t) {
    std::vector<std::array<int, 3>> bad;
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                Element lhs = multiply(t, t.basis_product(i, j), unit_vector(t.dim, k));
                Element rhs = multiply(t, unit_vector(t.dim, i), t.basis_product(j, k));
                if (lhs != rhs) bad.push_back({i, j, k});
            }
    return bad;
}

void require_associative(const StructureTable& t) {
    auto bad = check_associativity(t);
    if (bad.empty()) return;
    std::ostringstream os;
    os << bad.size() << " violating basis triples, first (" << bad[0][0] + 1 << ","
       << bad[0][1] + 1 << "," << bad[0][2] + 1 << ")";
    throw NonAssociative(os.str());
}

bool is_zeropotent(const StructureTable& t) {
    for (int i = 0; i < t.dim; ++i)
        for (int s = 0; s < t.dim; ++s)
            if (!t.at(i, i, s).is_zero()) return false;
    for (int i = 0; i < t.dim; ++i)
        for (int j = i + 1; j < t.dim; ++j)
            for (int s = 0; s < t.dim; ++s)
                if (t.at(i, j, s) != -t.at(j, i, s)) return false;
    return true;
}

std::optional<Element> find_identity(const StructureTable& t) {
    // Unknown u with u*e_i = e_i and e_i*u = e_i for all i: 2*dim^2 equations.
    int n = t.dim;
    Mat<Scalar> m(2 * n * n, n);
    std::vector<Scalar> rhs(static_cast<size_t>(2 * n * n), Scalar(0));
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s) {
            for (int tt = 0; tt < n; ++tt) m.at(row, tt) = t.at(tt, i, s);
            rhs[static_cast<size_t>(row)] = Scalar(s == i ? 1 : 0);
            ++row;
            for (int tt = 0; tt < n; ++tt) m.at(row, tt) = t.at(i, tt, s);
            rhs[static_cast<size_t>(row)] = Scalar(s == i ? 1 : 0);
            ++row;
        }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    return Element(sol->begin(), sol->end());
}

StructureTable change_basis(const StructureTable& t, const Mat<Scalar>& m) {
    if (m.rows != t.dim || m.cols != t.dim) throw DimensionMismatch("basis change matrix");
    Mat<Scalar> n = mat_inverse(m);  // throws SingularMatrix
    StructureTable b(t.dim, t.mode);
    // b_ij^t = sum_{s,u,v} n_is n_ju alpha_su^v m_vt
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j) {
            Element prod(t.dim, Scalar(0));
            for (int s = 0; s < t.dim; ++s) {
                if (n.at(i, s).is_zero()) continue;
                for (int u = 0; u < t.dim; ++u) {
                    if (n.at(j, u).is_zero()) continue;
                    Scalar w = n.at(i, s) * n.at(j, u);
                    for (int v = 0; v < t.dim; ++v)
                        prod[static_cast<size_t>(v)] += w * t.at(s, u, v);
                }
            }
            for (int v = 0; v < t.dim; ++v) {
                if (prod[static_cast<size_t>(v)].is_zero()) continue;
                for (int tt = 0; tt < t.dim; ++tt)
                    b.at(i, j, tt) += prod[static_cast<size_t>(v)] * m.at(v, tt);
            }
        }
    return b;
}

StructureTable direct_sum(const StructureTable& a, const StructureTable& b) {
    if (a.mode != b.mode) throw ModeMismatch("direct sum of mixed-mode tables");
    StructureTable s(a.dim + b.dim, a.mode);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) s.at(i, j, k) = a.at(i, j, k);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k)
                s.at(a.dim + i, a.dim + j, a.dim + k) = b.at(i, j, k);
    return s;
}

}  // namespace alg3
