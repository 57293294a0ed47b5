#pragma once

#include <array>
#include <vector>

#include "alg3/linalg.hpp"
#include "alg3/scalar.hpp"

namespace alg3 {

/// Coordinate vector of an algebra element in the table's basis.
using Element = std::vector<Scalar>;
using ElementExt = std::vector<ExtScalar>;

inline Element unit_vector(int dim, int i) {
    Element v(static_cast<size_t>(dim), Scalar(0));
    v[static_cast<size_t>(i)] = Scalar(1);
    return v;
}

/// Structure constants of an algebra of dimension 1..3:
/// e_i e_j = sum_s c[i][j][s] e_s.
struct StructureTable {
    int dim = 0;
    FieldMode mode = FieldMode::Real;
    std::vector<Scalar> c;  // dim^3 entries, index ((i*dim)+j)*dim+s

    StructureTable() = default;
    StructureTable(int d, FieldMode m)
        : dim(d), mode(m), c(static_cast<size_t>(d) * d * d, Scalar(0)) {}

    Scalar& at(int i, int j, int s) {
        return c[(static_cast<size_t>(i) * dim + j) * dim + s];
    }
    const Scalar& at(int i, int j, int s) const {
        return c[(static_cast<size_t>(i) * dim + j) * dim + s];
    }

    /// Product of basis elements e_i e_j as a coordinate vector.
    Element basis_product(int i, int j) const {
        Element v(dim);
        for (int s = 0; s < dim; ++s) v[static_cast<size_t>(s)] = at(i, j, s);
        return v;
    }

    bool all_real() const {
        for (const auto& x : c)
            if (!x.is_real()) return false;
        return true;
    }

    friend bool operator==(const StructureTable& a, const StructureTable& b) {
        return a.dim == b.dim && a.mode == b.mode && a.c == b.c;
    }
};

Element multiply(const StructureTable& t, const Element& x, const Element& y);

/// Same product with coordinates in an extension tower.
ElementExt multiply_ext(const StructureTable& t, const ElementExt& x, const ElementExt& y);

/// Basis triples (i,j,k), zero-indexed, where (e_i e_j) e_k != e_i (e_j e_k).
std::vector<std::array<int, 3>> check_associativity(const StructureTable& t);

void require_associative(const StructureTable& t);

/// True iff x^2 = 0 identically: zero diagonal and antisymmetric table.
bool is_zeropotent(const StructureTable& t);

/// The two-sided identity element, when one exists.
std::optional<Element> find_identity(const StructureTable& t);

/// Transports structure constants so that M satisfies the isomorphism
/// criterion from the input table to the result.
StructureTable change_basis(const StructureTable& t, const Mat<Scalar>& m);

StructureTable direct_sum(const StructureTable& a, const StructureTable& b);

}  // namespace alg3
