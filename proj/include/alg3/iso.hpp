#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "alg3/classify.hpp"
#include "alg3/table.hpp"

namespace alg3 {

/// Invertible basis-change matrix certifying an isomorphism.
struct Witness {
    Mat<ExtScalar> matrix;

    explicit Witness(Mat<ExtScalar> m);  // checks squareness and invertibility
    int dim() const { return matrix.rows; }
};

/// Exact check of the isomorphism criterion for the matrix, rows giving the
/// images of a's basis vectors in b's basis.
bool verify_witness(const StructureTable& a, const StructureTable& b, const Witness& w);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Witness> witness;
    std::string separator;  // named separating invariant when not isomorphic
    ClassifyResult left;
    ClassifyResult right;
};

/// Decides isomorphism through the classification; composes the two
/// classification witnesses when both are exact.
IsoResult are_isomorphic(const StructureTable& a, const StructureTable& b);

/// Name of an invariant distinguishing two non-isomorphic classifications.
std::string separating_invariant(const ClassifyResult& a, const ClassifyResult& b);

struct ScrambleResult {
    StructureTable table;
    Mat<Scalar> matrix;  // unimodular integer matrix used
};

/// Deterministic unimodular basis scramble (entries -3..3, |det| = 1).
ScrambleResult scramble(const StructureTable& a, uint64_t seed);

/// Matrix over GF(p), the oracle's certificate.
struct FFMatrix {
    int prime = 0;
    int dim = 0;
    std::vector<int> entries;  // row-major residues

    int at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
    std::string to_string() const;
};

/// Exhaustive search for a matrix over GF(p) satisfying the reduction of the
/// isomorphism criterion; returns the lexicographically first hit.
std::optional<FFMatrix> ff_oracle(const StructureTable& a, const StructureTable& b, int p);

}  // namespace alg3
