#include "alg3/iso.hpp"

#include <sstream>

#include "alg3/prng.hpp"

namespace alg3 {

Witness::Witness(Mat<ExtScalar> m) : matrix(std::move(m)) {
    if (matrix.rows != matrix.cols) throw DimensionMismatch("witness must be square");
    if (mat_det(matrix).is_zero()) throw SingularMatrix{};
}

bool verify_witness(const StructureTable& a, const StructureTable& b, const Witness& w) {
    if (a.dim != b.dim) throw DimensionMismatch("witness verification");
    return satisfies_iso_criterion(a, b, w.matrix);
}

std::string separating_invariant(const ClassifyResult& a, const ClassifyResult& b) {
    const InvariantProfile& p = a.profile;
    const InvariantProfile& q = b.profile;
    if (p.alpha != q.alpha) return "alpha";
    if (p.beta != q.beta) return "beta";
    if (p.gamma != q.gamma) return "gamma";
    if (p.commutative != q.commutative) return "commutative";
    if (p.unital != q.unital) return "unital";
    if (p.shape != q.shape) return "shape";
    if (p.zeropotent != q.zeropotent) return "zeropotent";
    if (p.square_of_square_zero != q.square_of_square_zero) return "square_of_square_zero";
    if (p.zeropotent_plane != q.zeropotent_plane) return "zeropotent_plane";
    Family fa = a.label.family, fb = b.label.family;
    if (family_parameterized(fa) && family_parameterized(fb)) {
        if (fa != fb) return "detQ_sign";
        return "family_parameter";
    }
    std::string ca = catalog_metadata(fa).reduction_class;
    std::string cb = catalog_metadata(fb).reduction_class;
    if (!ca.empty() && !cb.empty() && ca != cb) {
        bool unital_pair = fa == Family::U3_2 || fa == Family::U3_2m || fa == Family::U3_3 ||
                           fa == Family::U3_4;
        return unital_pair ? "cubic_root_pattern" : "straight_reduction_class";
    }
    return "canonical_label";
}

IsoResult are_isomorphic(const StructureTable& a, const StructureTable& b) {
    if (a.dim != b.dim) throw DimensionMismatch("isomorphism test needs equal dimensions");
    if (a.mode != b.mode) throw ModeMismatch("isomorphism test needs one field mode");
    IsoResult r;
    r.left = classify(a);
    r.right = classify(b);
    if (r.left.label == r.right.label) {
        r.isomorphic = true;
        if (r.left.witness && r.right.witness &&
            r.left.witness_status == WitnessStatus::ExactVerified &&
            r.right.witness_status == WitnessStatus::ExactVerified) {
            try {
                Mat<ExtScalar> m = mat_mul(*r.left.witness, mat_inverse(*r.right.witness));
                Witness w(std::move(m));
                if (!verify_witness(a, b, w))
                    throw InternalContradiction("composed witness fails verification");
                r.witness = std::move(w);
            } catch (const UnsupportedTower&) {
                // verdict stands; the combined radicals exceed the tower cap
            }
        }
        return r;
    }
    r.isomorphic = false;
    r.separator = separating_invariant(r.left, r.right);
    return r;
}

ScrambleResult scramble(const StructureTable& a, uint64_t seed) {
    SplitMix64 rng(seed ^ 0x5ca1ab1e00000000ULL);
    int n = a.dim;
    while (true) {
        Mat<Scalar> m(n, n);
        Int det;
        std::vector<long> ints(static_cast<size_t>(n) * n);
        for (auto& v : ints) v = rng.range(-3, 3);
        // integer determinant
        if (n == 1) {
            det = ints[0];
        } else if (n == 2) {
            det = Int(ints[0]) * ints[3] - Int(ints[1]) * ints[2];
        } else {
            det = Int(ints[0]) * (Int(ints[4]) * ints[8] - Int(ints[5]) * ints[7]) -
                  Int(ints[1]) * (Int(ints[3]) * ints[8] - Int(ints[5]) * ints[6]) +
                  Int(ints[2]) * (Int(ints[3]) * ints[7] - Int(ints[4]) * ints[6]);
        }
        if (det != 1 && det != -1) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = Scalar(Rational(ints[static_cast<size_t>(i) * n + j]));
        return ScrambleResult{change_basis(a, m), std::move(m)};
    }
}

namespace {

int mod_inverse(long v, int p) {
    long r = v % p;
    if (r < 0) r += p;
    if (r == 0) throw BadPrime("denominator divisible by the prime");
    // Fermat
    long acc = 1, base = r, e = p - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int reduce_rational(const Rational& x, int p) {
    Int num = x.get_num() % p;
    Int den = x.get_den() % p;
    long n = num.get_si(), d = den.get_si();
    if (n < 0) n += p;
    int dinv = mod_inverse(d, p);
    return static_cast<int>(n * dinv % p);
}

int reduce_scalar(const Scalar& x, int p) {
    int re = reduce_rational(x.re, p);
    if (x.im == 0) return re;
    // need a square root of -1 modulo p
    int root = -1;
    for (int r = 1; r < p; ++r)
        if (r * r % p == p - 1) {
            root = r;
            break;
        }
    if (root < 0) throw BadPrime("imaginary constants need -1 to be a square mod p");
    int im = reduce_rational(x.im, p);
    return (re + im * root) % p;
}

int det3_mod(const int* m, int p) {
    long d = static_cast<long>(m[0]) * (m[4] * m[8] - m[5] * m[7]) -
             static_cast<long>(m[1]) * (m[3] * m[8] - m[5] * m[6]) +
             static_cast<long>(m[2]) * (m[3] * m[7] - m[4] * m[6]);
    long r = d % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int det2_mod(const int* m, int p) {
    long d = static_cast<long>(m[0]) * m[3] - static_cast<long>(m[1]) * m[2];
    long r = d % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

std::string FFMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim; ++i) {
        os << (i ? ";" : "") << "[";
        for (int j = 0; j < dim; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "] mod " << prime;
    return os.str();
}

std::optional<FFMatrix> ff_oracle(const StructureTable& a, const StructureTable& b, int p) {
    if (a.dim != b.dim) throw DimensionMismatch("oracle needs equal dimensions");
    if (p < 2 || p > 7 || p == 4 || p == 6) throw BadPrime("prime must be 2, 3, 5 or 7");
    int n = a.dim;
    std::vector<int> alpha(static_cast<size_t>(n) * n * n), beta(alpha.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                alpha[(static_cast<size_t>(i) * n + j) * n + s] = reduce_scalar(a.at(i, j, s), p);
                beta[(static_cast<size_t>(i) * n + j) * n + s] = reduce_scalar(b.at(i, j, s), p);
            }
    auto al = [&](int i, int j, int s) { return alpha[(static_cast<size_t>(i) * n + j) * n + s]; };
    auto be = [&](int i, int j, int s) { return beta[(static_cast<size_t>(i) * n + j) * n + s]; };

    int cells = n * n;
    std::vector<int> m(static_cast<size_t>(cells), 0);
    auto entry = [&](int i, int j) { return m[static_cast<size_t>(i) * n + j]; };
    while (true) {
        int det = n == 3 ? det3_mod(m.data(), p) : (n == 2 ? det2_mod(m.data(), p) : m[0] % p);
        if (det != 0) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int t = 0; t < n && ok; ++t) {
                        long lhs = 0;
                        for (int s = 0; s < n; ++s) lhs += static_cast<long>(al(i, j, s)) * entry(s, t);
                        long rhs = 0;
                        for (int k = 0; k < n; ++k) {
                            if (entry(i, k) == 0) continue;
                            for (int l = 0; l < n; ++l) {
                                int bk = be(k, l, t);
                                if (bk == 0 || entry(j, l) == 0) continue;
                                rhs += static_cast<long>(bk) * entry(i, k) % p * entry(j, l);
                            }
                        }
                        if ((lhs - rhs) % p != 0) ok = false;
                    }
            if (ok) {
                FFMatrix out;
                out.prime = p;
                out.dim = n;
                out.entries = m;
                return out;
            }
        }
        // lexicographic odometer, last entry fastest
        int pos = cells - 1;
        while (pos >= 0) {
            if (++m[static_cast<size_t>(pos)] < p) break;
            m[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

}  // namespace alg3
