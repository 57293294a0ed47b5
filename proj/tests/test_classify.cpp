#include <doctest.h>

#include "alg3/classify.hpp"
#include "alg3/iso.hpp"
#include "alg3/prng.hpp"

using namespace alg3;

namespace {

StructureTable cat(Family f, FieldMode mode = FieldMode::Real) {
    return canonical_table(Label::fixed(f), mode);
}

StructureTable family_table(Family f, const Scalar& k, FieldMode mode = FieldMode::Real) {
    return canonical_table(Label::with_param(f, k, mode), mode);
}

// One-dimensional algebra e^2 = k e.
StructureTable dim1_table(long k) {
    StructureTable t(1, FieldMode::Real);
    t.at(0, 0, 0) = Scalar(k);
    return t;
}

// Commutative dim-2 algebra from g^3 = b g^2 + c g, on the basis (g, g^2).
StructureTable dim2_from_relation(long b, long c, FieldMode mode) {
    StructureTable t(2, mode);
    t.at(0, 0, 1) = Scalar(1);  // g * g = g^2
    // g * g^2 = b g^2 + c g
    t.at(0, 1, 0) = Scalar(c);
    t.at(0, 1, 1) = Scalar(b);
    t.at(1, 0, 0) = Scalar(c);
    t.at(1, 0, 1) = Scalar(b);
    // g^2 * g^2 = g (g^3) = b (g^3) + c g^2 = bc g + (b^2 + c) g^2
    t.at(1, 1, 0) = Scalar(b * c);
    t.at(1, 1, 1) = Scalar(b * b + c);
    return t;
}

// Unital dim-3 algebra from h^3 = a h^2 + b h + c, on the basis (1, h, h^2).
StructureTable unital3_from_relation(long a, long b, long c, FieldMode mode) {
    StructureTable t(3, mode);
    for (int j = 0; j < 3; ++j) {
        t.at(0, j, j) = Scalar(1);
        t.at(j, 0, j) = Scalar(1);
    }
    t.at(1, 1, 2) = Scalar(1);  // h * h
    // h * h^2 = c + b h + a h^2
    for (int side = 0; side < 2; ++side) {
        int i = side == 0 ? 1 : 2, j = side == 0 ? 2 : 1;
        t.at(i, j, 0) = Scalar(c);
        t.at(i, j, 1) = Scalar(b);
        t.at(i, j, 2) = Scalar(a);
    }
    // h^2 * h^2 = h (h^3) = ac + (bc... expand a h^3 + b h^2 + c h
    //           = a(a h^2 + b h + c) + b h^2 + c h = ac + (ab + c) h + (a^2 + b) h^2
    t.at(2, 2, 0) = Scalar(a * c);
    t.at(2, 2, 1) = Scalar(a * b + c);
    t.at(2, 2, 2) = Scalar(a * a + b);
    return t;
}

// Non-unital straight dim-3 algebra from h^4 = a h^3 + b h^2, basis (h, h^2, h^3).
StructureTable straight3_from_relation(long a, long b, FieldMode mode) {
    StructureTable t(3, mode);
    t.at(0, 0, 1) = Scalar(1);  // h h = h^2
    t.at(0, 1, 2) = Scalar(1);  // h h^2 = h^3
    t.at(1, 0, 2) = Scalar(1);
    auto put_pow = [&](int i, int j, long ca, long cb) {
        t.at(i, j, 2) = Scalar(ca);
        t.at(i, j, 1) = Scalar(cb);
    };
    // h h^3 = h^4 = a h^3 + b h^2
    put_pow(0, 2, a, b);
    put_pow(2, 0, a, b);
    put_pow(1, 1, a, b);
    // h^2 h^3 = h^5 = a h^4 + b h^3 = (a^2 + b) h^3 + ab h^2
    put_pow(1, 2, a * a + b, a * b);
    put_pow(2, 1, a * a + b, a * b);
    // h^3 h^3 = h^6 = a h^5 + b h^4 = (a^3 + 2ab) h^3 + (a^2 b + b^2) h^2
    put_pow(2, 2, a * a * a + 2 * a * b, a * a * b + b * b);
    return t;
}

}  // namespace

TEST_CASE("dimension one") {
    ClassifyResult r = classify(dim1_table(0));
    CHECK(r.label == Label::fixed(Family::A1_0));
    r = classify(dim1_table(1));
    CHECK(r.label == Label::fixed(Family::A1_1));
    r = classify(dim1_table(5));
    CHECK(r.label == Label::fixed(Family::A1_1));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->at(0, 0) == ExtScalar(5));  // verified direction: input to canonical
    CHECK(verify_witness(dim1_table(5), cat(Family::A1_1), Witness(*r.witness)));
}

TEST_CASE("dimension two, straight cases") {
    // b = 0, c = 1: D = 4 > 0
    ClassifyResult r = classify(dim2_from_relation(0, 1, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::A2_5));
    // same relation with c = -1: D = -4
    r = classify(dim2_from_relation(0, -1, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::A2_5m));
    r = classify(dim2_from_relation(0, -1, FieldMode::Complex));
    CHECK(r.label == Label::fixed(Family::A2_5));
    // degenerate: b = 2, c = -1 gives D = 0
    r = classify(dim2_from_relation(2, -1, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::A2_6));
    r = classify(dim2_from_relation(0, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::A2_3));
    r = classify(dim2_from_relation(3, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::A2_4));
}

TEST_CASE("dimension two, curled reductions with printed witness") {
    // rows (e f / e f): e^2=e, ef=f, fe=e, f^2=f
    StructureTable a25p(2, FieldMode::Real);
    a25p.at(0, 0, 0) = Scalar(1);
    a25p.at(0, 1, 1) = Scalar(1);
    a25p.at(1, 0, 0) = Scalar(1);
    a25p.at(1, 1, 1) = Scalar(1);
    ClassifyResult r = classify(a25p);
    CHECK(r.label == Label::fixed(Family::A2_1));
    REQUIRE(r.witness.has_value());
    Mat<ExtScalar> expected(2, 2);
    expected.at(0, 0) = ExtScalar(1);
    expected.at(0, 1) = ExtScalar(1);
    expected.at(1, 1) = ExtScalar(1);
    CHECK(*r.witness == expected);  // the shear printed in the source text
}

TEST_CASE("unital dimension three") {
    // distinct rational roots 1, 2, 3
    ClassifyResult r = classify(unital3_from_relation(6, -11, 6, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_2));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    // triple root zero
    r = classify(unital3_from_relation(0, 0, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_4));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    // (X - 1)(X^2 + 1): one real root, complex pair
    r = classify(unital3_from_relation(1, -1, 1, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_2m));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    r = classify(unital3_from_relation(1, -1, 1, FieldMode::Complex));
    CHECK(r.label == Label::fixed(Family::U3_2));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    // double root: (X-1)^2 (X-2) = X^3 - 4X^2 + 5X - 2
    r = classify(unital3_from_relation(4, -5, 2, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_3));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    // irreducible X^3 - X - 1: label exact, witness omitted
    r = classify(unital3_from_relation(0, 1, 1, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_2m));  // discriminant -23
    CHECK(r.witness_status == WitnessStatus::OmittedCubicRoot);
    CHECK_FALSE(r.witness.has_value());
    // quadratic-irrational roots: X(X^2 - 2), discriminant 8 > 0, no rational
    // root needed beyond zero; witness exact in a square-root tower
    r = classify(unital3_from_relation(0, 2, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::U3_2));
    CHECK(r.witness_status == WitnessStatus::ExactVerified);
    // not unitally straight
    CHECK(classify(cat(Family::U3_0)).label == Label::fixed(Family::U3_0));
    CHECK(classify(cat(Family::U3_1)).label == Label::fixed(Family::U3_1));
}

TEST_CASE("straight dimension three") {
    ClassifyResult r = classify(straight3_from_relation(0, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::S3_1));
    r = classify(straight3_from_relation(1, 0, FieldMode::Real));
    CHECK(r.label == Label::fixed(Family::S3_2));
    r = classify(straight3_from_relation(0, 1, FieldMode::Real));  // D = 4
    CHECK(r.label == Label::fixed(Family::S3_3));
    r = classify(straight3_from_relation(0, -1, FieldMode::Real));  // D = -4, a = 0 branch
    CHECK(r.label == Label::fixed(Family::S3_3m));
    r = classify(straight3_from_relation(0, -1, FieldMode::Complex));
    CHECK(r.label == Label::fixed(Family::S3_3));
    r = classify(straight3_from_relation(2, -1, FieldMode::Real));  // D = 0
    CHECK(r.label == Label::fixed(Family::S3_4));
    // witnesses verified exactly in all branches
    for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 0}, {0, 1}, {2, -1}, {3, 2}}) {
        ClassifyResult c = classify(straight3_from_relation(a, b, FieldMode::Real));
        CHECK(c.witness_status == WitnessStatus::ExactVerified);
        CHECK(c.witness.has_value());
    }
}

TEST_CASE("curled dimension three fixed points") {
    for (Family f : {Family::C3_0, Family::C3_1, Family::C3_2, Family::C3_3, Family::C3_4}) {
        ClassifyResult r = classify(cat(f));
        CHECK(r.label == Label::fixed(f));
        CHECK(r.witness_status == WitnessStatus::ExactVerified);
    }
}

TEST_CASE("waved dimension three fixed points and scrambles") {
    CHECK(classify(cat(Family::W3_6)).label == Label::fixed(Family::W3_6));
    SplitMix64 rng(41);
    for (int i = 0; i < 10; ++i) {
        ScrambleResult s = scramble(cat(Family::W3_9), rng.next());
        CHECK(classify(s.table).label == Label::fixed(Family::W3_9));
    }
    ScrambleResult s = scramble(cat(Family::S3_4), 7);
    CHECK(classify(s.table).label == Label::fixed(Family::S3_4));
}

TEST_CASE("intermediate tables that are not waved reach the right pipeline") {
    // rows (0 0 e / 0 f 0 / e 0 g): unital, classifies into the double-root class
    StructureTable bd1(3, FieldMode::Real);
    bd1.at(0, 2, 0) = Scalar(1);
    bd1.at(1, 1, 1) = Scalar(1);
    bd1.at(2, 0, 0) = Scalar(1);
    bd1.at(2, 2, 2) = Scalar(1);
    CHECK(find_identity(bd1).has_value());
    CHECK(classify(bd1).label == Label::fixed(Family::U3_3));
    // its companion with fg = gf = f
    StructureTable bd1b = bd1;
    bd1b.at(1, 2, 1) = Scalar(1);
    bd1b.at(2, 1, 1) = Scalar(1);
    CHECK(classify(bd1b).label == Label::fixed(Family::U3_3));
}

TEST_CASE("waved parameter invariant") {
    WavedParameter p = waved_parameter(family_table(Family::W3_3, Scalar(1)));
    CHECK(p.family == Family::W3_3);
    CHECK(p.k_squared == Scalar(1));
    REQUIRE(p.detq_sign_real.has_value());
    CHECK(*p.detq_sign_real == 1);

    p = waved_parameter(family_table(Family::W3_3, Scalar(0)));
    CHECK(p.k_squared == Scalar(0));
    CHECK(p.k == ExtScalar(0));

    p = waved_parameter(family_table(Family::W3_3m, Scalar(2)));
    CHECK(p.family == Family::W3_3m);
    CHECK(p.k_squared == Scalar(4));
    CHECK(*p.detq_sign_real == -1);
    CHECK(p.k == ExtScalar(2));

    // scale and basis invariance via scrambles
    SplitMix64 rng(42);
    for (int i = 0; i < 20; ++i) {
        ScrambleResult s =
            scramble(family_table(Family::W3_3, Scalar(Rational(7, 3))), rng.next());
        WavedParameter q = waved_parameter(s.table);
        CHECK(q.k_squared == Scalar(Rational(49, 9)));
        CHECK(q.family == Family::W3_3);
    }
    CHECK_THROWS_AS(waved_parameter(cat(Family::W3_1)), DegenerateForm);
}

TEST_CASE("canonical unital tables classify with identity witnesses") {
    ClassifyResult r = classify(cat(Family::U3_1));
    CHECK(r.label == Label::fixed(Family::U3_1));
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == lift_mat(Mat<Scalar>::identity(3)));
}

TEST_CASE("parameter invariant under rescaling the square span") {
    // replacing the spanning vector of A^2 by c * e leaves lambda unchanged
    StructureTable t = family_table(Family::W3_3, Scalar(Rational(7, 3)));
    Scalar expected = waved_parameter(t).k_squared;
    for (long c : {2L, -3L, 5L}) {
        Mat<Scalar> m = Mat<Scalar>::identity(3);
        m.at(0, 0) = Scalar(c);
        WavedParameter p = waved_parameter(change_basis(t, m));
        CHECK(p.k_squared == expected);
        CHECK(p.family == Family::W3_3);
    }
}

TEST_CASE("sign symmetry of the family parameter") {
    for (long k : {1L, 2L, 5L}) {
        StructureTable pos = family_table(Family::W3_3, Scalar(k));
        StructureTable neg = canonical_table(
            Label::with_param_squared(Family::W3_3, Scalar(k * k), ExtScalar(Scalar(-k))),
            FieldMode::Real);
        CHECK(waved_parameter(pos).k_squared == waved_parameter(neg).k_squared);
        CHECK(classify(pos).label == classify(neg).label);
    }
}

TEST_CASE("irrational family parameter omits the witness but keeps the label") {
    // l - aa' = 2 in the nil-plane reduction: k^2 = 1/2, k irrational
    StructureTable t(3, FieldMode::Real);
    t.at(1, 1, 0) = Scalar(1);  // f^2 = e
    t.at(2, 2, 0) = Scalar(2);  // g^2 = 2e
    t.at(2, 1, 0) = Scalar(1);  // gf = e
    ClassifyResult r = classify(t);
    CHECK(r.label.family == Family::W3_3);
    CHECK(*r.label.k_squared == Scalar(Rational(1, 2)));
    CHECK(r.witness_status == WitnessStatus::OmittedUnsupported);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("complex pipelines with Gaussian irrationalities") {
    // unital: (X - i)(X^2 - i), one Gaussian root plus a non-square radicand
    {
        StructureTable t(3, FieldMode::Complex);
        Scalar a(0, 1), b(0, 1), c(1);
        for (int j = 0; j < 3; ++j) {
            t.at(0, j, j) = Scalar(1);
            t.at(j, 0, j) = Scalar(1);
        }
        t.at(1, 1, 2) = Scalar(1);
        for (int side = 0; side < 2; ++side) {
            int i = side == 0 ? 1 : 2, j = side == 0 ? 2 : 1;
            t.at(i, j, 0) = c;
            t.at(i, j, 1) = b;
            t.at(i, j, 2) = a;
        }
        t.at(2, 2, 0) = a * c;
        t.at(2, 2, 1) = a * b + c;
        t.at(2, 2, 2) = a * a + b;
        REQUIRE(check_associativity(t).empty());
        ClassifyResult r = classify(t);
        CHECK(r.label == Label::fixed(Family::U3_2));
        CHECK(r.witness_status == WitnessStatus::ExactVerified);
    }
    // unital double root at i: (X - i)^2 (X - 1) = X^3 - (1+2i)X^2 + (2i-1)X + 1
    {
        // h^3 = a h^2 + b h + c with a = 1+2i, b = 1-2i, c = -1
        Scalar a(1, 2), b(1, -2), c(-1);
        StructureTable t(3, FieldMode::Complex);
        for (int j = 0; j < 3; ++j) {
            t.at(0, j, j) = Scalar(1);
            t.at(j, 0, j) = Scalar(1);
        }
        t.at(1, 1, 2) = Scalar(1);
        for (int side = 0; side < 2; ++side) {
            int i = side == 0 ? 1 : 2, j = side == 0 ? 2 : 1;
            t.at(i, j, 0) = c;
            t.at(i, j, 1) = b;
            t.at(i, j, 2) = a;
        }
        t.at(2, 2, 0) = a * c;
        t.at(2, 2, 1) = a * b + c;
        t.at(2, 2, 2) = a * a + b;
        REQUIRE(check_associativity(t).empty());
        ClassifyResult r = classify(t);
        CHECK(r.label == Label::fixed(Family::U3_3));
        CHECK(r.witness_status == WitnessStatus::ExactVerified);
    }
    // straight: h^4 = i h^2 over C, the split class through a Gaussian radicand
    {
        StructureTable t(3, FieldMode::Complex);
        Scalar b(0, 1);
        t.at(0, 0, 1) = Scalar(1);
        t.at(0, 1, 2) = Scalar(1);
        t.at(1, 0, 2) = Scalar(1);
        auto put_pow = [&](int i, int j, const Scalar& ca, const Scalar& cb) {
            t.at(i, j, 2) = ca;
            t.at(i, j, 1) = cb;
        };
        put_pow(0, 2, Scalar(0), b);
        put_pow(2, 0, Scalar(0), b);
        put_pow(1, 1, Scalar(0), b);
        put_pow(1, 2, b, Scalar(0));
        put_pow(2, 1, b, Scalar(0));
        put_pow(2, 2, Scalar(0), b * b);
        REQUIRE(check_associativity(t).empty());
        ClassifyResult r = classify(t);
        CHECK(r.label == Label::fixed(Family::S3_3));
        CHECK(r.witness_status == WitnessStatus::ExactVerified);
    }
    // waved family with a Gaussian parameter
    {
        StructureTable t(3, FieldMode::Complex);
        t.at(1, 1, 0) = Scalar(1);
        t.at(2, 2, 0) = Scalar(1);
        t.at(2, 1, 0) = scalar_parse("1+1 i").value();  // gf = (1+i) e
        ClassifyResult r = classify(t);
        CHECK(r.label.family == Family::W3_3);
        CHECK(*r.label.k_squared == Scalar(0, 2));  // (1+i)^2
        CHECK(r.witness_status == WitnessStatus::ExactVerified);
    }
}

TEST_CASE("derivation-form fixtures") {
    auto tab = [](std::initializer_list<std::array<int, 4>> es) {
        StructureTable t(3, FieldMode::Real);
        for (auto& e : es) t.at(e[0], e[1], e[2]) = Scalar(e[3]);
        return t;
    };
    // first bases the waved screening produces, before the final renaming
    CHECK(classify(tab({{1, 1, 0, 1}})).label == Label::fixed(Family::W3_1));
    CHECK(classify(tab({{1, 1, 0, 1}, {2, 1, 0, 1}})).label == Label::fixed(Family::W3_2));
    // rows (0 e e / e f f / e g g) and (0 e e / e f g / e f g)
    CHECK(classify(tab({{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 1},
                        {2, 0, 0, 1}, {2, 1, 2, 1}, {2, 2, 2, 1}}))
              .label == Label::fixed(Family::W3_9));
    CHECK(classify(tab({{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1},
                        {2, 0, 0, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}}))
              .label == Label::fixed(Family::W3_10));
    // the two unital companions of the same case: generator satisfies X(X-1)^2
    CHECK(classify(tab({{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 1},
                        {2, 0, 0, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}}))
              .label == Label::fixed(Family::U3_3));
    CHECK(classify(tab({{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1},
                        {2, 0, 0, 1}, {2, 1, 2, 1}, {2, 2, 2, 1}}))
              .label == Label::fixed(Family::U3_3));
}

TEST_CASE("round trip under random rational basis changes") {
    // invertible but not unimodular: denominators flow through the transport
    SplitMix64 rng(44);
    auto random_invertible = [&](int dim) {
        while (true) {
            Mat<Scalar> m(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    m.at(i, j) = Scalar(Rational(rng.range(-4, 4), rng.range(1, 3)));
            if (!mat_det(m).is_zero()) return m;
        }
    };
    std::vector<Label> labels = {
        Label::fixed(Family::A2_6),  Label::fixed(Family::C3_4),  Label::fixed(Family::S3_1),
        Label::fixed(Family::U3_0),  Label::fixed(Family::W3_8),
        Label::with_param(Family::W3_3, Scalar(Rational(1, 2)), FieldMode::Real),
        Label::with_param(Family::W3_3m, Scalar(3), FieldMode::Real),
    };
    for (const Label& l : labels) {
        StructureTable t = canonical_table(l, FieldMode::Real);
        InvariantProfile p = invariant_profile(t);
        for (int i = 0; i < 8; ++i) {
            StructureTable moved = change_basis(t, random_invertible(t.dim));
            CHECK(invariant_profile(moved) == p);
            CHECK(classify(moved).label == l);
        }
    }
}

TEST_CASE("round trip under composed scrambles") {
    SplitMix64 rng(45);
    for (Family f : {Family::W3_7, Family::C3_2, Family::U3_1}) {
        StructureTable t = canonical_table(Label::fixed(f), FieldMode::Real);
        for (int i = 0; i < 5; ++i) {
            ScrambleResult s1 = scramble(t, rng.next());
            ScrambleResult s2 = scramble(s1.table, rng.next());
            CHECK(classify(s2.table).label == Label::fixed(f));
        }
    }
}

TEST_CASE("complex family parameters round trip") {
    for (Scalar k : {Scalar(0, 1), Scalar(2, 3), Scalar(Rational(1, 2), Rational(-3, 2))}) {
        Label l = Label::with_param(Family::W3_3, k, FieldMode::Complex);
        StructureTable t = canonical_table(l, FieldMode::Complex);
        for (uint64_t seed : {3u, 14u, 159u}) {
            ClassifyResult r = classify(scramble(t, seed).table);
            CHECK(r.label == l);
            CHECK(*r.label.k_squared == k * k);
        }
    }
}

TEST_CASE("classification errors") {
    StructureTable bad(3, FieldMode::Real);
    bad.at(0, 2, 1) = Scalar(1);
    bad.at(2, 2, 0) = Scalar(1);
    CHECK_THROWS_AS(classify(bad), NonAssociative);
    StructureTable complex_entries(2, FieldMode::Real);
    complex_entries.at(0, 0, 0) = Scalar(0, 1);
    CHECK_THROWS_AS(classify(complex_entries), ModeMismatch);
    StructureTable big(4, FieldMode::Real);
    CHECK_THROWS_AS(classify(big), DimensionMismatch);
}

TEST_CASE("witness soundness across pipelines") {
    SplitMix64 rng(43);
    std::vector<Label> labels = {
        Label::fixed(Family::U3_4),  Label::fixed(Family::C3_2), Label::fixed(Family::S3_3m),
        Label::fixed(Family::W3_7),  Label::fixed(Family::W3_2),
        Label::with_param(Family::W3_3, Scalar(2), FieldMode::Real),
        Label::with_param(Family::W3_3m, Scalar(1), FieldMode::Real),
    };
    for (const Label& l : labels) {
        StructureTable t = canonical_table(l, FieldMode::Real);
        for (int i = 0; i < 5; ++i) {
            ScrambleResult s = scramble(t, rng.next());
            ClassifyResult r = classify(s.table);
            REQUIRE(r.label == l);
            REQUIRE(r.witness_status == WitnessStatus::ExactVerified);
            REQUIRE(r.witness.has_value());
            CHECK(verify_witness(s.table, canonical_table(l, FieldMode::Real),
                                 Witness(*r.witness)));
        }
    }
}

TEST_CASE("trace carries the case identifiers") {
    ClassifyResult r = classify(family_table(Family::W3_3, Scalar(2)));
    bool has_case = false, has_param = false;
    for (const auto& s : r.trace) {
        if (s.case_id.find("waved3/aa") == 0) has_case = true;
        if (s.case_id == "waved3/parameter") has_param = true;
    }
    CHECK(has_case);
    CHECK(has_param);
    r = classify(unital3_from_relation(4, -5, 2, FieldMode::Real));
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0].case_id == "unital3/double-root");
}
