#include <doctest.h>

#include "alg3/catalog.hpp"
#include "alg3/classify.hpp"
#include "alg3/iso.hpp"

using namespace alg3;

namespace {

size_t fixed_count(FieldMode mode, int dim) {
    size_t n = 0;
    for (const Label& l : catalog_list(mode, dim))
        if (!l.is_family()) ++n;
    return n;
}

size_t stub_count(FieldMode mode, int dim) {
    size_t n = 0;
    for (const Label& l : catalog_list(mode, dim))
        if (l.is_family()) ++n;
    return n;
}

}  // namespace

TEST_CASE("catalog counts") {
    CHECK(fixed_count(FieldMode::Complex, 1) == 2);
    CHECK(fixed_count(FieldMode::Real, 1) == 2);
    CHECK(fixed_count(FieldMode::Complex, 2) == 7);
    CHECK(fixed_count(FieldMode::Real, 2) == 8);
    CHECK(fixed_count(FieldMode::Complex, 3) == 23);
    CHECK(fixed_count(FieldMode::Real, 3) == 25);
    CHECK(stub_count(FieldMode::Complex, 3) == 1);
    CHECK(stub_count(FieldMode::Real, 3) == 2);
    CHECK(stub_count(FieldMode::Real, 2) == 0);
}

TEST_CASE("stored profiles equal computed profiles") {
    std::vector<Scalar> ks = {Scalar(0), Scalar(1), Scalar(2)};
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        std::vector<Scalar> samples = ks;
        if (mode == FieldMode::Complex) samples.push_back(Scalar(1, 1));
        for (int dim = 1; dim <= 3; ++dim)
            for (const Label& stub : catalog_list(mode, dim)) {
                if (!stub.is_family()) {
                    StructureTable t = canonical_table(stub, mode);
                    CHECK(expected_invariants(stub, mode) == invariant_profile(t));
                    continue;
                }
                for (const Scalar& k : samples) {
                    if (stub.family == Family::W3_3m && !k.is_real()) continue;
                    Label l = Label::with_param(stub.family, k, mode);
                    InvariantProfile p = expected_invariants(l, mode);
                    CHECK(p == invariant_profile(canonical_table(l, mode)));
                    CHECK(p.alpha == 1);
                    CHECK(p.beta == 1);
                    CHECK(p.gamma == 1);
                }
            }
    }
    InvariantProfile w5 = expected_invariants(Label::fixed(Family::W3_5), FieldMode::Real);
    CHECK(w5.alpha == 2);
    CHECK(w5.beta == 2);
    CHECK(w5.gamma == 1);
    InvariantProfile c4 = expected_invariants(Label::fixed(Family::C3_4), FieldMode::Real);
    CHECK(c4.alpha == 3);
    CHECK(c4.beta == 0);
    CHECK(c4.gamma == 2);
}

TEST_CASE("canonical table errors") {
    CHECK_THROWS_AS(canonical_table(Label::fixed(Family::S3_3m), FieldMode::Complex), BadLabel);
    CHECK_THROWS_AS(canonical_table(Label::fixed(Family::W3_3), FieldMode::Real), BadLabel);
    CHECK_THROWS_AS(Label::with_param(Family::W3_3, Scalar(1, 1), FieldMode::Real), ModeMismatch);
    CHECK_THROWS_AS(Label::with_param(Family::C3_2, Scalar(1), FieldMode::Real), BadLabel);
}

TEST_CASE("parameter normalization") {
    Label l = Label::with_param(Family::W3_3, Scalar(-2), FieldMode::Real);
    CHECK(*l.k_squared == Scalar(4));
    CHECK(*l.k == ExtScalar(2));
    Label c = Label::with_param(Family::W3_3, Scalar(0, -3), FieldMode::Complex);
    CHECK(*c.k == ExtScalar(Scalar(0, 3)));  // boundary of the half-plane
    CHECK(*c.k_squared == Scalar(-9));
    CHECK(l.to_string() == "W3_3(k), k^2 = 4");
}

TEST_CASE("curled plane enumeration") {
    auto sols = enumerate_curled2();
    std::vector<std::array<int, 6>> expected = {
        {0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 1},
        {1, 0, 0, 1, 0, 0}, {1, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 1},
    };
    CHECK(sols == expected);  // the printed order is the lexicographic one
    // the corresponding tables are associative, curled, and classify to the
    // three curled classes
    Family want[] = {Family::A2_0, Family::A2_1, Family::A2_2, Family::A2_2,
                     Family::A2_1, Family::A2_1, Family::A2_2};
    for (size_t i = 0; i < sols.size(); ++i) {
        StructureTable t = curled2_table(sols[i], FieldMode::Real);
        CHECK(check_associativity(t).empty());
        CHECK(algebra_shape(t) == Shape::Curled);
        CHECK(classify(t).label == Label::fixed(want[i]));
    }
}

TEST_CASE("decomposable catalog entries match their direct sums") {
    auto cat = [](Family f, FieldMode m = FieldMode::Real) {
        return canonical_table(Label::fixed(f), m);
    };
    struct SumCase {
        Family whole;
        StructureTable sum;
    };
    std::vector<SumCase> cases;
    cases.push_back({Family::A2_0, direct_sum(cat(Family::A1_0), cat(Family::A1_0))});
    cases.push_back({Family::A2_4, direct_sum(cat(Family::A1_1), cat(Family::A1_0))});
    cases.push_back({Family::A2_5, direct_sum(cat(Family::A1_1), cat(Family::A1_1))});
    cases.push_back({Family::U3_2, direct_sum(direct_sum(cat(Family::A1_1), cat(Family::A1_1)),
                                              cat(Family::A1_1))});
    cases.push_back({Family::U3_2m, direct_sum(cat(Family::A1_1), cat(Family::A2_5m))});
    cases.push_back({Family::U3_3, direct_sum(cat(Family::A1_1), cat(Family::A2_6))});
    cases.push_back({Family::S3_2, direct_sum(cat(Family::A1_1), cat(Family::A2_3))});
    cases.push_back({Family::S3_3, direct_sum(cat(Family::A2_5), cat(Family::A1_0))});
    cases.push_back({Family::S3_3m, direct_sum(cat(Family::A2_5m), cat(Family::A1_0))});
    cases.push_back({Family::S3_4, direct_sum(cat(Family::A2_6), cat(Family::A1_0))});
    cases.push_back({Family::W3_1, direct_sum(cat(Family::A2_3), cat(Family::A1_0))});
    cases.push_back({Family::W3_4, direct_sum(cat(Family::A1_1), cat(Family::A2_0))});
    cases.push_back({Family::W3_5, direct_sum(cat(Family::A1_0), cat(Family::A2_1))});
    cases.push_back({Family::W3_6, direct_sum(cat(Family::A1_0), cat(Family::A2_2))});
    cases.push_back({Family::W3_7, direct_sum(cat(Family::A1_1), cat(Family::A2_1))});
    cases.push_back({Family::W3_8, direct_sum(cat(Family::A1_1), cat(Family::A2_2))});
    for (const auto& c : cases) {
        CHECK_FALSE(catalog_metadata(c.whole).indecomposable);
        CHECK(classify(c.sum).label == Label::fixed(c.whole));
    }
    // a few entries the source marks indecomposable
    for (Family f : {Family::C3_1, Family::W3_2, Family::W3_9, Family::W3_10, Family::U3_4,
                     Family::S3_1})
        CHECK(catalog_metadata(f).indecomposable);
}

TEST_CASE("separation certificates for same-profile pairs") {
    auto result = [](Family f, FieldMode m = FieldMode::Real) {
        return classify(canonical_table(Label::fixed(f), m));
    };
    CHECK(separating_invariant(result(Family::W3_1), result(Family::W3_4)) ==
          "square_of_square_zero");
    CHECK(separating_invariant(result(Family::W3_1), result(Family::W3_2)) == "commutative");
    CHECK(separating_invariant(result(Family::U3_2), result(Family::U3_3)) ==
          "cubic_root_pattern");
    CHECK(separating_invariant(result(Family::U3_2), result(Family::U3_2m)) ==
          "cubic_root_pattern");
    CHECK(separating_invariant(result(Family::S3_2), result(Family::S3_3)) ==
          "straight_reduction_class");
    CHECK(separating_invariant(result(Family::S3_3), result(Family::S3_3m)) ==
          "straight_reduction_class");
    CHECK(separating_invariant(result(Family::A2_5), result(Family::A2_5m)) ==
          "straight_reduction_class");
    CHECK(separating_invariant(result(Family::A2_5), result(Family::A2_6)) ==
          "straight_reduction_class");
    CHECK(separating_invariant(result(Family::W3_7), result(Family::W3_10)) ==
          "zeropotent_plane");
    CHECK(separating_invariant(result(Family::W3_8), result(Family::W3_9)) ==
          "zeropotent_plane");
}

TEST_CASE("family labels compare by exact parameter square") {
    Label a = Label::with_param(Family::W3_3, Scalar(Rational(3, 2)), FieldMode::Real);
    Label b = Label::with_param(Family::W3_3, Scalar(Rational(-3, 2)), FieldMode::Real);
    Label c = Label::with_param(Family::W3_3, Scalar(2), FieldMode::Real);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a != Label::with_param(Family::W3_3m, Scalar(Rational(3, 2)), FieldMode::Real));
}
