#include <doctest.h>

#include "alg3/ext_scalar.hpp"
#include "alg3/prng.hpp"

using namespace alg3;

namespace {

ExtScalar root2() { return ExtScalar::radical(Scalar(2)); }
ExtScalar root3() { return ExtScalar::radical(Scalar(3)); }

}  // namespace

TEST_CASE("square roots of scalars") {
    CHECK(scalar_sqrt(Scalar(4), FieldMode::Real) == ExtScalar(2));
    CHECK(scalar_sqrt(Scalar(2), FieldMode::Real).depth() == 1);
    CHECK(scalar_sqrt(Scalar(-1), FieldMode::Complex) == ExtScalar(Scalar(0, 1)));
    CHECK_THROWS_AS(scalar_sqrt(Scalar(-1), FieldMode::Real), NegativeRadicand);
    CHECK_THROWS_AS(scalar_sqrt(Scalar(0, 1), FieldMode::Real), ModeMismatch);
    SplitMix64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        Scalar x(Rational(rng.range(-30, 30), rng.range(1, 9)),
                 Rational(rng.range(-30, 30), rng.range(1, 9)));
        ExtScalar r = scalar_sqrt(x, FieldMode::Complex);
        CHECK(r * r == ExtScalar(x));
    }
}

TEST_CASE("conjugate products and inverses") {
    ExtScalar s = root2();
    CHECK((ExtScalar(1) + s) * (ExtScalar(1) - s) == ExtScalar(-1));
    CHECK(s.inverse() == ExtScalar(Scalar(Rational(1, 2))) * s);
    CHECK(s * s == ExtScalar(2));
    CHECK(ExtScalar::radical(Scalar(4)) == ExtScalar(2));  // simplifies before compare
    CHECK_THROWS_AS(ExtScalar(0).inverse(), DivisionByZero);
}

TEST_CASE("radicand folding and merging") {
    // sqrt(8) = 2 sqrt(2)
    ExtScalar s8 = ExtScalar::radical(Scalar(8));
    CHECK(s8 == ExtScalar(2) * root2());
    // sqrt(2) * sqrt(3) = sqrt(6) inside the joint tower
    CHECK(root2() * root3() == ExtScalar::radical(Scalar(6)));
    ExtScalar t = root2() + root3();
    CHECK(t * t == ExtScalar(5) + ExtScalar(2) * ExtScalar::radical(Scalar(6)));
    // depth-2 inverse multiplies back to one
    ExtScalar u = ExtScalar(1) + root2() + root3();
    CHECK(u * u.inverse() == ExtScalar(1));
    CHECK(u.depth() == 2);
}

TEST_CASE("tower depth cap") {
    ExtScalar u = root2() + root3();
    CHECK_THROWS_AS(u + ExtScalar::radical(Scalar(5)), UnsupportedTower);
}

TEST_CASE("numeric agreement at high precision") {
    SplitMix64 rng(22);
    mpf_class bound(1, 256);
    bound = bound / (Int(1) << 120);  // far below 1e-30
    for (int i = 0; i < 100; ++i) {
        // random depth-1 elements over one positive non-square radicand
        long rads[] = {2, 3, 5, 7, 10};
        Scalar rad(rads[rng.below(5)]);
        auto coef = [&]() { return Scalar(Rational(rng.range(-9, 9), rng.range(1, 7))); };
        ExtScalar x = ExtScalar(coef()) + ExtScalar(coef()) * ExtScalar::radical(rad);
        ExtScalar y = ExtScalar(coef()) + ExtScalar(coef()) * ExtScalar::radical(rad);
        ExtScalar z = x * y + x - y * y;
        auto [zre, zim] = z.evaluate();
        auto [xre, xim] = x.evaluate();
        auto [yre, yim] = y.evaluate();
        // recompute with floats only
        mpf_class fre = xre * yre - xim * yim + xre - (yre * yre - yim * yim);
        mpf_class fim = xre * yim + xim * yre + xim - (yre * yim + yim * yre);
        mpf_class dre = zre - fre, dim = zim - fim;
        CHECK(abs(dre) < bound);
        CHECK(abs(dim) < bound);
    }
}

TEST_CASE("evaluation matches rational arithmetic") {
    ExtScalar x = (ExtScalar(1) + root2()) * (ExtScalar(1) - root2());
    auto [re, im] = x.evaluate();
    CHECK(re == -1);
    CHECK(im == 0);
}
