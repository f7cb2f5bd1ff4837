#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "vnw/gram_opt.hpp"

using namespace vnw;

namespace {

CVector cvec2(Complex a, Complex b) {
    CVector v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("bracket is the bilinear pairing, not the inner product") {
    CHECK(bracket(cvec2(1, 0), cvec2(0, 1)) == Complex(0));
    const CVector xi = cvec2(Complex(0, 1), 0);
    CHECK(bracket(xi, xi) == Complex(-1));  // i*i, no conjugation

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const CVector x = test::randomComplexVector(rng, 4);
        const CVector y = test::randomComplexVector(rng, 4);
        CHECK(bracket(x, y) == bracket(y, x));
    }
    CHECK_THROWS_AS(bracket(CVector::Zero(2), CVector::Zero(3)),
                    std::invalid_argument);
}

TEST_CASE("the induced operator is nilpotent with the bracket in the corner") {
    const VaropoulosPair p(cvec2(1, 0), cvec2(0, 0.5));
    const CMatrix t = makeVaropoulos(p);
    CHECK(t.rows() == 4);
    CHECK(operatorNorm(t) == doctest::Approx(1.0).epsilon(1e-12));

    const CMatrix t2 = t * t;
    CHECK(std::abs(t2(0, 3) - bracket(p.x, p.y)) <= 1e-15);
    CMatrix t2z = t2;
    t2z(0, 3) = 0;
    CHECK(t2z.cwiseAbs().maxCoeff() == 0.0);
    CHECK((t * t * t).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutation reduces to the bracket identity") {
    std::mt19937_64 rng(5);
    // Symmetric pairs always commute.
    for (int i = 0; i < 10; ++i) {
        const VaropoulosPair p1(test::randomComplexVector(rng, 3));
        const VaropoulosPair p2(test::randomComplexVector(rng, 3));
        CHECK(commuteCheck(p1, p2));
    }

    // Brackets 0 vs 1: not commuting.
    const VaropoulosPair a(cvec2(1, 0), cvec2(0, 1));
    const VaropoulosPair b(cvec2(0, 1), cvec2(0, 1));
    CHECK_FALSE(commuteCheck(a, b));
    // Brackets 1 vs 1: commuting despite distinct pairs.
    const VaropoulosPair a2(cvec2(1, 0), cvec2(1, 1));
    const VaropoulosPair b2(cvec2(0, 1), cvec2(1, 1));
    CHECK(commuteCheck(a2, b2));
    const VaropoulosPair c(cvec2(1, 0), cvec2(1, 0));
    const VaropoulosPair d(cvec2(0, 1), cvec2(1, 0));
    CHECK_FALSE(commuteCheck(c, d));
}

TEST_CASE("commute_check agrees with the dense commutator norm") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const VaropoulosPair p1(test::randomComplexVector(rng, 3),
                                test::randomComplexVector(rng, 3));
        const VaropoulosPair p2(test::randomComplexVector(rng, 3),
                                test::randomComplexVector(rng, 3));
        const CMatrix t1 = makeVaropoulos(p1);
        const CMatrix t2 = makeVaropoulos(p2);
        const double comm = operatorNorm((t1 * t2 - t2 * t1).eval());
        CHECK(commuteCheck(p1, p2) == (comm <= 1e-10));
    }
}

TEST_CASE("realification preserves norms and the symmetric pairing") {
    CVector xr(2);
    xr << Complex(3), Complex(-1);
    const RVector r = realify(xr);
    CHECK(r.size() == 4);
    CHECK(r[0] == 3.0);
    CHECK(r[1] == -1.0);
    CHECK(r[2] == 0.0);
    CHECK(r[3] == 0.0);

    CVector xi(1);
    xi << Complex(0, 1);
    const RVector ri = realify(xi);
    CHECK(ri[0] == 0.0);
    CHECK(ri[1] == 1.0);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const CVector x = test::randomComplexVector(rng, 4);
        const CVector y = test::randomComplexVector(rng, 4);
        CHECK(realify(x).norm() == doctest::Approx(x.norm()).epsilon(1e-14));
        const double rr = realify(x).dot(realify(y));
        CHECK(std::abs(rr - (x.dot(y)).real()) <= 1e-14);
    }
}

TEST_CASE("closed-form quadratic norm on commuting tuples") {
    std::vector<CVector> es = {cvec2(1, 0), cvec2(0, 1)};
    const CommutingTuple t = CommutingTuple::fromVectors(es, true);
    CHECK(t.contractive);
    CHECK(quadNormClosed(SymCoeffMatrix(CMatrix::Identity(2, 2)), t) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quadNormClosed(SymCoeffMatrix(CMatrix::Zero(2, 2)), t) == 0.0);
}

TEST_CASE("closed form matches the dense oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = 2 + static_cast<int>(rng() % 4);
        std::vector<CVector> xs;
        for (int j = 0; j < n; ++j) {
            CVector x = test::randomComplexVector(rng, m);
            xs.push_back(x / std::max(1.0, x.norm()));
        }
        const CommutingTuple t = CommutingTuple::fromVectors(xs, true);
        const SymCoeffMatrix a =
            SymCoeffMatrix::symmetrized(test::randomComplexMatrix(rng, n));
        const PolySpec p = polyFromMatrix(a);
        const double closed = quadNormClosed(a, t);
        const double oracle = operatorNorm(evalPolyOnTuple(p, t.operators()));
        CHECK(std::abs(closed - oracle) <= 1e-10 * std::max(1.0, oracle));
    }
}

TEST_CASE("eval_poly_on_tuple handles degree zero and one") {
    const VaropoulosPair pair(cvec2(1, 0));
    const CMatrix t = makeVaropoulos(pair);
    CVector lin(1);
    lin << Complex(1);
    const PolySpec z1(1, Complex(0), lin, SymCoeffMatrix(CMatrix::Zero(1, 1)));
    CHECK((evalPolyOnTuple(z1, {t}) - t).cwiseAbs().maxCoeff() == 0.0);

    const PolySpec c(1, Complex(2, 1), CVector::Zero(1),
                     SymCoeffMatrix(CMatrix::Zero(1, 1)));
    CHECK((evalPolyOnTuple(c, {t}) - Complex(2, 1) * CMatrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("homogeneous evaluation lands in the corner") {
    std::mt19937_64 rng(13);
    std::vector<CVector> xs = {test::randomComplexVector(rng, 3),
                               test::randomComplexVector(rng, 3)};
    const CommutingTuple t = CommutingTuple::fromVectors(xs, true);
    const PolySpec p = polyFromMatrix(
        SymCoeffMatrix::symmetrized(test::randomComplexMatrix(rng, 2)));
    CMatrix v = evalPolyOnTuple(p, t.operators());
    const Complex corner = v(0, v.cols() - 1);
    v(0, v.cols() - 1) = 0;
    CHECK(v.cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(std::abs(std::abs(corner) - quadNormClosed(p.quad, t)) <= 1e-12);
}

TEST_CASE("operator_norm reference values") {
    CHECK(operatorNorm(CMatrix::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-12));
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = Complex(0, -4);
    CHECK(operatorNorm(d) == doctest::Approx(4.0).epsilon(1e-12));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const VaropoulosPair p(test::randomComplexVector(rng, 4),
                               test::randomComplexVector(rng, 4));
        const double expect = std::max(p.x.norm(), p.y.norm());
        CHECK(std::abs(operatorNorm(makeVaropoulos(p)) - expect) <=
              1e-10 * std::max(1.0, expect));
    }
}

TEST_CASE("vn_ratio reproduces the 1.2 violation witness") {
    const PolySpec vk = polyFromMatrix(SymCoeffMatrix(test::vkMatrix()));
    const GramWitness w = gramMax(test::vkMatrix().real());
    std::vector<CVector> xs;
    for (const auto& x : w.vectors) xs.push_back(x.cast<Complex>());
    const RatioReport r = vnRatio(vk, CommutingTuple::fromVectors(xs, true));
    CHECK(r.operator_value == doctest::Approx(6.0).epsilon(1e-7));
    CHECK(r.sup.value == doctest::Approx(5.0).epsilon(1e-7));
    CHECK(r.ratio >= 1.2 - 1e-6);
    CHECK(r.method == "closed_form");
}

TEST_CASE("vn_ratio never exceeds one for a single variable") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 10; ++i) {
        CVector x = test::randomComplexVector(rng, 3);
        x /= std::max(1.0, x.norm());
        CVector lin(1);
        lin << Complex(0.4, -0.2);
        CMatrix q(1, 1);
        q << Complex(0.8, 0.3);
        const PolySpec p(1, Complex(0.1), lin, SymCoeffMatrix(q));
        const RatioReport r = vnRatio(p, CommutingTuple::fromVectors({x}, true));
        CHECK(r.ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("vn_ratio rejects non-contractive tuples") {
    CVector big = cvec2(2, 0);
    const PolySpec p = polyFromMatrix(SymCoeffMatrix(CMatrix::Identity(1, 1)));
    CHECK_THROWS_AS(vnRatio(p, CommutingTuple::fromVectors({big}, true)),
                    std::invalid_argument);
}

TEST_CASE("unit tuples stay contractive through the operator") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        CVector x = test::randomComplexVector(rng, 4);
        x /= x.norm();
        CHECK(operatorNorm(makeVaropoulos(VaropoulosPair(x))) <= 1.0 + 1e-10);
    }
}
