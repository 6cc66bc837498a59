#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/rational_scalar.hpp"
#include "hecke/serialization.hpp"

using namespace hecke;

namespace {

RationalScalar poly_of(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return RationalScalar(std::move(p), LaurentPoly::one());
}

RationalScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 3);
    LaurentPoly num, den;
    for (int t = nterms(rng); t > 0; --t) num.add_term(expo(rng), coeff(rng));
    den.add_term(0, 1);
    if (coeff(rng) > 0) den.add_term(2, coeff(rng)); // keep the denominator nonzero
    return RationalScalar(std::move(num), std::move(den));
}

} // namespace

TEST_CASE("q-integers") {
    CHECK(q_integer(1) == RationalScalar::one());
    CHECK(q_integer(2) == poly_of({{0, 1}, {2, 1}}));
    CHECK(q_integer(3) == poly_of({{0, 1}, {2, 1}, {4, 1}}));
    CHECK_THROWS_AS(q_integer(0), Error);
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(1) == RationalScalar::one());
    CHECK(q_factorial(2) == poly_of({{0, 1}, {2, 1}}));
    CHECK(q_factorial(3) == poly_of({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK_THROWS_AS(q_factorial(0), Error);
    for (int n = 2; n <= 12; ++n)
        CHECK(q_factorial(n) == q_integer(n) * q_factorial(n - 1));
}

TEST_CASE("ladder values") {
    CHECK(lambda_ladder(1) == RationalScalar::q());
    CHECK(lambda_ladder(-1) == RationalScalar(-1));
    CHECK(lambda_ladder(-2) == RationalScalar(-1) * q_integer(2).inverse());
    CHECK_THROWS_AS(lambda_ladder(0), Error);
    for (int d = -8; d <= 8; ++d) {
        if (d == 0) continue;
        RationalScalar qd = RationalScalar::q(d);
        CHECK(lambda_ladder(d) * (qd - RationalScalar::one()) ==
              qd * (RationalScalar::q() - RationalScalar::one()));
    }
}

TEST_CASE("rational evaluation") {
    CHECK(q_factorial(3).eval_rational(1) == 6);
    CHECK(lambda_ladder(-2).eval_rational(1) == Rational(-1, 2));
    RationalScalar pole = (RationalScalar::q() - RationalScalar::one()).inverse();
    CHECK_THROWS_AS(pole.eval_rational(1), PoleAtPoint);
}

TEST_CASE("complex evaluation") {
    const std::complex<double> mu0 = std::polar(1.0, M_PI / 4);
    auto q_val = RationalScalar::q().eval_complex(mu0);
    CHECK(std::abs(q_val - std::complex<double>(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(q_integer(4).eval_complex(mu0)) < 1e-14);
    CHECK(std::abs(RationalScalar::mu().eval_complex(1.0) - 1.0) < 1e-14);
}

TEST_CASE("scalar conjugation") {
    RationalScalar q2 = RationalScalar::q();
    CHECK(q2.conjugate(StarMode::RealRegime) == q2);
    CHECK(q2.conjugate(StarMode::UnitCircleRegime) == RationalScalar::q(-1));
    RationalScalar s = RationalScalar::one() + RationalScalar::q();
    CHECK(s.conjugate(StarMode::UnitCircleRegime) ==
          RationalScalar::one() + RationalScalar::q(-1));

    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        RationalScalar a = random_scalar(rng), b = random_scalar(rng);
        for (StarMode mode : {StarMode::RealRegime, StarMode::UnitCircleRegime}) {
            CHECK(a.conjugate(mode).conjugate(mode) == a);
            CHECK((a * b).conjugate(mode) == a.conjugate(mode) * b.conjugate(mode));
        }
    }
}

TEST_CASE("ring axioms on canonical forms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        RationalScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("evaluation is a homomorphism") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pts(2, 5);
    for (int t = 0; t < 25; ++t) {
        RationalScalar a = random_scalar(rng), b = random_scalar(rng);
        Rational mu0(pts(rng), 2);
        try {
            Rational av = a.eval_rational(mu0), bv = b.eval_rational(mu0);
            CHECK((a * b).eval_rational(mu0) == av * bv);
            CHECK((a + b).eval_rational(mu0) == av + bv);
        } catch (const PoleAtPoint&) {
            // the random denominator happened to vanish there; nothing to check
        }
    }
}

TEST_CASE("canonical forms reduce") {
    RationalScalar q = RationalScalar::q();
    RationalScalar one = RationalScalar::one();
    CHECK((q + one) / (q + one) == one);
    CHECK((q * q - one) / (q - one) == q + one);
    // denominator normalized: lowest exponent zero, lowest coefficient one
    RationalScalar s = RationalScalar::mu(-3) / (RationalScalar::mu(2) * RationalScalar(3));
    CHECK(s.den() == LaurentPoly::one());
    CHECK(s == RationalScalar::mu(-5) * RationalScalar(Rational(1, 3)));
}

TEST_CASE("quadratic extension evaluation") {
    QuadExt root2 = RationalScalar::mu().eval_sqrt_q(2);
    CHECK(root2.rational_part() == 0);
    CHECK(root2.root_part() == 1);
    CHECK(RationalScalar::q().eval_sqrt_q(2).as_rational() == 2);
    // perfect square base folds to a rational
    CHECK(RationalScalar::mu().eval_sqrt_q(4).as_rational() == 2);
    QuadExt x(Rational(1), Rational(2), Rational(2)); // 1 + 2 sqrt(2)
    QuadExt prod = x * x.inverse();
    CHECK(prod.as_rational() == 1);
    CHECK_THROWS_AS(QuadExt().inverse(), PoleAtPoint);
    // pole detection
    RationalScalar pole = (RationalScalar::q() - RationalScalar(2)).inverse();
    CHECK_THROWS_AS(pole.eval_sqrt_q(2), PoleAtPoint);
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        RationalScalar s = random_scalar(rng);
        Json j = scalar_to_json(s);
        CHECK(scalar_from_json(j) == s);
        // exponent-ascending triples
        int last = -1000;
        for (const auto& triple : j.at("num")) {
            CHECK(triple.at(0).get<int>() > last);
            last = triple.at(0).get<int>();
        }
    }
    RationalScalar big(Rational(mpz_class("123456789012345678901234567890"), mpz_class(7)));
    CHECK(scalar_from_json(scalar_to_json(big)) == big);
}
