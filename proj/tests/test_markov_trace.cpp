#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hecke/markov_trace.hpp"
#include "hecke/special_elements.hpp"
#include "hecke/young.hpp"

using namespace hecke;

namespace {

HeckeElement random_element(int n, std::mt19937& rng, int terms = 3) {
    const WordTable& table = word_table(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(table.permutations.size()) - 1);
    std::uniform_int_distribution<int> coeff(1, 3);
    HeckeElement h(n);
    for (int t = 0; t < terms; ++t)
        h.add_term(table.permutations[static_cast<size_t>(pick(rng))],
                   RationalScalar(coeff(rng)));
    return h;
}

const RationalScalar lambda_sym = RationalScalar::mu() + RationalScalar(2); // generic symbol

} // namespace

TEST_CASE("cycle-product rule") {
    CHECK(markov_trace(HeckeElement::unit(3), lambda_sym) == RationalScalar::one());
    CHECK(markov_trace(HeckeElement::generator(2, 1), lambda_sym) == lambda_sym);
    // g_1 g_2 covers a three-cycle
    HeckeElement g1g2 =
        multiply(HeckeElement::generator(3, 1), HeckeElement::generator(3, 2));
    CHECK(markov_trace(g1g2, lambda_sym) == lambda_sym * lambda_sym);
}

TEST_CASE("markov extension property") {
    std::mt19937 rng(21);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 5; ++t) {
            HeckeElement h = random_element(n, rng);
            HeckeElement extended = h.embed(n + 1).right_mul_generator(n);
            CHECK(markov_trace(extended, lambda_sym) ==
                  lambda_sym * markov_trace(h, lambda_sym));
        }
}

TEST_CASE("order-two Gram matrix") {
    auto g = gram_matrix(2, lambda_sym);
    REQUIRE(g.size() == 2);
    // basis order: identity then the transposition
    CHECK(g[0][0] == RationalScalar::one());
    CHECK(g[0][1] == lambda_sym);
    CHECK(g[1][0] == lambda_sym);
    CHECK(g[1][1] == (RationalScalar::q() - RationalScalar::one()) * lambda_sym +
                         RationalScalar::q());
}

TEST_CASE("Gram symmetry") {
    auto g = gram_matrix(3, lambda_sym);
    for (size_t v = 0; v < g.size(); ++v)
        for (size_t w = 0; w < g.size(); ++w) CHECK(g[v][w] == g[w][v]);
    // and the specialized matrix agrees with the symbolic one at mu = 2
    auto gs = gram_matrix_at(3, Rational(7), Rational(4));
    RationalScalar lambda7 = RationalScalar(7);
    auto gsym = gram_matrix(3, lambda7);
    for (size_t v = 0; v < gs.size(); ++v)
        for (size_t w = 0; w < gs.size(); ++w)
            CHECK(gs[v][w] == gsym[v][w].eval_rational(2));
}

TEST_CASE("Gram ranks on the ladder") {
    const Rational q0(2);
    Rational ladder2 = lambda_ladder(-2).eval_sqrt_q(q0).as_rational();
    CHECK(ladder2 == Rational(-1, 3));
    CHECK(gram_rank(3, ladder2, q0) == 5);
    CHECK(gram_rank(4, ladder2, q0) == 14);
    // determinant vanishes iff the rank drops
    CHECK(gram_rank(3, Rational(1, 2), q0) == 6);

    Rational ladder3 = lambda_ladder(-3).eval_sqrt_q(q0).as_rational();
    CHECK(ladder3 == Rational(-1, 7));
    for (int n = 2; n <= 4; ++n)
        CHECK(gram_rank(n, ladder3, q0) == predicted_image_dim(n, 3));
}

TEST_CASE("positive definiteness on the faithful branch") {
    for (int n = 2; n <= 4; ++n) CHECK(gram_positive_definite(n, Rational(1, 2), Rational(2)));
    CHECK(!gram_positive_definite(3, lambda_ladder(-2).eval_sqrt_q(2).as_rational(),
                                  Rational(2)));
}

TEST_CASE("kernel membership") {
    const Rational q0(2);
    Rational ladder2 = lambda_ladder(-2).eval_sqrt_q(q0).as_rational();
    CHECK(kernel_membership(build_a(3, 3), ladder2, q0));
    CHECK(!kernel_membership(HeckeElement::generator(2, 1), ladder2, q0));
    CHECK(!kernel_membership(build_a(3, 3), Rational(1, 2), q0));
}

TEST_CASE("parameter classification") {
    TraceParameter ladder = classify_lambda(Rational(-1, 3), Rational(2), 8);
    CHECK(ladder.kind == TraceParameter::Kind::Ladder);
    CHECK(ladder.ladder_d == -2);

    TraceParameter interval = classify_lambda(Rational(1, 2), Rational(2), 8);
    CHECK(interval.kind == TraceParameter::Kind::Interval);

    TraceParameter invalid = classify_lambda(Rational(-5), Rational(2), 8);
    CHECK(invalid.kind == TraceParameter::Kind::Invalid);

    // the positive ladder values sit above the interval
    TraceParameter top = classify_lambda(Rational(4), Rational(2), 8);
    CHECK(top.kind == TraceParameter::Kind::Ladder);
    CHECK(top.ladder_d == 1);
}

TEST_CASE("exact CSV export") {
    std::ostringstream os;
    export_gram_csv(os, 2, Rational(-1, 3), Rational(2));
    CHECK(os.str() == "1/1,-1/3\n-1/3,5/3\n");
}
