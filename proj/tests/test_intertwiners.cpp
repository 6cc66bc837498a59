#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/intertwiners.hpp"
#include "hecke/markov_trace.hpp"

using namespace hecke;

namespace {

const RationalScalar one = RationalScalar::one();
const RationalScalar mu = RationalScalar::mu();

void check_all(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        INFO(r.check_id, " ", r.params_string(), " :: ", r.witness);
        CHECK(r.status == VerificationReport::Status::pass);
    }
}

TensorOperator random_operator(int d, int n, std::mt19937& rng, int entries = 5) {
    TensorOperator out(d, n, n);
    std::uniform_int_distribution<MIndex> pick(0, mindex_pow(d, n) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < entries; ++t)
        out.add_entry(pick(rng), pick(rng), RationalScalar(coeff(rng)));
    return out;
}

} // namespace

TEST_CASE("index sets") {
    IndexSet idx(3, {1, 3});
    CHECK(idx.n() == 2);
    CHECK(idx.to_string() == "(1,3)");
    CHECK(!idx.is_full());
    CHECK(IndexSet::full(3).is_full());
    CHECK_THROWS_AS(IndexSet(3, {3, 1}), ShapeMismatch);
    CHECK_THROWS_AS(IndexSet(3, {0, 1}), ShapeMismatch);
    CHECK(all_index_sets(4, 2).size() == 6);
}

TEST_CASE("quantum determinant") {
    TensorVector s = quantum_determinant(IndexSet::full(2));
    CHECK(s.entry(mindex_encode({0, 1}, 2)) == one);
    CHECK(s.entry(mindex_encode({1, 0}, 2)) == -mu);
    CHECK(s.entries().size() == 2);

    TensorVector single = quantum_determinant(IndexSet(3, {2}));
    CHECK(single.entries().size() == 1);
    CHECK(single.entry(1) == one);

    // squared norm is the quantum factorial
    for (int d = 1; d <= 4; ++d)
        CHECK(quantum_determinant(IndexSet::full(d)).norm_squared() == q_factorial(d));
    for (const auto& idx : all_index_sets(4, 2))
        CHECK(quantum_determinant(idx).norm_squared() == q_factorial(2));
}

TEST_CASE("contractions") {
    TensorVector s = quantum_determinant(IndexSet::full(2));
    // full contraction: the 1x1 operator with value 2!_q
    TensorOperator full = contract_vv(s, 0, s, 0);
    CHECK(full.row_pow() == 0);
    CHECK(full.entry(0, 0) == q_factorial(2));

    // one-step contraction gives -mu on H
    TensorOperator step = contract_vv(s, 1, s, 1);
    CHECK(step == TensorOperator::identity(2, 1) * (-mu));

    CHECK_THROWS_AS(contract_vv(s, 0, s, 1), ShapeMismatch);
}

TEST_CASE("left inverse on the basic intertwiner") {
    for (int d = 2; d <= 3; ++d) {
        TensorOperator phi = left_inverse_apply(IndexSet::full(d), gq_operator(d));
        CHECK(phi == TensorOperator::identity(d, 1) * lambda_ladder(-d));
        // unitality
        TensorOperator unit = left_inverse_apply(IndexSet::full(d),
                                                 TensorOperator::identity(d, 2));
        CHECK(unit == TensorOperator::identity(d, 1));
    }
    // a proper index set reaching the last basis vector stays diagonal and
    // invertible
    IndexSet idx(3, {1, 3});
    TensorOperator phi = left_inverse_apply(idx, gq_operator(3));
    for (const auto& [c, col] : phi.columns())
        for (const auto& [r, v] : col) CHECK(r == c);
    for (MIndex i = 0; i < 3; ++i) CHECK(!phi.entry(i, i).is_zero());
}

TEST_CASE("left inverse bimodule law") {
    std::mt19937 rng(41);
    for (int d = 2; d <= 3; ++d)
        for (const auto& idx : all_index_sets(d, d == 2 ? 2 : 2)) {
            for (int r = 2; r <= 3; ++r) {
                TensorOperator x = random_operator(d, r, rng);
                TensorOperator t = random_operator(d, r - 1, rng);
                TensorOperator lhs =
                    left_inverse_apply(idx, compose(x, pad_operator(t, 1, 0)));
                TensorOperator rhs = compose(left_inverse_apply(idx, x), t);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("eigenrelations and contraction identities") {
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= d; ++n)
            for (const auto& idx : all_index_sets(d, n)) {
                check_all(verify_lemma_5_1(idx));
                check_all(verify_lemma_5_4(idx));
            }
}

TEST_CASE("gap-block values for a split index pair") {
    // idx = (1,3) inside dimension 3: the contraction is -1 on the pair
    // block and (q - 1) on the middle gap
    IndexSet idx(3, {1, 3});
    TensorVector s = quantum_determinant(idx);
    TensorOperator eye1 = TensorOperator::identity(3, 1);
    TensorOperator lhs =
        compose(compose(tensor(s.as_row(), eye1), pad_operator(gq_operator(3), 1, 0)),
                tensor(s.as_column(), eye1));
    CHECK(lhs.entry(0, 0) == RationalScalar(-1));
    CHECK(lhs.entry(2, 2) == RationalScalar(-1));
    CHECK(lhs.entry(1, 1) == RationalScalar::q() - one);
}

TEST_CASE("completeness") {
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= d + 1; ++n) check_all(verify_completeness(d, n));
}

TEST_CASE("conjugate equations cleared") {
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= d; ++n)
            for (const auto& idx : all_index_sets(d, n)) {
                check_all(verify_conjugate_equations(idx));
                check_all(verify_conjugate_equations_numeric(idx, Rational(3, 2), 1e-12));
            }
}

TEST_CASE("intermediate cuts") {
    check_all(verify_lemma_5_6(2, 1));
    check_all(verify_lemma_5_6(3, 1));
    check_all(verify_lemma_5_6(3, 2));
    CHECK_THROWS_AS(verify_lemma_5_6(3, 3), ShapeMismatch);
}

TEST_CASE("block exchange and its negative control") {
    for (int d = 2; d <= 3; ++d) check_all(verify_braided_relation(d, Rational(2)));
    for (int d = 2; d <= 3; ++d) check_all(verify_braided_closure(d, d));
}

TEST_CASE("trace oracle against iterated left inverses") {
    for (int d = 2; d <= 3; ++d) {
        const RationalScalar ladder = lambda_ladder(-d);
        const IndexSet full = IndexSet::full(d);
        for (int n = 2; n <= 3; ++n)
            for (const auto& p : word_table(n).permutations) {
                TensorOperator op = epsilon_rep(HeckeElement::basis(p), d);
                for (int r = n; r >= 1; --r) op = left_inverse_apply(full, op);
                CHECK(op.entry(0, 0) == markov_trace(HeckeElement::basis(p), ladder));
            }
    }
}

TEST_CASE("special object checker") {
    for (int d = 2; d <= 3; ++d) {
        TensorVector s = quantum_determinant(IndexSet::full(d));
        SpecialObjectWitness good = special_object_check(s, d);
        CHECK(good.accepted);
        REQUIRE(good.left_inverse_value.has_value());
        CHECK(*good.left_inverse_value == lambda_ladder(-d));

        SpecialObjectWitness scaled = special_object_check(s * RationalScalar(2), d);
        CHECK(!scaled.accepted);
        bool norm_failed = false, exchange_passed = false;
        for (const auto& r : scaled.checks) {
            if (r.check_id == "special-object-6.1")
                norm_failed = r.status == VerificationReport::Status::fail;
            if (r.check_id == "special-object-6.4")
                exchange_passed = r.status == VerificationReport::Status::pass;
        }
        CHECK(norm_failed);
        CHECK(exchange_passed);
    }

    // a bare basis tensor fails the support condition
    TensorVector basis(2, 2);
    basis.add_entry(mindex_encode({0, 1}, 2), one);
    SpecialObjectWitness flat = special_object_check(basis, 2);
    CHECK(!flat.accepted);
    bool support_failed = false;
    for (const auto& r : flat.checks)
        if (r.check_id == "special-object-6.3")
            support_failed = r.status == VerificationReport::Status::fail;
    CHECK(support_failed);
}
