// Acceptance suite: one pass/fail line per criterion, exact tolerances
// pinned in code.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hecke/intertwiners.hpp"
#include "hecke/jw_model.hpp"
#include "hecke/markov_trace.hpp"
#include "hecke/special_elements.hpp"
#include "hecke/suites.hpp"
#include "hecke/young.hpp"

using namespace hecke;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
    void merge(const std::vector<VerificationReport>& reports) {
        for (const auto& r : reports)
            require(r.status != VerificationReport::Status::fail,
                    r.check_id + " " + r.params_string() + ": " + r.witness);
    }
};

int failures = 0;

void run(int number, const std::string& label, double budget_seconds,
         const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion-%02d %s  %-58s (%.2f s, budget %.0f s)\n", number,
                outcome.ok ? "PASS" : "FAIL", label.c_str(), elapsed, budget_seconds);
    if (!outcome.ok) {
        std::printf("             -> %s\n", outcome.detail.c_str());
        ++failures;
    }
}

} // namespace

int main() {
    const Rational q0(2);
    const RationalScalar qs = RationalScalar::q();
    const RationalScalar one = RationalScalar::one();

    run(1, "presentation relations, n <= 6", 5, [&](Outcome& out) {
        for (int n = 2; n <= 6; ++n) {
            for (int i = 1; i < n; ++i) {
                HeckeElement g = HeckeElement::generator(n, i);
                out.require(multiply(g, g) ==
                                g * (qs - one) + HeckeElement::unit(n) * qs,
                            "quadratic relation failed at n=" + std::to_string(n));
            }
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j) {
                    HeckeElement gi = HeckeElement::generator(n, i);
                    HeckeElement gj = HeckeElement::generator(n, j);
                    out.require(multiply(gi, gj) == multiply(gj, gi),
                                "distant generators failed to commute");
                }
            for (int i = 1; i + 1 < n; ++i) {
                HeckeElement gi = HeckeElement::generator(n, i);
                HeckeElement gj = HeckeElement::generator(n, i + 1);
                out.require(multiply(gi, multiply(gj, gi)) ==
                                multiply(gj, multiply(gi, gj)),
                            "braid relation failed at n=" + std::to_string(n));
            }
        }
    });

    run(2, "absorption/product/centrality identities, 2 <= n <= 5", 30, [&](Outcome& out) {
        for (int n = 2; n <= 5; ++n) out.merge(verify_lemma_2_1(n));
    });

    run(3, "right-handed recursion equals the left-handed one, n <= 5", 10,
        [&](Outcome& out) {
            for (int n = 1; n <= 5; ++n)
                out.require(build_b(n) == build_a(n, n),
                            "recursions disagree at n=" + std::to_string(n));
        });

    run(4, "duality sends A_k to q^{k(k-1)/2} A_{-k}, k <= 5", 10, [&](Outcome& out) {
        for (int k = 2; k <= 5; ++k)
            out.require(build_a(k, k).alpha_dual() ==
                            build_a(-k, k) * RationalScalar::q(k * (k - 1) / 2),
                        "duality image failed at k=" + std::to_string(k));
    });

    run(5, "numeric nilpotency at mu0 = e^{i pi/m}, m in {3,4,5,6}", 5, [&](Outcome& out) {
        for (int m : {3, 4, 5, 6}) out.merge(verify_nilpotency_at_root_of_unity(m, m, 1e-10));
    });

    run(6, "model kernel boundary, d in {1,2,3}, ambient n <= 5", 30, [&](Outcome& out) {
        for (int d = 1; d <= 3; ++d)
            for (int n = d + 1; n <= 5; ++n) {
                out.require(epsilon_rep(build_a(d + 1, n), d).is_zero(),
                            "antisymmetrizer above the dimension survived");
                out.require(!epsilon_rep(build_a(d, n), d).is_zero(),
                            "antisymmetrizer at the dimension vanished");
            }
    });

    run(7, "image algebra dimensions at q0 = 2 match diagram counts", 60, [&](Outcome& out) {
        for (int d = 2; d <= 3; ++d)
            for (int n = 2; n <= 5; ++n)
                out.require(image_algebra_dimension(n, d, q0) == predicted_image_dim(n, d),
                            "dimension mismatch at n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
        out.require(image_algebra_dimension(3, 2, q0) == 5, "expected 5 at (3,2)");
        out.require(image_algebra_dimension(4, 2, q0) == 14, "expected 14 at (4,2)");
        out.require(image_algebra_dimension(4, 3, q0) == 23, "expected 23 at (4,3)");
        out.require(image_algebra_dimension(4, 4, q0) == 24, "expected 24 at (4,4)");
    });

    run(8, "trace oracle, Gram ranks and positivity at q0 = 2", 60, [&](Outcome& out) {
        for (int d = 2; d <= 3; ++d) {
            const RationalScalar ladder = lambda_ladder(-d);
            const IndexSet full = IndexSet::full(d);
            for (int n = 2; n <= 4; ++n)
                for (const auto& p : word_table(n).permutations) {
                    TensorOperator op = epsilon_rep(HeckeElement::basis(p), d);
                    for (int r = n; r >= 1; --r) op = left_inverse_apply(full, op);
                    bool ok = op.entry(0, 0) == markov_trace(HeckeElement::basis(p), ladder);
                    out.require(ok, "iterated left inverse disagrees with the trace at " +
                                        p.to_string());
                }
            Rational ladder_q = lambda_ladder(-d).eval_sqrt_q(q0).as_rational();
            for (int n = 2; n <= 5; ++n)
                out.require(gram_rank(n, ladder_q, q0) == predicted_image_dim(n, d),
                            "Gram rank off at n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
        }
        for (int n = 2; n <= 4; ++n)
            out.require(gram_positive_definite(n, Rational(1, 2), q0),
                        "Gram matrix not positive definite at lambda = 1/2");
    });

    run(9, "selfadjointness and the permutation-operator identities", 5, [&](Outcome& out) {
        for (int d = 2; d <= 3; ++d) {
            out.require(check_selfadjointness(d, Rational(3, 2)).selfadjoint,
                        "not selfadjoint at mu0 = 3/2");
            out.require(check_selfadjointness(d, Rational(2)).selfadjoint,
                        "not selfadjoint at mu0 = 2");
            auto bad = check_selfadjointness(d, std::polar(1.0, M_PI / 5));
            out.require(!bad.selfadjoint && bad.max_residual > 1e-2,
                        "unit-circle point wrongly selfadjoint");
        }
        for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}})
            out.merge(verify_permutation_recovery(d, m, 1e-10));
    });

    run(10, "determinant contraction identities, d <= 3 all idx, d = 4 full", 90,
        [&](Outcome& out) {
            for (int d = 2; d <= 3; ++d) {
                for (int n = 1; n <= d; ++n)
                    for (const auto& idx : all_index_sets(d, n)) {
                        out.merge(verify_lemma_5_1(idx));
                        out.merge(verify_lemma_5_4(idx));
                    }
                for (int n = 1; n <= d + 1; ++n) out.merge(verify_completeness(d, n));
                for (int k = 1; k < d; ++k) out.merge(verify_lemma_5_6(d, k));
            }
            out.merge(verify_lemma_5_1(IndexSet::full(4)));
            out.merge(verify_lemma_5_4(IndexSet::full(4)));
            out.merge(verify_completeness(4, 4));
            for (int k = 1; k < 4; ++k) out.merge(verify_lemma_5_6(4, k));
            for (int d = 1; d <= 4; ++d)
                out.require(quantum_determinant(IndexSet::full(d)).norm_squared() ==
                                q_factorial(d),
                            "squared norm differs from the quantum factorial");
        });

    run(11, "conjugate equations cleared, plus floating roots at mu0 = 3/2", 30,
        [&](Outcome& out) {
            for (int d = 2; d <= 3; ++d)
                for (int n = 1; n <= d; ++n)
                    for (const auto& idx : all_index_sets(d, n)) {
                        out.merge(verify_conjugate_equations(idx));
                        out.merge(
                            verify_conjugate_equations_numeric(idx, Rational(3, 2), 1e-12));
                    }
        });

    run(12, "block exchange and its negative control, d in {2,3,4}", 30, [&](Outcome& out) {
        for (int d = 2; d <= 4; ++d) out.merge(verify_braided_relation(d, q0));
    });

    run(13, "special-object checker accepts S and rejects corrupted candidates", 10,
        [&](Outcome& out) {
            for (int d = 2; d <= 3; ++d) {
                TensorVector s = quantum_determinant(IndexSet::full(d));
                SpecialObjectWitness good = special_object_check(s, d);
                out.require(good.accepted, "determinant rejected at d=" + std::to_string(d));
                out.require(good.left_inverse_value.has_value() &&
                                *good.left_inverse_value == lambda_ladder(-d),
                            "left inverse value differs from the ladder");

                auto status_of = [](const SpecialObjectWitness& w, const std::string& id) {
                    for (const auto& r : w.checks)
                        if (r.check_id == id) return r.status;
                    return VerificationReport::Status::skipped;
                };
                SpecialObjectWitness scaled = special_object_check(s * RationalScalar(2), d);
                out.require(!scaled.accepted && status_of(scaled, "special-object-6.1") ==
                                                    VerificationReport::Status::fail,
                            "scaled candidate not rejected by the norm condition");
                out.require(status_of(scaled, "special-object-6.4") ==
                                VerificationReport::Status::pass,
                            "homogeneous exchange condition should still hold");

                TensorVector basis(d, d);
                std::vector<int> digits(static_cast<size_t>(d));
                for (int k = 0; k < d; ++k) digits[static_cast<size_t>(k)] = k;
                basis.add_entry(mindex_encode(digits, d), RationalScalar::one());
                SpecialObjectWitness flat = special_object_check(basis, d);
                out.require(!flat.accepted && status_of(flat, "special-object-6.3") ==
                                                  VerificationReport::Status::fail,
                            "basis candidate not rejected by the support condition");
            }
        });

    if (failures == 0) std::printf("acceptance: all 13 criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
