#pragma once

#include <iosfwd>
#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

/// Classification of a trace parameter against the admissible set: the
/// interval [0, q-1] or one of the discrete ladder values lambda_d.
struct TraceParameter {
    enum class Kind { Interval, Ladder, Invalid };
    Rational lambda;
    Kind kind = Kind::Invalid;
    int ladder_d = 0; // meaningful only for Kind::Ladder

    std::string to_string() const;
};

/// The positive functional on the canonical basis: each basis word maps to
/// the product over the cycles of its permutation of lambda^(length - 1),
/// extended linearly.
RationalScalar markov_trace(const HeckeElement& h, const RationalScalar& lambda);

/// Exact Gram matrix G[v][w] = omega_lambda(T_v* T_w) over the
/// rational-function field (real-regime involution).
std::vector<std::vector<RationalScalar>> gram_matrix(int n, const RationalScalar& lambda);

/// Gram matrix specialized at rational lambda and q0; entries exact.
std::vector<std::vector<Rational>> gram_matrix_at(int n, const Rational& lambda,
                                                  const Rational& q0);

/// Exact rank of the specialized Gram matrix.
int gram_rank(int n, const Rational& lambda, const Rational& q0);

/// Sylvester test on the specialized Gram matrix.
bool gram_positive_definite(int n, const Rational& lambda, const Rational& q0);

/// True iff omega_lambda(h* h) = 0 exactly at the given specialization.
bool kernel_membership(const HeckeElement& h, const Rational& lambda, const Rational& q0);

/// Ladder detection up to |d| <= probe_bound, else interval membership.
TraceParameter classify_lambda(const Rational& lambda, const Rational& q0,
                               int probe_bound = 12);

/// CSV export of the specialized Gram matrix, cells as exact "p/q" fractions.
void export_gram_csv(std::ostream& os, int n, const Rational& lambda, const Rational& q0);

} // namespace hecke
