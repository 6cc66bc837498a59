#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/report.hpp"
#include "hecke/tensor_operator.hpp"

namespace hecke {

/// The basic intertwiner on H (x) H:
///   psi_i (x) psi_j -> -mu psi_j (x) psi_i                      (i < j)
///   psi_i (x) psi_i -> -psi_i (x) psi_i
///   psi_i (x) psi_j -> (q-1) psi_i (x) psi_j - mu psi_j (x) psi_i   (i > j)
TensorOperator gq_operator(int d);

/// (1 + g_q)/(q + 1); idempotent, kills psi_i (x) psi_i.
TensorOperator eq_operator(int d);

/// 1^{(i-1)} (x) g_q (x) 1^{(n-i-1)} on the n-th tensor power.
TensorOperator shifted_generator(int d, int n, int i);

/// Product of shifted generators along a positive word (leftmost factor
/// applied last).
TensorOperator epsilon_word_op(int d, int n, const std::vector<int>& word);
/// Same with every letter replaced by q - 1 - g.
TensorOperator epsilon_word_op_dual(int d, int n, const std::vector<int>& word);

/// The model representation on the n-th tensor power, extended linearly
/// from canonical basis words.
TensorOperator epsilon_rep(const HeckeElement& h, int d);
/// The dual symmetry: epsilon after the g -> q-1-g automorphism.
TensorOperator epsilon_rep_dual(const HeckeElement& h, int d);

/// Eigenvalue/multiplicity pairs of the operator specialized at a rational
/// mu0, probing the candidate set {mu0^2, -1} by exact rank; throws
/// NotSupportedSpectrum when multiplicities do not exhaust the dimension.
std::vector<std::pair<Rational, int>> spectrum_at(const TensorOperator& op, const Rational& mu0);

/// Exact dimension of span{ epsilon(T_w) : w } at q = q0 (mu = sqrt(q0)),
/// computed blockwise over Q(sqrt(q0)).
std::int64_t image_algebra_dimension(int n, int d, const Rational& q0);

struct SelfadjointCheck {
    bool selfadjoint = false;
    double max_residual = 0.0;
};

/// Compare e_q with its (conjugate-)transpose; exact at rational mu0.
SelfadjointCheck check_selfadjointness(int d, const Rational& mu0);
SelfadjointCheck check_selfadjointness(int d, std::complex<double> mu0,
                                       double pole_tolerance = 1e-12);

/// At mu0 = e^{i pi / m}: rebuild the sign operator P and the twisted flip T
/// from the displayed adjoint combinations and confirm
/// T = mu * theta + (1 - mu)(1 - P^2) within tolerance.
std::vector<VerificationReport> verify_permutation_recovery(int d, int m,
                                                            double tolerance = 1e-10);
std::vector<VerificationReport> verify_permutation_recovery(int d, std::complex<double> mu0,
                                                            double tolerance = 1e-10);

} // namespace hecke
