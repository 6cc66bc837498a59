#pragma once

#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/report.hpp"

namespace hecke {

/// The recursive (anti)symmetrizer A_k placed in the order-n algebra,
/// n >= |k|.  A_1 = A_{-1} = 1; positive levels prepend the coset prefixes
/// g_i ... g_1 with coefficient 1, negative levels with coefficient
/// (-q^{-1})^i.
HeckeElement build_a(int k, int order);

/// Right-handed recursion B_{n+1} = sigma(B_n)(1 + g_1 + g_1 g_2 + ...);
/// equals build_a(n, n).
HeckeElement build_b(int n);

/// Idempotent normalization E_k = A_k / |k|!_q (or |k|!_{1/q} for k < 0).
HeckeElement build_idempotent(int k, int order);

/// Structural checks of the absorption, product and centrality identities
/// for A_{+-n} and E_{+-n} at order n.
std::vector<VerificationReport> verify_lemma_2_1(int n);

/// Numeric nilpotency at mu0 = e^{i pi / m} (so q = e^{2 pi i / m}):
/// for q^n = 1 both A_n* A_n and A_n^2 vanish within tolerance.
/// Precondition n = 0 mod m is reported as skipped when violated.
std::vector<VerificationReport> verify_nilpotency_at_root_of_unity(int n, int m,
                                                                   double tolerance = 1e-10);

} // namespace hecke
