#pragma once

#include <array>

#include "wallach/decomp.hpp"

namespace wallach {

/// [ijk] = sum over the orthonormal bases of p_i, p_j, p_k of
/// <[e_i^a, e_j^b], e_k^c>^2. Nonnegative; symmetric in the indices; zero when
/// two indices coincide. Parallel over the outer index with per-slot
/// compensated partials reduced in fixed order, so results match
/// triple_sum_serial to the last bit for any thread count.
double triple_sum(const GradedDecomposition& dec, int i, int j, int k);

/// Serial reference implementation of the same sum.
double triple_sum_serial(const GradedDecomposition& dec, int i, int j, int k);

/// A = [123].
double compute_A(const GradedDecomposition& dec);

/// a_i = A / d_i.
std::array<double, 3> compute_a_triple(const GradedDecomposition& dec);

struct Casimir {
  double value;   // averaged over all unit basis vectors of p_i
  double spread;  // max - min across those vectors; > 1e-8 flags non-irreducibility
};

/// Casimir constant of the h-action on p_i. Zero when h is zero-dimensional.
Casimir casimir_constant(const GradedDecomposition& dec, int i);

/// Casimir of an arbitrary (h, p) pair inside alg; both bases orthonormal.
Casimir casimir_of_pair(const LieAlg& alg, const std::vector<CMat>& h_basis,
                        const std::vector<CMat>& p_basis);

struct InvariantReport {
  std::array<int, 3> d{};
  double A = 0;
  std::array<double, 3> a{};
  std::array<double, 3> c{};
  std::array<double, 3> c_spread{};

  double symmetry_residual = 0;        // max |[perm(123)] - A| over the 6 permutations
  double coincident_max = 0;           // max |[ijk]| over index triples with a repeat
  std::array<double, 3> sum_const_residual{};  // |2A - d_i (1 - 2 c_i)|
  std::array<double, 3> d_margin{};            // d_i - 2A
  std::array<bool, 3> equality_case{};         // |d_i - 2A| <= 1e-6
  std::array<double, 3> h_p_residual{};        // max ||[h, p_i]|| when equality_case

  bool casimir_irreducible(int i) const { return c_spread[i - 1] <= 1e-8; }
  bool pass(double identity_tol = 1e-8, double structure_tol = 1e-10) const;
};

/// Checks 2A = d_i (1 - 2 c_i), d_i >= 2A, the equality condition
/// [h, p_i] = 0, [ijk] symmetry, and coincident-index vanishing.
InvariantReport verify_identities(const GradedDecomposition& dec);

}  // namespace wallach
