#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wallach/liealg.hpp"

namespace wallach {

/// Involutive automorphism of a LieAlg, stored as a real operator on basis
/// coordinates so that commutation and automorphism checks are plain matrix
/// identities. Construction verifies involutivity and the automorphism
/// property on random pairs.
class Involution {
 public:
  Involution(const LieAlg& alg, std::function<CMat(const CMat&)> carrier,
             std::string desc);

  const Eigen::MatrixXd& coord_action() const { return action_; }
  CMat apply(const CMat& x) const { return carrier_(x); }
  const std::string& desc() const { return desc_; }

 private:
  std::function<CMat(const CMat&)> carrier_;
  Eigen::MatrixXd action_;
  std::string desc_;
};

/// X -> S X S^{-1} for a fixed matrix S with S^2 = +-I.
Involution conjugation_involution(const LieAlg& alg, const CMat& s,
                                  const std::string& desc = "conjugation");

/// Entrywise complex conjugation (conjugate-linear on entries, real-linear on
/// the algebra).
Involution entrywise_conjugation(const LieAlg& alg);

/// Conjugation by diag of signed identity blocks. Block sizes must sum to the
/// matrix size of alg.
Involution block_sign_involution(const LieAlg& alg,
                                 const std::vector<std::pair<int, int>>& signed_blocks);

/// Copy permutation for Sum algebras; `copy_perm` must be an involutive
/// permutation of the copies.
Involution permutation_involution(const LieAlg& alg, const std::vector<int>& copy_perm);

Involution compose(const LieAlg& alg, const Involution& a, const Involution& b);

/// g = h + p1 + p2 + p3 with all four bases orthonormal under <.,.> and the
/// Z2 x Z2 grading relations holding.
struct GradedDecomposition {
  LieAlg alg;
  std::vector<CMat> h_basis;
  std::vector<CMat> p1_basis;
  std::vector<CMat> p2_basis;
  std::vector<CMat> p3_basis;
  int d1 = 0, d2 = 0, d3 = 0;

  const std::vector<CMat>& p(int i) const;  // i in {1,2,3}
  int d(int i) const;
  int h_dim() const { return static_cast<int>(h_basis.size()); }
};

/// Simultaneous +-1 eigenspace split for a commuting pair of involutions:
/// h = (++), p1 = (-+), p2 = (+-), p3 = (--), via the projectors
/// (Id +- s1)(Id +- s2)/4. Throws ContractViolation if the involutions do not
/// commute, InternalError if projector ranks do not sum to dim.
GradedDecomposition simultaneous_eigenspaces(const LieAlg& alg, const Involution& s1,
                                             const Involution& s2);

struct GradingReport {
  double pp_to_h[3] = {0, 0, 0};    // [p_i,p_i] away from h
  double h_p_to_p[3] = {0, 0, 0};   // [h,p_i] away from p_i
  double cross_to_p[3] = {0, 0, 0}; // [p_j,p_k] away from p_i
  double orthogonality = 0;         // deviation of the full Gram matrix from identity
  bool dims_consistent = false;

  double max_residual() const;
  bool pass(double tol = 1e-9) const;
};

GradingReport validate_grading(const GradedDecomposition& dec);

}  // namespace wallach
