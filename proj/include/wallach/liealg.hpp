#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "wallach/rational.hpp"

namespace wallach {

/// Dense complex matrix, the carrier of Lie algebra elements.
using CMat = Eigen::MatrixXcd;

enum class Family { SO, SU, SP, Sum };

std::string family_name(Family f);

/// Commutator [X,Y] = XY - YX. Throws InputError on shape mismatch.
CMat bracket(const CMat& x, const CMat& y);

/// Max-abs entry of X + X^H; elements of u(n)-type algebras keep this below 1e-12.
double anti_hermitian_defect(const CMat& x);

/// A compact matrix Lie algebra treated as a real vector space with
/// complex-matrix carriers. Holds the ordered real basis and the rational
/// Killing coefficient kappa with B(X,Y) = kappa * tr(XY) in the defining
/// representation; kappa is signed so that -B is positive definite.
class LieAlg {
 public:
  LieAlg() : family_(Family::Sum), kappa_(0.0), msize_(0) {}
  LieAlg(Family family, std::vector<int> params, std::vector<CMat> basis,
         Rational killing_coeff);

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  const std::vector<CMat>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return msize_; }
  const Rational& killing_coeff() const { return killing_coeff_; }
  double kappa() const { return kappa_; }

  /// Reference inner product <X,Y> = -B(X,Y) = -kappa * Re tr(XY).
  double inner(const CMat& x, const CMat& y) const;
  double norm(const CMat& x) const;

  /// Gram matrix of the basis under <.,.>.
  const Eigen::MatrixXd& gram() const { return gram_; }

  /// Coordinates of y in the real span of the basis. If `residual` is given it
  /// receives ||y - sum c_i e_i||_F; otherwise a residual above `span_tol`
  /// throws InputError.
  Eigen::VectorXd coordinates(const CMat& y, double* residual = nullptr,
                              double span_tol = 1e-8) const;

  CMat from_coordinates(const Eigen::VectorXd& c) const;

 private:
  Family family_;
  std::vector<int> params_;
  std::vector<CMat> basis_;
  Rational killing_coeff_;
  double kappa_;
  int msize_;
  Eigen::MatrixXd gram_;
  Eigen::LDLT<Eigen::MatrixXd> gram_ldlt_;
};

/// Standard-basis constructors for so(n) (n >= 2), su(n) (n >= 2), sp(n) (n >= 1).
/// sp(n) is realized inside u(2n) as X^T J + J X = 0 with the standard
/// symplectic form J.
LieAlg build_classical(Family family, int n);

/// Direct sum of `copies` block-diagonal copies of a classical algebra.
LieAlg build_sum_copies(const LieAlg& f, int copies);

/// trace(ad X . ad Y) computed in the adjoint representation over basis
/// coordinates. Serves as the sign/normalization oracle for killing_coeff.
/// Throws InputError if X or Y is outside the span (residual > 1e-8).
double killing_form_ad(const LieAlg& alg, const CMat& x, const CMat& y);

/// Gram-Schmidt under <.,.>; span preserved. Throws DegeneracyError when a
/// pivot drops below 1e-10.
std::vector<CMat> orthonormalize(const LieAlg& alg, const std::vector<CMat>& vectors);

}  // namespace wallach
