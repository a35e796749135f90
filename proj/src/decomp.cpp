#include "wallach/decomp.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

#include "wallach/errors.hpp"

namespace wallach {

namespace {

CMat random_element(const LieAlg& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd c(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) c(i) = gauss(rng);
  return alg.from_coordinates(c);
}

}  // namespace

Involution::Involution(const LieAlg& alg, std::function<CMat(const CMat&)> carrier,
                       std::string desc)
    : carrier_(std::move(carrier)), desc_(std::move(desc)) {
  const int d = alg.dim();
  action_.resize(d, d);
  for (int j = 0; j < d; ++j) {
    double res = 0.0;
    action_.col(j) = alg.coordinates(carrier_(alg.basis()[j]), &res);
    if (res > 1e-8)
      throw ContractViolation("involution '" + desc_ + "' does not preserve the algebra");
  }

  double invol = (action_ * action_ - Eigen::MatrixXd::Identity(d, d))
                     .cwiseAbs()
                     .maxCoeff();
  if (invol > 1e-12)
    throw ContractViolation("involution '" + desc_ + "' fails sigma^2 = id (defect " +
                            std::to_string(invol) + ")");

  // automorphism spot check on random pairs
  std::mt19937_64 rng(0x5eed00d1u);
  for (int trial = 0; trial < 8; ++trial) {
    CMat x = random_element(alg, rng);
    CMat y = random_element(alg, rng);
    CMat lhs = carrier_(bracket(x, y));
    CMat rhs = bracket(carrier_(x), carrier_(y));
    double scale = std::max(1.0, lhs.norm());
    if ((lhs - rhs).norm() / scale > 1e-10)
      throw ContractViolation("involution '" + desc_ + "' is not an automorphism");
  }
}

Involution conjugation_involution(const LieAlg& alg, const CMat& s,
                                  const std::string& desc) {
  const int n = alg.matrix_size();
  if (s.rows() != n || s.cols() != n)
    throw InputError("conjugation_involution: S has wrong size");
  CMat s2 = s * s;
  CMat id = CMat::Identity(n, n);
  bool plus = (s2 - id).cwiseAbs().maxCoeff() < 1e-12;
  bool minus = (s2 + id).cwiseAbs().maxCoeff() < 1e-12;
  if (!plus && !minus) throw InputError("conjugation_involution: S^2 must be +-I");
  CMat sinv = plus ? CMat(s) : CMat(-s);
  return Involution(
      alg, [s, sinv](const CMat& x) { return CMat(s * x * sinv); }, desc);
}

Involution entrywise_conjugation(const LieAlg& alg) {
  return Involution(
      alg, [](const CMat& x) { return CMat(x.conjugate()); }, "entrywise conjugation");
}

Involution block_sign_involution(const LieAlg& alg,
                                 const std::vector<std::pair<int, int>>& signed_blocks) {
  int total = 0;
  for (auto [sign, size] : signed_blocks) {
    if (size <= 0 || (sign != 1 && sign != -1))
      throw InputError("block_sign_involution: blocks are (sign, size) with sign +-1");
    total += size;
  }
  if (total != alg.matrix_size())
    throw InputError("block_sign_involution: block sizes must sum to the matrix size");
  CMat s = CMat::Zero(total, total);
  int off = 0;
  std::string desc = "diag(";
  for (auto [sign, size] : signed_blocks) {
    for (int i = 0; i < size; ++i) s(off + i, off + i) = static_cast<double>(sign);
    desc += (sign > 0 ? "+I" : "-I") + std::to_string(size);
    off += size;
  }
  desc += ") conjugation";
  return conjugation_involution(alg, s, desc);
}

Involution permutation_involution(const LieAlg& alg, const std::vector<int>& copy_perm) {
  if (alg.family() != Family::Sum)
    throw InputError("permutation_involution: only for Sum algebras");
  const int copies = alg.params().at(0);
  if (static_cast<int>(copy_perm.size()) != copies)
    throw InputError("permutation_involution: permutation length mismatch");
  for (int c = 0; c < copies; ++c) {
    int img = copy_perm[c];
    if (img < 0 || img >= copies || copy_perm[img] != c)
      throw InputError("permutation_involution: not an involutive permutation");
  }
  const int fs = alg.matrix_size() / copies;
  CMat p = CMat::Zero(alg.matrix_size(), alg.matrix_size());
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < fs; ++i) p(copy_perm[c] * fs + i, c * fs + i) = 1.0;
  return conjugation_involution(alg, p, "copy permutation");
}

Involution compose(const LieAlg& alg, const Involution& a, const Involution& b) {
  return Involution(
      alg, [&a, &b](const CMat& x) { return a.apply(b.apply(x)); },
      a.desc() + " o " + b.desc());
}

const std::vector<CMat>& GradedDecomposition::p(int i) const {
  switch (i) {
    case 1: return p1_basis;
    case 2: return p2_basis;
    case 3: return p3_basis;
  }
  throw InputError("module index must be 1, 2, or 3");
}

int GradedDecomposition::d(int i) const { return static_cast<int>(p(i).size()); }

GradedDecomposition simultaneous_eigenspaces(const LieAlg& alg, const Involution& s1,
                                             const Involution& s2) {
  const int d = alg.dim();
  const Eigen::MatrixXd& m1 = s1.coord_action();
  const Eigen::MatrixXd& m2 = s2.coord_action();

  double comm = (m1 * m2 - m2 * m1).cwiseAbs().maxCoeff();
  if (comm > 1e-10)
    throw ContractViolation("simultaneous_eigenspaces: involutions do not commute (defect " +
                            std::to_string(comm) + ")");

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  auto eigenspace = [&](int e1, int e2) {
    Eigen::MatrixXd proj = 0.25 * (id + e1 * m1) * (id + e2 * m2);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeThinU);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-8 * std::max(smax, 1.0)) ++rank;
    std::vector<CMat> vecs;
    vecs.reserve(rank);
    for (int i = 0; i < rank; ++i)
      vecs.push_back(alg.from_coordinates(svd.matrixU().col(i)));
    return vecs.empty() ? vecs : orthonormalize(alg, vecs);
  };

  GradedDecomposition dec{alg, eigenspace(+1, +1), eigenspace(-1, +1),
                          eigenspace(+1, -1), eigenspace(-1, -1)};
  dec.d1 = static_cast<int>(dec.p1_basis.size());
  dec.d2 = static_cast<int>(dec.p2_basis.size());
  dec.d3 = static_cast<int>(dec.p3_basis.size());
  if (dec.h_dim() + dec.d1 + dec.d2 + dec.d3 != d)
    throw InternalError("simultaneous_eigenspaces: projector ranks do not sum to dim");
  return dec;
}

double GradingReport::max_residual() const {
  double m = orthogonality;
  for (int i = 0; i < 3; ++i)
    m = std::max({m, pp_to_h[i], h_p_to_p[i], cross_to_p[i]});
  return m;
}

bool GradingReport::pass(double tol) const {
  return dims_consistent && max_residual() <= tol;
}

GradingReport validate_grading(const GradedDecomposition& dec) {
  GradingReport rep;
  const LieAlg& alg = dec.alg;
  rep.dims_consistent = dec.h_dim() + dec.d1 + dec.d2 + dec.d3 == alg.dim() &&
                        dec.d1 == static_cast<int>(dec.p1_basis.size()) &&
                        dec.d2 == static_cast<int>(dec.p2_basis.size()) &&
                        dec.d3 == static_cast<int>(dec.p3_basis.size());

  // full Gram over the concatenated bases
  std::vector<const CMat*> all;
  for (const CMat& b : dec.h_basis) all.push_back(&b);
  for (int i = 1; i <= 3; ++i)
    for (const CMat& b : dec.p(i)) all.push_back(&b);
  const int n = static_cast<int>(all.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double g = alg.inner(*all[i], *all[j]);
      rep.orthogonality = std::max(rep.orthogonality, std::abs(g - (i == j ? 1.0 : 0.0)));
    }

  // residual of z against a target module: norm of z minus its projection
  auto away_from = [&](const CMat& z, const std::vector<CMat>& target) {
    CMat rem = z;
    for (const CMat& b : target) rem -= alg.inner(z, b) * b;
    return alg.norm(rem);
  };

  for (int i = 1; i <= 3; ++i) {
    const auto& pi = dec.p(i);
    for (std::size_t a = 0; a < pi.size(); ++a)
      for (std::size_t b = a; b < pi.size(); ++b)
        rep.pp_to_h[i - 1] =
            std::max(rep.pp_to_h[i - 1], away_from(bracket(pi[a], pi[b]), dec.h_basis));
    for (const CMat& h : dec.h_basis)
      for (const CMat& e : pi)
        rep.h_p_to_p[i - 1] = std::max(rep.h_p_to_p[i - 1], away_from(bracket(h, e), pi));
  }
  const int cross[3][2] = {{2, 3}, {1, 3}, {1, 2}};
  for (int i = 1; i <= 3; ++i) {
    const auto& pj = dec.p(cross[i - 1][0]);
    const auto& pk = dec.p(cross[i - 1][1]);
    for (const CMat& x : pj)
      for (const CMat& y : pk)
        rep.cross_to_p[i - 1] =
            std::max(rep.cross_to_p[i - 1], away_from(bracket(x, y), dec.p(i)));
  }
  return rep;
}

}  // namespace wallach
