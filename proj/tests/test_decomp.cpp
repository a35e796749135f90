#include <doctest.h>

#include <algorithm>

#include "wallach/decomp.hpp"
#include "wallach/errors.hpp"
#include "wallach/spaces.hpp"

using namespace wallach;

namespace {

int fixed_space_dim(const Involution& s) {
  // eigenvalues are exactly +-1, so dim of the +1 space is (dim + trace)/2
  double tr = s.coord_action().trace();
  return static_cast<int>(std::lround((s.coord_action().rows() + tr) / 2.0));
}

std::array<int, 3> sorted_dims(const GradedDecomposition& dec) {
  std::array<int, 3> d = {dec.d1, dec.d2, dec.d3};
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("block_sign_involution: fixed subalgebras and failure modes") {
  LieAlg so5 = build_classical(Family::SO, 5);
  Involution s = block_sign_involution(so5, {{1, 2}, {1, 2}, {-1, 1}});
  CHECK(fixed_space_dim(s) == 6);  // so(4) + so(1)

  LieAlg su4 = build_classical(Family::SU, 4);
  Involution t = block_sign_involution(su4, {{1, 2}, {-1, 2}});
  CHECK(fixed_space_dim(t) == 7);  // s(u(2)+u(2))

  Involution id = block_sign_involution(su4, {{1, 4}});
  CHECK((id.coord_action() - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff() <=
        1e-13);

  CHECK_THROWS_AS(block_sign_involution(so5, {{1, 2}, {-1, 2}}), InputError);
  CHECK_THROWS_AS(block_sign_involution(so5, {{2, 3}, {1, 2}}), InputError);
}

TEST_CASE("simultaneous_eigenspaces: so(5) flag blocks") {
  LieAlg so5 = build_classical(Family::SO, 5);
  Involution s1 = block_sign_involution(so5, {{1, 2}, {-1, 2}, {1, 1}});
  Involution s2 = block_sign_involution(so5, {{1, 2}, {1, 2}, {-1, 1}});
  GradedDecomposition dec = simultaneous_eigenspaces(so5, s1, s2);
  CHECK(dec.h_dim() == 2);
  CHECK(sorted_dims(dec) == std::array<int, 3>{2, 2, 4});
  CHECK(dec.h_dim() + dec.d1 + dec.d2 + dec.d3 == so5.dim());
  CHECK(validate_grading(dec).pass());
}

TEST_CASE("simultaneous_eigenspaces: su(4) conjugation/twist pair") {
  LieAlg su4 = build_classical(Family::SU, 4);
  CMat j = CMat::Zero(4, 4);
  j.topRightCorner(2, 2) = CMat::Identity(2, 2);
  j.bottomLeftCorner(2, 2) = -CMat::Identity(2, 2);
  CMat jinv = -j;
  Involution conj = entrywise_conjugation(su4);
  Involution twist(
      su4, [j, jinv](const CMat& x) { return CMat(j * x.conjugate() * jinv); },
      "symplectic twist");
  GradedDecomposition dec = simultaneous_eigenspaces(su4, conj, twist);
  CHECK(dec.h_dim() == 4);  // u(2)
  CHECK(sorted_dims(dec) == std::array<int, 3>{2, 3, 6});
  CHECK(validate_grading(dec).pass());
}

TEST_CASE("simultaneous_eigenspaces: pair-swap permutations on f+f+f+f") {
  LieAlg f = build_classical(Family::SU, 2);
  LieAlg g = build_sum_copies(f, 4);
  Involution s1 = permutation_involution(g, {2, 3, 0, 1});
  Involution s2 = permutation_involution(g, {1, 0, 3, 2});
  GradedDecomposition dec = simultaneous_eigenspaces(g, s1, s2);
  CHECK(dec.h_dim() == 3);
  CHECK(dec.d1 == 3);
  CHECK(dec.d2 == 3);
  CHECK(dec.d3 == 3);
  CHECK(validate_grading(dec).pass());
}

TEST_CASE("sigma3 = sigma1 o sigma2 fixes h + p3") {
  LieAlg so6 = build_classical(Family::SO, 6);
  Involution s1 = block_sign_involution(so6, {{1, 2}, {-1, 2}, {1, 2}});
  Involution s2 = block_sign_involution(so6, {{1, 2}, {1, 2}, {-1, 2}});
  Involution s3 = compose(so6, s1, s2);
  GradedDecomposition dec = simultaneous_eigenspaces(so6, s1, s2);
  double worst = 0.0;
  for (const CMat& x : dec.h_basis) worst = std::max(worst, (s3.apply(x) - x).norm());
  for (const CMat& x : dec.p3_basis) worst = std::max(worst, (s3.apply(x) - x).norm());
  CHECK(worst <= 1e-10);
  // and it negates p1 and p2
  for (const CMat& x : dec.p1_basis) CHECK((s3.apply(x) + x).norm() <= 1e-10);
}

TEST_CASE("non-commuting involutions are rejected") {
  LieAlg so4 = build_classical(Family::SO, 4);
  Involution diag = block_sign_involution(so4, {{1, 1}, {-1, 1}, {1, 2}});
  CMat p = CMat::Identity(4, 4);
  p(0, 0) = p(1, 1) = 0.0;
  p(0, 1) = p(1, 0) = 1.0;
  Involution swap = conjugation_involution(so4, p, "coordinate swap");
  CHECK_THROWS_AS(simultaneous_eigenspaces(so4, diag, swap), ContractViolation);
}

TEST_CASE("validate_grading flags a corrupted decomposition") {
  GradedDecomposition dec = make_flag_family(Family::SO, 2, 2, 1);
  REQUIRE(validate_grading(dec).pass());
  GradedDecomposition bad = dec;
  std::swap(bad.p1_basis[0], bad.p2_basis[0]);
  GradingReport rep = validate_grading(bad);
  CHECK_FALSE(rep.pass());
  CHECK(rep.max_residual() > 1e-3);
}

TEST_CASE("so(6)/so(2)^3 block decomposition validates") {
  GradedDecomposition dec = make_flag_family(Family::SO, 2, 2, 2);
  GradingReport rep = validate_grading(dec);
  CHECK(rep.pass());
  CHECK(rep.max_residual() <= 1e-9);
}

TEST_CASE("eigenspace split matches the direct block construction") {
  LieAlg so5 = build_classical(Family::SO, 5);
  Involution s1 = block_sign_involution(so5, {{1, 2}, {-1, 2}, {1, 1}});
  Involution s2 = block_sign_involution(so5, {{1, 2}, {1, 2}, {-1, 1}});
  GradedDecomposition from_eigen = simultaneous_eigenspaces(so5, s1, s2);
  GradedDecomposition direct = make_flag_family(Family::SO, 2, 2, 1);

  REQUIRE(from_eigen.d1 == direct.d1);
  REQUIRE(from_eigen.d2 == direct.d2);
  REQUIRE(from_eigen.d3 == direct.d3);
  // identical spans: expanding each eigenspace vector in the direct module
  // basis must preserve the unit norm
  for (int i = 1; i <= 3; ++i)
    for (const CMat& v : from_eigen.p(i)) {
      double norm2 = 0.0;
      for (const CMat& w : direct.p(i)) {
        double c = direct.alg.inner(v, w);
        norm2 += c * c;
      }
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-9));
    }
}
