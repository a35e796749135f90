#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "wallach/errors.hpp"
#include "wallach/liealg.hpp"

using namespace wallach;

namespace {

CMat L(int n, int a, int b) {
  CMat x = CMat::Zero(n, n);
  x(a, b) = 1.0;
  x(b, a) = -1.0;
  return x;
}

CMat random_element(const LieAlg& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd c(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) c(i) = gauss(rng);
  return alg.from_coordinates(c);
}

}  // namespace

TEST_CASE("bracket: commutator with antisymmetry") {
  CMat l12 = L(3, 0, 1), l13 = L(3, 0, 2), l23 = L(3, 1, 2);
  CHECK((bracket(l12, l12)).norm() == 0.0);
  CHECK((bracket(l12, l13) + l23).norm() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK((bracket(l12, l13) + bracket(l13, l12)).norm() == 0.0);
  CHECK_THROWS_AS(bracket(l12, CMat::Zero(4, 4)), InputError);
}

TEST_CASE("classical families: dimensions and matrix sizes") {
  LieAlg so3 = build_classical(Family::SO, 3);
  CHECK(so3.dim() == 3);
  CHECK(so3.killing_coeff() == Rational(1));
  CHECK(build_classical(Family::SU, 3).dim() == 8);
  CHECK(build_classical(Family::SP, 2).dim() == 10);
  CHECK(build_classical(Family::SP, 2).matrix_size() == 4);
  CHECK(build_classical(Family::SO, 12).dim() == 66);
  CHECK_THROWS_AS(build_classical(Family::SO, 1), InputError);
  CHECK_THROWS_AS(build_classical(Family::SU, 1), InputError);
  CHECK_THROWS_AS(build_classical(Family::SP, 0), InputError);
}

TEST_CASE("basis elements are anti-Hermitian") {
  for (Family f : {Family::SO, Family::SU, Family::SP}) {
    LieAlg alg = build_classical(f, 4);
    for (const CMat& b : alg.basis()) CHECK(anti_hermitian_defect(b) <= 1e-12);
  }
}

TEST_CASE("killing_form_ad: so(3) value and degenerate cases") {
  LieAlg so3 = build_classical(Family::SO, 3);
  CMat l12 = L(3, 0, 1);
  CHECK(killing_form_ad(so3, l12, l12) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(killing_form_ad(so3, l12, CMat::Zero(3, 3)) == doctest::Approx(0.0));
  CMat off_span = CMat::Identity(3, 3);
  CHECK_THROWS_AS(killing_form_ad(so3, off_span, l12), InputError);
}

TEST_CASE("killing_form_ad equals kappa * tr on random pairs") {
  std::mt19937_64 rng(42);
  for (auto [fam, n] : {std::pair{Family::SO, 5}, {Family::SU, 3}, {Family::SP, 2},
                        {Family::SO, 8}}) {
    LieAlg alg = build_classical(fam, n);
    for (int trial = 0; trial < 100; ++trial) {
      CMat x = random_element(alg, rng), y = random_element(alg, rng);
      double lhs = killing_form_ad(alg, x, y);
      double rhs = alg.kappa() * (x * y).trace().real();
      CHECK(std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0}) <= 1e-10);
    }
  }
}

TEST_CASE("sum of copies keeps the killing coefficient") {
  LieAlg f = build_classical(Family::SU, 2);
  LieAlg g = build_sum_copies(f, 4);
  CHECK(g.dim() == 12);
  CHECK(g.matrix_size() == 8);
  CHECK(g.killing_coeff() == f.killing_coeff());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CMat x = random_element(g, rng), y = random_element(g, rng);
    double lhs = killing_form_ad(g, x, y);
    double rhs = g.kappa() * (x * y).trace().real();
    CHECK(std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0}) <= 1e-10);
  }
}

TEST_CASE("orthonormalize: explicit norm, idempotence, full-basis Gram") {
  LieAlg so3 = build_classical(Family::SO, 3);
  auto out = orthonormalize(so3, {L(3, 0, 1)});
  REQUIRE(out.size() == 1);
  // <L12, L12> = -tr(L12^2) = 2, so the unit vector is L12 / sqrt(2)
  CHECK((out[0] - L(3, 0, 1) / std::sqrt(2.0)).norm() <= 1e-14);

  auto again = orthonormalize(so3, out);
  CHECK((again[0] - out[0]).norm() <= 1e-12);

  LieAlg so4 = build_classical(Family::SO, 4);
  auto onb = orthonormalize(so4, so4.basis());
  REQUIRE(onb.size() == 6);
  for (std::size_t i = 0; i < onb.size(); ++i)
    for (std::size_t j = 0; j < onb.size(); ++j)
      CHECK(std::abs(so4.inner(onb[i], onb[j]) - (i == j ? 1.0 : 0.0)) <= 1e-12);

  CHECK_THROWS_AS(orthonormalize(so3, {L(3, 0, 1), 2.0 * L(3, 0, 1)}), DegeneracyError);
}

TEST_CASE("bi-invariance and Jacobi identity on random triples") {
  std::mt19937_64 rng(11);
  for (auto [fam, n] : {std::pair{Family::SO, 5}, {Family::SU, 3}, {Family::SP, 2}}) {
    LieAlg alg = build_classical(fam, n);
    for (int trial = 0; trial < 25; ++trial) {
      CMat x = random_element(alg, rng), y = random_element(alg, rng),
           z = random_element(alg, rng);
      CHECK(std::abs(alg.inner(bracket(z, x), y) + alg.inner(x, bracket(z, y))) <=
            1e-10 * std::max(1.0, std::abs(alg.inner(x, y))));
      CMat jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                 bracket(z, bracket(x, y));
      CHECK(jac.norm() <= 1e-10 * std::max(1.0, x.norm() * y.norm() * z.norm()));
    }
  }
}

TEST_CASE("bracket closure within the basis span") {
  for (auto [fam, n] : {std::pair{Family::SO, 6}, {Family::SU, 4}, {Family::SP, 3}}) {
    LieAlg alg = build_classical(fam, n);
    double worst = 0.0;
    for (int i = 0; i < alg.dim(); i += 3)
      for (int j = 0; j < alg.dim(); j += 3) {
        double res = 0.0;
        alg.coordinates(bracket(alg.basis()[i], alg.basis()[j]), &res);
        worst = std::max(worst, res);
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("-B is positive definite up to so(12), su(8), sp(5)") {
  auto min_gram_eig = [](const LieAlg& alg) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(alg.gram());
    return es.eigenvalues().minCoeff();
  };
  for (int n = 3; n <= 12; ++n) CHECK(min_gram_eig(build_classical(Family::SO, n)) > 0.0);
  for (int n = 2; n <= 8; ++n) CHECK(min_gram_eig(build_classical(Family::SU, n)) > 0.0);
  for (int n = 1; n <= 5; ++n) CHECK(min_gram_eig(build_classical(Family::SP, n)) > 0.0);
}

TEST_CASE("so(2) constructs but is degenerate") {
  // abelian: killing form identically zero, so <.,.> cannot normalize
  LieAlg so2 = build_classical(Family::SO, 2);
  CHECK(so2.dim() == 1);
  CHECK(so2.killing_coeff() == Rational(0));
  CHECK_THROWS_AS(orthonormalize(so2, so2.basis()), DegeneracyError);
}

TEST_CASE("coordinates round-trip and span residual") {
  LieAlg su3 = build_classical(Family::SU, 3);
  std::mt19937_64 rng(3);
  CMat x = random_element(su3, rng);
  double res = 0.0;
  Eigen::VectorXd c = su3.coordinates(x, &res);
  CHECK(res <= 1e-12);
  CHECK((su3.from_coordinates(c) - x).norm() <= 1e-10);
}
