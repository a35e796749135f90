#include <doctest.h>

#include <algorithm>

#include "wallach/errors.hpp"
#include "wallach/invariants.hpp"
#include "wallach/spaces.hpp"

using namespace wallach;

namespace {

std::array<double, 3> sorted_a(const GradedDecomposition& dec) {
  auto a = compute_a_triple(dec);
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("flag family: boundary and torus cases") {
  GradedDecomposition so3 = make_flag_family(Family::SO, 1, 1, 1);
  CHECK(so3.h_dim() == 0);
  CHECK(so3.d1 == 1);
  CHECK(so3.d2 == 1);
  CHECK(so3.d3 == 1);

  GradedDecomposition su3 = make_flag_family(Family::SU, 1, 1, 1);
  CHECK(su3.h_dim() == 2);
  CHECK(su3.d1 == 2);
  CHECK(su3.d2 == 2);
  CHECK(su3.d3 == 2);

  GradedDecomposition so5 = make_flag_family(Family::SO, 2, 2, 1);
  std::array<int, 3> dims = {so5.d1, so5.d2, so5.d3};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::array<int, 3>{2, 2, 4});

  GradedDecomposition sp3 = make_flag_family(Family::SP, 1, 1, 1);
  CHECK(sp3.h_dim() == 9);
  CHECK(sp3.d1 == 4);
}

TEST_CASE("flag family dims follow the table formulas exactly") {
  for (auto [k, l, m] : {std::array<int, 3>{3, 2, 1}, {2, 2, 2}, {4, 3, 1}}) {
    GradedDecomposition dec = make_flag_family(Family::SO, k, l, m);
    CHECK(dec.d1 == k * l);
    CHECK(dec.d2 == k * m);
    CHECK(dec.d3 == l * m);
  }
  GradedDecomposition su = make_flag_family(Family::SU, 2, 2, 1);
  CHECK(su.d1 == 8);
  CHECK(su.d2 == 4);
  CHECK(su.d3 == 4);
  GradedDecomposition sp = make_flag_family(Family::SP, 2, 2, 1);
  CHECK(sp.d1 == 16);
  CHECK(sp.d2 == 8);
  CHECK(sp.d3 == 8);
}

TEST_CASE("su(2l)/u(l): dims and a-triple") {
  GradedDecomposition l2 = make_su_u(2);
  CHECK(l2.d1 == 2);
  CHECK(l2.d2 == 6);
  CHECK(l2.d3 == 3);
  CHECK(l2.h_dim() == 4);
  auto a = sorted_a(l2);
  CHECK(a[0] == doctest::Approx(1.0 / 8).epsilon(1e-9));
  CHECK(a[1] == doctest::Approx(1.0 / 4).epsilon(1e-9));
  CHECK(a[2] == doctest::Approx(3.0 / 8).epsilon(1e-9));

  GradedDecomposition l3 = make_su_u(3);
  CHECK(l3.d1 == 6);
  CHECK(l3.d2 == 12);
  CHECK(l3.d3 == 8);
  CHECK_THROWS_AS(make_su_u(1), InputError);
  CHECK_THROWS_AS(make_su_u(7), ResourceError);
}

TEST_CASE("so(2l)/u(1)+u(l-1): dims and a-triple") {
  GradedDecomposition l4 = make_so_u(4);
  CHECK(l4.d1 == 6);
  CHECK(l4.d2 == 6);
  CHECK(l4.d3 == 6);
  auto a = compute_a_triple(l4);
  for (double v : a) CHECK(v == doctest::Approx(1.0 / 6).epsilon(1e-9));

  GradedDecomposition l5 = make_so_u(5);
  CHECK(l5.d1 == 8);
  CHECK(l5.d2 == 8);
  CHECK(l5.d3 == 12);
  CHECK_THROWS_AS(make_so_u(3), InputError);
  CHECK_THROWS_AS(make_so_u(7), ResourceError);
}

TEST_CASE("quadruple product over diag(f)") {
  GradedDecomposition su2 = make_ledger_obata(Family::SU, 2);
  CHECK(su2.h_dim() == 3);
  CHECK(su2.d1 == 3);
  CHECK(su2.d2 == 3);
  CHECK(su2.d3 == 3);
  CHECK(compute_A(su2) == doctest::Approx(0.75).epsilon(1e-12));

  GradedDecomposition so5 = make_ledger_obata(Family::SO, 5);
  auto a = compute_a_triple(so5);
  for (double v : a) CHECK(v == doctest::Approx(0.25).epsilon(1e-9));

  CHECK_THROWS_AS(make_ledger_obata(Family::SO, 4), InputError);  // so(4) not simple
  CHECK_THROWS_AS(make_ledger_obata(Family::SU, 1), InputError);
  CHECK_THROWS_AS(make_ledger_obata(Family::SO, 9), ResourceError);
}

TEST_CASE("every constructor output passes validate_grading") {
  for (const GradedDecomposition& dec :
       {make_flag_family(Family::SO, 3, 2, 1), make_flag_family(Family::SU, 2, 1, 1),
        make_flag_family(Family::SP, 1, 1, 1), make_su_u(3), make_so_u(4),
        make_ledger_obata(Family::SU, 2)}) {
    CHECK(validate_grading(dec).max_residual() <= 1e-9);
  }
}

TEST_CASE("constructors are deterministic") {
  GradedDecomposition a = make_su_u(2), b = make_su_u(2);
  REQUIRE(a.d1 == b.d1);
  for (std::size_t i = 0; i < a.p1_basis.size(); ++i)
    CHECK((a.p1_basis[i] - b.p1_basis[i]).norm() == 0.0);
  for (std::size_t i = 0; i < a.h_basis.size(); ++i)
    CHECK((a.h_basis[i] - b.h_basis[i]).norm() == 0.0);
}

TEST_CASE("size caps raise resource errors") {
  CHECK_THROWS_AS(make_flag_family(Family::SO, 6, 6, 6), ResourceError);
  CHECK_THROWS_AS(make_flag_family(Family::SP, 4, 2, 1), ResourceError);
  CHECK_THROWS_AS(make_flag_family(Family::SO, 0, 1, 1), InputError);
  // configurable cap admits larger cases
  CHECK(make_flag_family(Family::SO, 5, 5, 4, 14).alg.matrix_size() == 14);
}
