#include "wallach/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wallach/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wallach {

namespace {

struct KahanAcc {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// contribution of one outer basis vector: sum over beta, gamma
double alpha_slice(const LieAlg& alg, const CMat& ea, const std::vector<CMat>& pj,
                   const std::vector<CMat>& pk) {
  KahanAcc acc;
  for (const CMat& eb : pj) {
    CMat br = bracket(ea, eb);
    for (const CMat& ec : pk) {
      double v = alg.inner(br, ec);
      acc.add(v * v);
    }
  }
  return acc.sum;
}

void check_index(int i) {
  if (i < 1 || i > 3) throw InputError("module index must be 1, 2, or 3");
}

}  // namespace

double triple_sum_serial(const GradedDecomposition& dec, int i, int j, int k) {
  check_index(i);
  check_index(j);
  check_index(k);
  const auto& pi = dec.p(i);
  const auto& pj = dec.p(j);
  const auto& pk = dec.p(k);
  KahanAcc acc;
  for (const CMat& ea : pi) acc.add(alpha_slice(dec.alg, ea, pj, pk));
  return acc.sum;
}

double triple_sum(const GradedDecomposition& dec, int i, int j, int k) {
  check_index(i);
  check_index(j);
  check_index(k);
  const auto& pi = dec.p(i);
  const auto& pj = dec.p(j);
  const auto& pk = dec.p(k);
  const int di = static_cast<int>(pi.size());
  std::vector<double> partial(di, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int a = 0; a < di; ++a) partial[a] = alpha_slice(dec.alg, pi[a], pj, pk);

  KahanAcc acc;
  for (int a = 0; a < di; ++a) acc.add(partial[a]);
  return acc.sum;
}

double compute_A(const GradedDecomposition& dec) { return triple_sum(dec, 1, 2, 3); }

std::array<double, 3> compute_a_triple(const GradedDecomposition& dec) {
  double A = compute_A(dec);
  return {A / dec.d1, A / dec.d2, A / dec.d3};
}

Casimir casimir_of_pair(const LieAlg& alg, const std::vector<CMat>& h_basis,
                        const std::vector<CMat>& p_basis) {
  if (p_basis.empty()) throw InputError("casimir_of_pair: empty module");
  if (h_basis.empty()) return {0.0, 0.0};
  double lo = 0.0, hi = 0.0;
  KahanAcc mean;
  bool first = true;
  for (const CMat& e : p_basis) {
    KahanAcc acc;
    for (const CMat& h : h_basis) {
      CMat br = bracket(h, e);
      acc.add(alg.inner(br, br));
    }
    if (first || acc.sum < lo) lo = acc.sum;
    if (first || acc.sum > hi) hi = acc.sum;
    first = false;
    mean.add(acc.sum);
  }
  return {mean.sum / static_cast<double>(p_basis.size()), hi - lo};
}

Casimir casimir_constant(const GradedDecomposition& dec, int i) {
  check_index(i);
  return casimir_of_pair(dec.alg, dec.h_basis, dec.p(i));
}

bool InvariantReport::pass(double identity_tol, double structure_tol) const {
  for (int i = 0; i < 3; ++i) {
    if (sum_const_residual[i] > identity_tol) return false;
    if (d_margin[i] < -identity_tol) return false;
    if (equality_case[i] && h_p_residual[i] > identity_tol) return false;
    if (c_spread[i] > identity_tol) return false;
    if (c[i] < -1e-12) return false;
  }
  return symmetry_residual <= structure_tol && coincident_max <= structure_tol;
}

InvariantReport verify_identities(const GradedDecomposition& dec) {
  InvariantReport rep;
  rep.d = {dec.d1, dec.d2, dec.d3};
  rep.A = compute_A(dec);
  rep.a = {rep.A / dec.d1, rep.A / dec.d2, rep.A / dec.d3};

  static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                  {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& p : perms)
    rep.symmetry_residual = std::max(
        rep.symmetry_residual, std::abs(triple_sum(dec, p[0], p[1], p[2]) - rep.A));

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        if (i != j && j != k && i != k) continue;
        rep.coincident_max = std::max(rep.coincident_max, triple_sum(dec, i, j, k));
      }

  for (int i = 1; i <= 3; ++i) {
    Casimir cas = casimir_constant(dec, i);
    rep.c[i - 1] = cas.value;
    rep.c_spread[i - 1] = cas.spread;
    double di = static_cast<double>(dec.d(i));
    rep.sum_const_residual[i - 1] = std::abs(2.0 * rep.A - di * (1.0 - 2.0 * cas.value));
    rep.d_margin[i - 1] = di - 2.0 * rep.A;
    rep.equality_case[i - 1] = std::abs(di - 2.0 * rep.A) <= 1e-6;
    if (rep.equality_case[i - 1]) {
      double worst = 0.0;
      for (const CMat& h : dec.h_basis)
        for (const CMat& e : dec.p(i))
          worst = std::max(worst, dec.alg.norm(bracket(h, e)));
      rep.h_p_residual[i - 1] = worst;
    }
  }
  return rep;
}

}  // namespace wallach
