#include "wallach/spaces.hpp"

#include <array>
#include <utility>

#include "wallach/errors.hpp"

namespace wallach {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

CMat antisym(int n, int a, int b) {
  CMat x = CMat::Zero(n, n);
  x(a, b) = 1.0;
  x(b, a) = -1.0;
  return x;
}

CMat sym_imag(int n, int a, int b) {
  CMat x = CMat::Zero(n, n);
  x(a, b) = kI;
  x(b, a) = kI;
  return x;
}

CMat sym_real(int n, int a, int b) {
  CMat x = CMat::Zero(n, n);
  x(a, b) = 1.0;
  x(b, a) = 1.0;
  return x;
}

// sp(n) element [[A, B], [-conj(B), conj(A)]] pieces in u(2n)
CMat sp_diag(int n, const CMat& a, const CMat& d) {
  CMat x = CMat::Zero(2 * n, 2 * n);
  x.topLeftCorner(n, n) = a;
  x.bottomRightCorner(n, n) = d;
  return x;
}

CMat sp_off(int n, const CMat& b, const CMat& c) {
  CMat x = CMat::Zero(2 * n, 2 * n);
  x.topRightCorner(n, n) = b;
  x.bottomLeftCorner(n, n) = c;
  return x;
}

// the four sp(n) generators supported on the index pair (a, b), a <= b
std::vector<CMat> sp_pair_elems(int n, int a, int b) {
  std::vector<CMat> out;
  if (a != b) out.push_back(sp_diag(n, antisym(n, a, b), antisym(n, a, b)));
  CMat si = sym_imag(n, a, b);
  CMat sr = sym_real(n, a, b);
  out.push_back(sp_diag(n, si, -si));
  out.push_back(sp_off(n, sr, -sr));
  out.push_back(sp_off(n, si, si));
  return out;
}

int block_of(int idx, int k, int l) { return idx < k ? 0 : (idx < k + l ? 1 : 2); }

// module index for a cross-block pair: (0,1)->1, (0,2)->2, (1,2)->3
int pair_module(int ba, int bb) {
  if (ba > bb) std::swap(ba, bb);
  if (ba == 0 && bb == 1) return 1;
  if (ba == 0 && bb == 2) return 2;
  return 3;
}

GradedDecomposition assemble(LieAlg alg, std::vector<CMat> h,
                             std::array<std::vector<CMat>, 3> p) {
  GradedDecomposition dec;
  dec.h_basis = h.empty() ? std::move(h) : orthonormalize(alg, h);
  dec.p1_basis = orthonormalize(alg, p[0]);
  dec.p2_basis = orthonormalize(alg, p[1]);
  dec.p3_basis = orthonormalize(alg, p[2]);
  dec.alg = std::move(alg);
  dec.d1 = static_cast<int>(dec.p1_basis.size());
  dec.d2 = static_cast<int>(dec.p2_basis.size());
  dec.d3 = static_cast<int>(dec.p3_basis.size());
  if (!validate_grading(dec).pass())
    throw InternalError("space constructor produced an invalid grading");
  return dec;
}

}  // namespace

GradedDecomposition make_flag_family(Family family, int k, int l, int m,
                                     int max_matrix_size) {
  if (family != Family::SO && family != Family::SU && family != Family::SP)
    throw InputError("make_flag_family: family must be SO, SU, or SP");
  if (k < 1 || l < 1 || m < 1) throw InputError("make_flag_family: k, l, m >= 1");
  const int n = k + l + m;
  const int msize = family == Family::SP ? 2 * n : n;
  if (msize > max_matrix_size)
    throw ResourceError("make_flag_family: matrix size " + std::to_string(msize) +
                        " exceeds the cap " + std::to_string(max_matrix_size));

  LieAlg alg = build_classical(family, n);
  std::vector<CMat> h;
  std::array<std::vector<CMat>, 3> p;

  auto route = [&](int a, int b, std::vector<CMat> elems) {
    int ba = block_of(a, k, l), bb = block_of(b, k, l);
    auto& dst = (ba == bb) ? h : p[pair_module(ba, bb) - 1];
    for (auto& e : elems) dst.push_back(std::move(e));
  };

  switch (family) {
    case Family::SO:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) route(a, b, {antisym(n, a, b)});
      break;
    case Family::SU: {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          route(a, b, {antisym(n, a, b), sym_imag(n, a, b)});
      // the traceless diagonal torus lies in h for any block split
      for (int a = 0; a + 1 < n; ++a) {
        CMat x = CMat::Zero(n, n);
        x(a, a) = kI;
        x(a + 1, a + 1) = -kI;
        h.push_back(std::move(x));
      }
      break;
    }
    case Family::SP:
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) route(a, b, sp_pair_elems(n, a, b));
      break;
    default: break;
  }
  return assemble(std::move(alg), std::move(h), std::move(p));
}

GradedDecomposition make_su_u(int l, int max_matrix_size) {
  if (l < 2) throw InputError("make_su_u: l >= 2");
  if (2 * l > max_matrix_size)
    throw ResourceError("make_su_u: matrix size " + std::to_string(2 * l) +
                        " exceeds the cap");
  LieAlg alg = build_classical(Family::SU, 2 * l);
  CMat j = CMat::Zero(2 * l, 2 * l);
  j.topRightCorner(l, l) = CMat::Identity(l, l);
  j.bottomLeftCorner(l, l) = -CMat::Identity(l, l);
  CMat jinv = -j;
  Involution twist(
      alg, [j, jinv](const CMat& x) { return CMat(j * x.conjugate() * jinv); },
      "symplectic twist");
  Involution conj = entrywise_conjugation(alg);
  return simultaneous_eigenspaces(alg, twist, conj);
}

GradedDecomposition make_so_u(int l, int max_matrix_size) {
  if (l < 4) throw InputError("make_so_u: l >= 4");
  if (2 * l > max_matrix_size)
    throw ResourceError("make_so_u: matrix size " + std::to_string(2 * l) +
                        " exceeds the cap");
  LieAlg alg = build_classical(Family::SO, 2 * l);
  Involution s1 = block_sign_involution(alg, {{-1, 2}, {+1, 2 * l - 2}});
  CMat j0 = CMat::Zero(2 * l, 2 * l);
  for (int c = 0; c < l; ++c) {
    j0(2 * c, 2 * c + 1) = -1.0;
    j0(2 * c + 1, 2 * c) = 1.0;
  }
  Involution s2 = conjugation_involution(alg, j0, "complex structure conjugation");
  GradedDecomposition dec = simultaneous_eigenspaces(alg, s1, s2);
  // put the two conjugate off-diagonal modules first, matching
  // (d1, d2, d3) = (2(l-1), 2(l-1), (l-1)(l-2))
  std::swap(dec.p2_basis, dec.p3_basis);
  std::swap(dec.d2, dec.d3);
  return dec;
}

GradedDecomposition make_ledger_obata(Family f_family, int f_param,
                                      int max_f_matrix_size) {
  bool simple = (f_family == Family::SO && f_param >= 3 && f_param != 4) ||
                (f_family == Family::SU && f_param >= 2) ||
                (f_family == Family::SP && f_param >= 1);
  if (!simple)
    throw InputError("make_ledger_obata: f must be a simple classical algebra");
  LieAlg f = build_classical(f_family, f_param);
  if (f.matrix_size() > max_f_matrix_size)
    throw ResourceError("make_ledger_obata: f matrix size exceeds the cap");
  LieAlg alg = build_sum_copies(f, 4);
  Involution s1 = permutation_involution(alg, {2, 3, 0, 1});
  Involution s2 = permutation_involution(alg, {1, 0, 3, 2});
  return simultaneous_eigenspaces(alg, s1, s2);
}

}  // namespace wallach
