#include "wallach/liealg.hpp"

#include <cmath>
#include <utility>

#include "wallach/errors.hpp"

namespace wallach {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

CMat zero(int n) { return CMat::Zero(n, n); }

// E_ab - E_ba
CMat elem_antisym(int n, int a, int b) {
  CMat x = zero(n);
  x(a, b) = 1.0;
  x(b, a) = -1.0;
  return x;
}

// i(E_ab + E_ba) for a < b, i E_aa on the diagonal
CMat elem_sym_imag(int n, int a, int b) {
  CMat x = zero(n);
  x(a, b) = kI;
  x(b, a) = kI;
  return x;
}

// E_ab + E_ba for a < b, E_aa on the diagonal
CMat elem_sym_real(int n, int a, int b) {
  CMat x = zero(n);
  x(a, b) = 1.0;
  x(b, a) = 1.0;
  return x;
}

// Re tr(XY) without forming the product.
double re_trace_prod(const CMat& x, const CMat& y) {
  return x.cwiseProduct(y.transpose()).sum().real();
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::SO: return "so";
    case Family::SU: return "su";
    case Family::SP: return "sp";
    case Family::Sum: return "sum";
  }
  return "?";
}

CMat bracket(const CMat& x, const CMat& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw InputError("bracket: operands must be square matrices of equal size");
  return x * y - y * x;
}

double anti_hermitian_defect(const CMat& x) {
  return (x + x.adjoint()).cwiseAbs().maxCoeff();
}

LieAlg::LieAlg(Family family, std::vector<int> params, std::vector<CMat> basis,
               Rational killing_coeff)
    : family_(family),
      params_(std::move(params)),
      basis_(std::move(basis)),
      killing_coeff_(std::move(killing_coeff)),
      kappa_(to_double(killing_coeff_)) {
  if (basis_.empty()) {
    msize_ = 0;
    gram_.resize(0, 0);
    return;
  }
  msize_ = static_cast<int>(basis_.front().rows());
  for (const CMat& b : basis_)
    if (b.rows() != msize_ || b.cols() != msize_)
      throw InputError("LieAlg: basis elements must share one square size");

  const int d = dim();
  gram_.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      gram_(i, j) = gram_(j, i) = inner(basis_[i], basis_[j]);
  gram_ldlt_.compute(gram_);
}

double LieAlg::inner(const CMat& x, const CMat& y) const {
  return -kappa_ * re_trace_prod(x, y);
}

double LieAlg::norm(const CMat& x) const {
  double q = inner(x, x);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

Eigen::VectorXd LieAlg::coordinates(const CMat& y, double* residual,
                                    double span_tol) const {
  const int d = dim();
  Eigen::VectorXd rhs(d);
  for (int i = 0; i < d; ++i) rhs(i) = inner(y, basis_[i]);
  Eigen::VectorXd c = gram_ldlt_.solve(rhs);

  CMat rec = zero(msize_);
  for (int i = 0; i < d; ++i) rec += c(i) * basis_[i];
  double res = (y - rec).norm() / std::max(1.0, y.norm());
  if (residual) {
    *residual = res;
  } else if (res > span_tol) {
    throw InputError("coordinates: element outside the algebra span (residual " +
                     std::to_string(res) + ")");
  }
  return c;
}

CMat LieAlg::from_coordinates(const Eigen::VectorXd& c) const {
  if (c.size() != dim()) throw InputError("from_coordinates: wrong length");
  CMat x = zero(msize_);
  for (int i = 0; i < dim(); ++i) x += c(i) * basis_[i];
  return x;
}

LieAlg build_classical(Family family, int n) {
  std::vector<CMat> basis;
  switch (family) {
    case Family::SO: {
      if (n < 2) throw InputError("so(n) requires n >= 2");
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) basis.push_back(elem_antisym(n, a, b));
      return LieAlg(Family::SO, {n}, std::move(basis), Rational(n - 2));
    }
    case Family::SU: {
      if (n < 2) throw InputError("su(n) requires n >= 2");
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) basis.push_back(elem_antisym(n, a, b));
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) basis.push_back(elem_sym_imag(n, a, b));
      for (int a = 0; a + 1 < n; ++a) {
        CMat x = zero(n);
        x(a, a) = kI;
        x(a + 1, a + 1) = -kI;
        basis.push_back(x);
      }
      return LieAlg(Family::SU, {n}, std::move(basis), Rational(2 * n));
    }
    case Family::SP: {
      if (n < 1) throw InputError("sp(n) requires n >= 1");
      const int m = 2 * n;
      auto embed_diag = [&](const CMat& a, const CMat& d) {
        CMat x = zero(m);
        x.topLeftCorner(n, n) = a;
        x.bottomRightCorner(n, n) = d;
        return x;
      };
      auto embed_off = [&](const CMat& b, const CMat& c) {
        CMat x = zero(m);
        x.topRightCorner(n, n) = b;
        x.bottomLeftCorner(n, n) = c;
        return x;
      };
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          CMat l = elem_antisym(n, a, b);
          basis.push_back(embed_diag(l, l));
        }
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          CMat s = elem_sym_imag(n, a, b);
          basis.push_back(embed_diag(s, -s));
        }
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          CMat s = elem_sym_real(n, a, b);
          basis.push_back(embed_off(s, -s));
        }
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          CMat s = elem_sym_imag(n, a, b);
          basis.push_back(embed_off(s, s));
        }
      return LieAlg(Family::SP, {n}, std::move(basis), Rational(2 * (n + 1)));
    }
    case Family::Sum:
      throw InputError("use build_sum_copies for direct sums");
  }
  throw InputError("unsupported family");
}

LieAlg build_sum_copies(const LieAlg& f, int copies) {
  if (copies < 2) throw InputError("build_sum_copies: need at least 2 copies");
  if (f.family() == Family::Sum) throw InputError("build_sum_copies: nested sums unsupported");
  const int fs = f.matrix_size();
  const int m = copies * fs;
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(copies) * f.dim());
  for (int c = 0; c < copies; ++c)
    for (const CMat& b : f.basis()) {
      CMat x = CMat::Zero(m, m);
      x.block(c * fs, c * fs, fs, fs) = b;
      basis.push_back(std::move(x));
    }
  std::vector<int> params = {copies};
  for (int p : f.params()) params.push_back(p);
  return LieAlg(Family::Sum, std::move(params), std::move(basis), f.killing_coeff());
}

double killing_form_ad(const LieAlg& alg, const CMat& x, const CMat& y) {
  const int d = alg.dim();
  double rx = 0.0, ry = 0.0;
  alg.coordinates(x, &rx);
  alg.coordinates(y, &ry);
  if (rx > 1e-8 || ry > 1e-8)
    throw InputError("killing_form_ad: argument outside the algebra span");

  Eigen::MatrixXd ad_x(d, d), ad_y(d, d);
  for (int j = 0; j < d; ++j) {
    ad_x.col(j) = alg.coordinates(bracket(x, alg.basis()[j]));
    ad_y.col(j) = alg.coordinates(bracket(y, alg.basis()[j]));
  }
  return ad_x.cwiseProduct(ad_y.transpose()).sum();
}

std::vector<CMat> orthonormalize(const LieAlg& alg, const std::vector<CMat>& vectors) {
  std::vector<CMat> out;
  out.reserve(vectors.size());
  for (const CMat& v : vectors) {
    CMat w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const CMat& q : out) w -= alg.inner(w, q) * q;
    double nrm = alg.norm(w);
    if (nrm < 1e-10)
      throw DegeneracyError("orthonormalize: dependent input (pivot " +
                            std::to_string(nrm) + ")");
    out.push_back(w / nrm);
  }
  return out;
}

}  // namespace wallach
