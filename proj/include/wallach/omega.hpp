#pragma once

#include <array>
#include <string>
#include <vector>

#include "wallach/rational.hpp"

namespace wallach {

/// A parameter triple (a1, a2, a3). Exact rationals are the source of truth;
/// floating evaluation exists for grid slices.
struct APoint {
  Rational a1, a2, a3;
};

/// Q(a1,a2,a3): the degree-12 symmetric polynomial through the elementary
/// symmetric functions s1, s2, s3, evaluated in its five-summand product form.
/// Works for Rational (exact) and double.
template <typename T>
T eval_q_sym(const T& s1, const T& s2, const T& s3) {
  T s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1, s1_5 = s1_4 * s1;
  T s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_3 * s2;
  T s3_2 = s3 * s3, s3_3 = s3_2 * s3;
  T t1 = (2 * s1 + 4 * s3 - 1) *
         (64 * s1_5 - 64 * s1_4 + 8 * s1_3 + 12 * s1_2 - 6 * s1 + 1 + 240 * s3 * s1_2 -
          240 * s3 * s1 - 1536 * s3_2 * s1 - 4096 * s3_3 + 60 * s3 + 768 * s3_2);
  T t2 = -8 * s1 * (2 * s1 + 4 * s3 - 1) * (2 * s1 - 32 * s3 - 1) *
         (10 * s1 + 32 * s3 - 5) * s2;
  T t3 = -16 * s1_2 * (13 - 52 * s1 + 640 * s3 * s1 + 1024 * s3_2 - 320 * s3 + 52 * s1_2) *
         s2_2;
  T t4 = 64 * (2 * s1 - 1) * (2 * s1 - 32 * s3 - 1) * s2_3;
  T t5 = 2048 * s1 * (2 * s1 - 1) * s2_4;
  return t1 + t2 + t3 + t4 + t5;
}

template <typename T>
T eval_q(const T& a1, const T& a2, const T& a3) {
  T s1 = a1 + a2 + a3;
  T s2 = a1 * a2 + a1 * a3 + a2 * a3;
  T s3 = a1 * a2 * a3;
  return eval_q_sym(s1, s2, s3);
}

Rational eval_q(const APoint& p);

/// Float mode; `scale` (if given) receives the sum of summand magnitudes, the
/// reference for the zero tolerance 1e-12 * scale.
double eval_q_scaled(double a1, double a2, double a3, double* scale = nullptr);

/// Q expanded over monomials in (s1, s2, s3); built once from the product form.
struct STerm {
  int e1, e2, e3;
  long long coeff;
};
const std::vector<STerm>& q_sym_terms();
/// dQ/ds1, dQ/ds2, dQ/ds3 as monomial tables.
const std::array<std::vector<STerm>, 3>& q_sym_gradient();

/// Exact partial derivatives (dQ/da1, dQ/da2, dQ/da3) via the chain rule
/// through (s1, s2, s3).
std::array<Rational, 3> grad_q(const APoint& p);
std::array<double, 3> grad_q(double a1, double a2, double a3);

struct CurvePoint {
  APoint p;
  bool inside_cube;  // within the closed cube [0,1/2]^3
};

/// The singular-point curve a1 = -(16t^3 - 4t + 1) / (2(8t^2 - 1)), a2 = a3 = t.
/// Q and grad Q vanish identically along it. Throws InputError at the pole
/// 8t^2 = 1 (never hit by rational t).
CurvePoint singular_curve_point(const Rational& t);

enum class ComponentLabel { O1, O2, O3, OnOmega, OutsideOpenCube, Unresolved };
std::string label_name(ComponentLabel label);

struct SegmentProbe {
  std::string target;
  int samples = 0;
  bool crossed = false;  // a sign change or an exact zero was sampled
};

struct Witness {
  int q_sign = 0;
  std::string method;
  std::vector<SegmentProbe> probes;
};

struct Classification {
  ComponentLabel label = ComponentLabel::Unresolved;
  Witness witness;
};

struct ClassifyOptions {
  int segment_samples = 4096;
};

/// Component classification of an exact-rational triple. Q > 0 identifies O3
/// by sign alone; Q < 0 points are connected to the O1/O2 seeds by sampled
/// segments (a detected crossing is inconclusive and triggers the fallback
/// polyline through the diagonal). Unresolved is a value, not a failure.
Classification classify(const APoint& p, const ClassifyOptions& opts = {});

/// Float-mode entry: |Q| within 1e-12 * (summand scale) counts as OnOmega;
/// otherwise the coordinates (exact dyadic rationals) take the exact path.
Classification classify(double a1, double a2, double a3,
                        const ClassifyOptions& opts = {});

struct SingularProfile {
  int total = 0;
  int saddles = 0;
  int nodes = 0;
  std::string node_type;  // "unstable node", "stable node", or empty
};

/// Singular-point profile of the normalized flow for points of O1/O2/O3.
SingularProfile singular_profile(ComponentLabel label);

struct SliceSegment {
  double a1_start, a2_start, a1_end, a2_end;
};

/// Marching-squares zero contour of Q(.,.,a3) on a grid_n x grid_n cell grid
/// over [0,1/2]^2, with linear root interpolation per cell edge. Rows are
/// evaluated in parallel; output order is deterministic.
std::vector<SliceSegment> surface_slice(double a3, int grid_n);
std::vector<SliceSegment> surface_slice_serial(double a3, int grid_n);

/// CSV with header a1_start,a2_start,a1_end,a2_end at 17 significant digits.
std::string slice_csv(const std::vector<SliceSegment>& segments);

}  // namespace wallach
