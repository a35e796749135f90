#include "wallach/omega.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "wallach/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wallach {

Rational eval_q(const APoint& p) { return eval_q<Rational>(p.a1, p.a2, p.a3); }

double eval_q_scaled(double a1, double a2, double a3, double* scale) {
  double s1 = a1 + a2 + a3;
  double s2 = a1 * a2 + a1 * a3 + a2 * a3;
  double s3 = a1 * a2 * a3;
  double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1, s1_5 = s1_4 * s1;
  double s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_3 * s2;
  double s3_2 = s3 * s3, s3_3 = s3_2 * s3;
  double t1 = (2 * s1 + 4 * s3 - 1) *
              (64 * s1_5 - 64 * s1_4 + 8 * s1_3 + 12 * s1_2 - 6 * s1 + 1 +
               240 * s3 * s1_2 - 240 * s3 * s1 - 1536 * s3_2 * s1 - 4096 * s3_3 +
               60 * s3 + 768 * s3_2);
  double t2 = -8 * s1 * (2 * s1 + 4 * s3 - 1) * (2 * s1 - 32 * s3 - 1) *
              (10 * s1 + 32 * s3 - 5) * s2;
  double t3 = -16 * s1_2 *
              (13 - 52 * s1 + 640 * s3 * s1 + 1024 * s3_2 - 320 * s3 + 52 * s1_2) * s2_2;
  double t4 = 64 * (2 * s1 - 1) * (2 * s1 - 32 * s3 - 1) * s2_3;
  double t5 = 2048 * s1 * (2 * s1 - 1) * s2_4;
  if (scale)
    *scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5) + 1.0;
  return t1 + t2 + t3 + t4 + t5;
}

namespace {

using Mono = std::array<int, 3>;
using SPoly = std::map<Mono, long long>;

SPoly mono(long long c, int e1, int e2, int e3) { return {{{e1, e2, e3}, c}}; }

SPoly add(SPoly a, const SPoly& b) {
  for (const auto& [m, c] : b) {
    a[m] += c;
    if (a[m] == 0) a.erase(m);
  }
  return a;
}

SPoly mul(const SPoly& a, const SPoly& b) {
  SPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m = {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  return out;
}

SPoly build_q_poly() {
  SPoly s1 = mono(1, 1, 0, 0), s2 = mono(1, 0, 1, 0), s3 = mono(1, 0, 0, 1);
  SPoly one = mono(1, 0, 0, 0);
  auto lin = [&](long long c1, long long c3, long long c0) {
    return add(add(mul(mono(c1, 0, 0, 0), s1), mul(mono(c3, 0, 0, 0), s3)),
               mono(c0, 0, 0, 0));
  };
  SPoly bracket = mono(64, 5, 0, 0);
  bracket = add(bracket, mono(-64, 4, 0, 0));
  bracket = add(bracket, mono(8, 3, 0, 0));
  bracket = add(bracket, mono(12, 2, 0, 0));
  bracket = add(bracket, mono(-6, 1, 0, 0));
  bracket = add(bracket, one);
  bracket = add(bracket, mono(240, 2, 0, 1));
  bracket = add(bracket, mono(-240, 1, 0, 1));
  bracket = add(bracket, mono(-1536, 1, 0, 2));
  bracket = add(bracket, mono(-4096, 0, 0, 3));
  bracket = add(bracket, mono(60, 0, 0, 1));
  bracket = add(bracket, mono(768, 0, 0, 2));
  SPoly q = mul(lin(2, 4, -1), bracket);

  SPoly t2 = mul(mono(-8, 1, 1, 0), mul(lin(2, 4, -1), mul(lin(2, -32, -1), lin(10, 32, -5))));
  q = add(q, t2);

  SPoly inner3 = add(add(mono(13, 0, 0, 0), mono(-52, 1, 0, 0)),
                     add(add(mono(640, 1, 0, 1), mono(1024, 0, 0, 2)),
                         add(mono(-320, 0, 0, 1), mono(52, 2, 0, 0))));
  q = add(q, mul(mono(-16, 2, 2, 0), inner3));

  q = add(q, mul(mono(64, 0, 3, 0), mul(lin(2, 0, -1), lin(2, -32, -1))));
  q = add(q, mul(mono(2048, 1, 4, 0), lin(2, 0, -1)));
  return q;
}

std::vector<STerm> to_terms(const SPoly& p) {
  std::vector<STerm> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p) out.push_back({m[0], m[1], m[2], c});
  return out;
}

template <typename T>
T eval_terms(const std::vector<STerm>& terms, const T& s1, const T& s2, const T& s3) {
  // power caches; exponents stay small (s1^6, s2^4, s3^3)
  std::array<T, 8> p1, p2, p3;
  p1[0] = T(1);
  p2[0] = T(1);
  p3[0] = T(1);
  for (int i = 1; i < 8; ++i) {
    p1[i] = p1[i - 1] * s1;
    p2[i] = p2[i - 1] * s2;
    p3[i] = p3[i - 1] * s3;
  }
  T acc(0);
  for (const STerm& t : terms) acc += T(t.coeff) * p1[t.e1] * p2[t.e2] * p3[t.e3];
  return acc;
}

}  // namespace

const std::vector<STerm>& q_sym_terms() {
  static const std::vector<STerm> terms = to_terms(build_q_poly());
  return terms;
}

const std::array<std::vector<STerm>, 3>& q_sym_gradient() {
  static const std::array<std::vector<STerm>, 3> grads = [] {
    SPoly q = build_q_poly();
    std::array<SPoly, 3> d;
    for (const auto& [m, c] : q)
      for (int v = 0; v < 3; ++v)
        if (m[v] > 0) {
          Mono dm = m;
          dm[v] -= 1;
          d[v][dm] += c * m[v];
        }
    return std::array<std::vector<STerm>, 3>{to_terms(d[0]), to_terms(d[1]),
                                             to_terms(d[2])};
  }();
  return grads;
}

std::array<Rational, 3> grad_q(const APoint& p) {
  Rational s1 = p.a1 + p.a2 + p.a3;
  Rational s2 = p.a1 * p.a2 + p.a1 * p.a3 + p.a2 * p.a3;
  Rational s3 = p.a1 * p.a2 * p.a3;
  const auto& g = q_sym_gradient();
  Rational d1 = eval_terms<Rational>(g[0], s1, s2, s3);
  Rational d2 = eval_terms<Rational>(g[1], s1, s2, s3);
  Rational d3 = eval_terms<Rational>(g[2], s1, s2, s3);
  return {d1 + d2 * (p.a2 + p.a3) + d3 * (p.a2 * p.a3),
          d1 + d2 * (p.a1 + p.a3) + d3 * (p.a1 * p.a3),
          d1 + d2 * (p.a1 + p.a2) + d3 * (p.a1 * p.a2)};
}

std::array<double, 3> grad_q(double a1, double a2, double a3) {
  double s1 = a1 + a2 + a3;
  double s2 = a1 * a2 + a1 * a3 + a2 * a3;
  double s3 = a1 * a2 * a3;
  const auto& g = q_sym_gradient();
  double d1 = eval_terms<double>(g[0], s1, s2, s3);
  double d2 = eval_terms<double>(g[1], s1, s2, s3);
  double d3 = eval_terms<double>(g[2], s1, s2, s3);
  return {d1 + d2 * (a2 + a3) + d3 * (a2 * a3), d1 + d2 * (a1 + a3) + d3 * (a1 * a3),
          d1 + d2 * (a1 + a2) + d3 * (a1 * a2)};
}

CurvePoint singular_curve_point(const Rational& t) {
  Rational den = 8 * t * t - 1;
  if (den == 0) throw InputError("singular_curve_point: pole at 8t^2 = 1");
  Rational a1 = -(16 * t * t * t - 4 * t + 1) / (2 * den);
  CurvePoint cp{{a1, t, t}, false};
  auto in01 = [](const Rational& v) { return v >= 0 && v <= Rational(1, 2); };
  cp.inside_cube = in01(a1) && in01(t);
  return cp;
}

std::string label_name(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::O1: return "O1";
    case ComponentLabel::O2: return "O2";
    case ComponentLabel::O3: return "O3";
    case ComponentLabel::OnOmega: return "OnOmega";
    case ComponentLabel::OutsideOpenCube: return "OutsideOpenCube";
    case ComponentLabel::Unresolved: return "Unresolved";
  }
  return "?";
}

namespace {

const APoint& seed_o1() {
  static const APoint p{Rational(1, 6), Rational(1, 6), Rational(1, 6)};
  return p;
}
const APoint& seed_o2() {
  static const APoint p{Rational(7, 15), Rational(7, 15), Rational(7, 15)};
  return p;
}

// Samples Q along [from, to]; true if every sample (endpoints included) is
// strictly negative. Any zero or positive sample counts as a crossing.
bool segment_all_negative(const APoint& from, const APoint& to, int samples,
                          SegmentProbe& probe) {
  probe.samples = samples;
  probe.crossed = false;
  for (int j = 0; j <= samples; ++j) {
    Rational t(j, samples);
    APoint x{from.a1 + t * (to.a1 - from.a1), from.a2 + t * (to.a2 - from.a2),
             from.a3 + t * (to.a3 - from.a3)};
    if (sign_of(eval_q(x)) >= 0) {
      probe.crossed = true;
      return false;
    }
  }
  return true;
}

}  // namespace

Classification classify(const APoint& p, const ClassifyOptions& opts) {
  if (opts.segment_samples < 2) throw InputError("classify: need at least 2 samples");
  Classification res;
  Witness& w = res.witness;

  Rational q = eval_q(p);
  w.q_sign = sign_of(q);

  const Rational half(1, 2);
  bool inside = p.a1 > 0 && p.a1 < half && p.a2 > 0 && p.a2 < half && p.a3 > 0 &&
                p.a3 < half;
  if (!inside) {
    w.method = "outside-open-cube";
    res.label = ComponentLabel::OutsideOpenCube;
    return res;
  }
  if (q == 0) {
    w.method = "on-omega";
    res.label = ComponentLabel::OnOmega;
    return res;
  }
  if (q > 0) {
    w.method = "sign-positive";
    res.label = ComponentLabel::O3;
    return res;
  }

  const Rational quarter(1, 4);
  if (p.a1 == p.a2 && p.a2 == p.a3) {
    // interior diagonal, a != 1/4 since Q(a,a,a) = 0 only there
    w.method = "diagonal-rule";
    res.label = p.a1 < quarter ? ComponentLabel::O1 : ComponentLabel::O2;
    return res;
  }

  SegmentProbe probe{"O1-seed", 0, false};
  if (segment_all_negative(p, seed_o1(), opts.segment_samples, probe)) {
    w.probes.push_back(probe);
    w.method = "segment-O1";
    res.label = ComponentLabel::O1;
    return res;
  }
  w.probes.push_back(probe);

  // every O2 point satisfies a_i >= 1/4; use only to skip a doomed probe
  bool o2_possible = p.a1 >= quarter && p.a2 >= quarter && p.a3 >= quarter;
  if (o2_possible) {
    SegmentProbe probe2{"O2-seed", 0, false};
    if (segment_all_negative(p, seed_o2(), opts.segment_samples, probe2)) {
      w.probes.push_back(probe2);
      w.method = "segment-O2";
      res.label = ComponentLabel::O2;
      return res;
    }
    w.probes.push_back(probe2);
  }

  // fallback polyline through the diagonal point at the same s1
  Rational diag = (p.a1 + p.a2 + p.a3) / 3;
  if (diag == quarter || diag <= 0 || diag >= half) {
    w.method = "unresolved";
    res.label = ComponentLabel::Unresolved;
    return res;
  }
  APoint d{diag, diag, diag};
  SegmentProbe probe3{"diagonal-point", 0, false};
  if (!segment_all_negative(p, d, opts.segment_samples, probe3)) {
    w.probes.push_back(probe3);
    w.method = "unresolved";
    res.label = ComponentLabel::Unresolved;
    return res;
  }
  w.probes.push_back(probe3);

  const APoint& side_seed = diag < quarter ? seed_o1() : seed_o2();
  SegmentProbe probe4{diag < quarter ? "diagonal-to-O1-seed" : "diagonal-to-O2-seed", 0,
                      false};
  if (!segment_all_negative(d, side_seed, opts.segment_samples, probe4)) {
    w.probes.push_back(probe4);
    w.method = "unresolved";
    res.label = ComponentLabel::Unresolved;
    return res;
  }
  w.probes.push_back(probe4);
  w.method = "fallback-diagonal";
  res.label = diag < quarter ? ComponentLabel::O1 : ComponentLabel::O2;
  return res;
}

Classification classify(double a1, double a2, double a3, const ClassifyOptions& opts) {
  APoint p{Rational(a1), Rational(a2), Rational(a3)};
  double scale = 0.0;
  double q = eval_q_scaled(a1, a2, a3, &scale);
  bool inside = a1 > 0 && a1 < 0.5 && a2 > 0 && a2 < 0.5 && a3 > 0 && a3 < 0.5;
  if (inside && std::abs(q) <= 1e-12 * scale) {
    Classification res;
    res.label = ComponentLabel::OnOmega;
    res.witness.q_sign = sign_of(eval_q(p));
    res.witness.method = "on-omega-float-tolerance";
    return res;
  }
  return classify(p, opts);
}

SingularProfile singular_profile(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::O1: return {4, 3, 1, "unstable node"};
    case ComponentLabel::O2: return {4, 3, 1, "stable node"};
    case ComponentLabel::O3: return {2, 2, 0, ""};
    default:
      throw InputError("singular_profile: only O1, O2, O3 carry a profile");
  }
}

namespace {

std::vector<SliceSegment> slice_impl(double a3, int grid_n, bool parallel) {
  if (grid_n < 16) throw InputError("surface_slice: grid must be >= 16");
  if (a3 < 0.0 || a3 > 0.5) throw InputError("surface_slice: a3 must lie in [0,1/2]");
  const int np = grid_n + 1;
  const double step = 0.5 / grid_n;
  std::vector<double> v(static_cast<std::size_t>(np) * np);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i)
      v[static_cast<std::size_t>(j) * np + i] = eval_q_scaled(i * step, j * step, a3);
  (void)parallel;

  auto val = [&](int i, int j) { return v[static_cast<std::size_t>(j) * np + i]; };
  auto pos = [&](double x) { return x > 0.0; };

  std::vector<SliceSegment> segs;
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      double v00 = val(i, j), v10 = val(i + 1, j);
      double v01 = val(i, j + 1), v11 = val(i + 1, j + 1);
      int idx = (pos(v00) ? 1 : 0) | (pos(v10) ? 2 : 0) | (pos(v11) ? 4 : 0) |
                (pos(v01) ? 8 : 0);
      if (idx == 0 || idx == 15) continue;

      double x0 = i * step, y0 = j * step;
      auto interp = [](double va, double vb) {
        double den = va - vb;
        return den == 0.0 ? 0.5 : va / den;
      };
      // edge midpoints of the zero crossing: b(ottom), r(ight), t(op), l(eft)
      double bx = x0 + step * interp(v00, v10), by = y0;
      double rx = x0 + step, ry = y0 + step * interp(v10, v11);
      double tx = x0 + step * interp(v01, v11), ty = y0 + step;
      double lx = x0, ly = y0 + step * interp(v00, v01);

      auto emit = [&](double ax, double ay, double bx2, double by2) {
        segs.push_back({ax, ay, bx2, by2});
      };
      switch (idx) {
        case 1: case 14: emit(lx, ly, bx, by); break;
        case 2: case 13: emit(bx, by, rx, ry); break;
        case 3: case 12: emit(lx, ly, rx, ry); break;
        case 4: case 11: emit(tx, ty, rx, ry); break;
        case 6: case 9:  emit(bx, by, tx, ty); break;
        case 7: case 8:  emit(lx, ly, tx, ty); break;
        case 5: case 10: {
          double center = eval_q_scaled(x0 + 0.5 * step, y0 + 0.5 * step, a3);
          // positive corners connected through the center: contour hugs the
          // two isolated negative corners, and vice versa
          if (pos(center) == (idx == 5)) {
            emit(bx, by, rx, ry);
            emit(lx, ly, tx, ty);
          } else {
            emit(lx, ly, bx, by);
            emit(tx, ty, rx, ry);
          }
          break;
        }
        default: break;
      }
    }
  }
  return segs;
}

}  // namespace

std::vector<SliceSegment> surface_slice(double a3, int grid_n) {
  return slice_impl(a3, grid_n, true);
}

std::vector<SliceSegment> surface_slice_serial(double a3, int grid_n) {
  return slice_impl(a3, grid_n, false);
}

std::string slice_csv(const std::vector<SliceSegment>& segments) {
  std::string out = "a1_start,a2_start,a1_end,a2_end\n";
  char buf[160];
  for (const SliceSegment& s : segments) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.a1_start, s.a2_start,
                  s.a1_end, s.a2_end);
    out += buf;
  }
  return out;
}

}  // namespace wallach
