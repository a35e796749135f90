#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "wallach/errors.hpp"
#include "wallach/omega.hpp"

using namespace wallach;

namespace {

Rational R(long long n, long long d) { return Rational(n, d); }

APoint pt(const char* a, const char* b, const char* c) {
  return {parse_rational(a), parse_rational(b), parse_rational(c)};
}

// expansion of Q over s-monomials, derived independently with a computer
// algebra system and frozen here
const std::map<std::array<int, 3>, long long> kQTermsOracle = {
    {{0, 0, 0}, -1},     {{0, 0, 1}, -56},    {{0, 0, 2}, -528},
    {{0, 0, 3}, 7168},   {{0, 0, 4}, -16384}, {{0, 3, 0}, 64},
    {{0, 3, 1}, 2048},   {{1, 0, 0}, 8},      {{1, 0, 1}, 336},
    {{1, 0, 2}, 2112},   {{1, 0, 3}, -14336}, {{1, 1, 0}, 40},
    {{1, 1, 1}, 864},    {{1, 1, 2}, -12288}, {{1, 1, 3}, 32768},
    {{1, 3, 0}, -256},   {{1, 3, 1}, -4096},  {{1, 4, 0}, -2048},
    {{2, 0, 0}, -24},    {{2, 0, 1}, -672},   {{2, 0, 2}, -2112},
    {{2, 1, 0}, -240},   {{2, 1, 1}, -3456},  {{2, 1, 2}, 24576},
    {{2, 2, 0}, -208},   {{2, 2, 1}, 5120},   {{2, 2, 2}, -16384},
    {{2, 3, 0}, 256},    {{2, 4, 0}, 4096},   {{3, 0, 0}, 16},
    {{3, 0, 1}, 512},    {{3, 1, 0}, 480},    {{3, 1, 1}, 3456},
    {{3, 2, 0}, 832},    {{3, 2, 1}, -10240}, {{4, 0, 0}, 80},
    {{4, 0, 1}, -256},   {{4, 1, 0}, -320},   {{4, 2, 0}, -832},
    {{5, 0, 0}, -192},   {{5, 0, 1}, 256},    {{6, 0, 0}, 128}};

}  // namespace

TEST_CASE("expanded s-monomial table matches the frozen oracle") {
  const auto& terms = q_sym_terms();
  REQUIRE(terms.size() == kQTermsOracle.size());
  for (const STerm& t : terms) {
    auto it = kQTermsOracle.find({t.e1, t.e2, t.e3});
    REQUIRE(it != kQTermsOracle.end());
    CHECK(it->second == t.coeff);
  }
}

TEST_CASE("eval_q: pinned exact values") {
  CHECK(eval_q(pt("0", "0", "0")) == Rational(-1));
  CHECK(eval_q(pt("1/6", "1/6", "1/6")) == R(-256, 531441));
  CHECK(eval_q(pt("1/4", "1/4", "1/4")) == Rational(0));
  CHECK(eval_q(pt("1/6", "1/4", "1/3")) == R(2107, 1679616));
  CHECK(eval_q(pt("1/3", "1/3", "1/6")) == R(32, 6561));
  CHECK(eval_q(pt("3/8", "1/4", "1/8")) == R(397, 65536));
  CHECK(eval_q(pt("1/4", "1/4", "1/6")) == R(1, 11664));
  CHECK(eval_q(pt("5/18", "5/18", "5/18")) == R(-38416, 282429536481LL));
  CHECK(eval_q(pt("1/8", "1/16", "3/16")) == R(-2701073, 268435456));
}

TEST_CASE("eval_q vanishes on the boundary triangle edge") {
  for (int k = 0; k <= 20; ++k) {
    Rational t(k, 40);
    CHECK(eval_q<Rational>(t, Rational(1, 2) - t, Rational(0)) == 0);
  }
}

TEST_CASE("product form and expanded form agree exactly") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> den(1, 60);
  for (int trial = 0; trial < 200; ++trial) {
    auto rnd = [&] {
      int d = den(rng);
      std::uniform_int_distribution<int> num(-d, 2 * d);
      return Rational(num(rng), d);
    };
    Rational a = rnd(), b = rnd(), c = rnd();
    Rational s1 = a + b + c, s2 = a * b + a * c + b * c, s3 = a * b * c;
    Rational via_terms = 0;
    std::array<Rational, 8> p1, p2, p3;
    p1[0] = p2[0] = p3[0] = 1;
    for (int i = 1; i < 8; ++i) {
      p1[i] = p1[i - 1] * s1;
      p2[i] = p2[i - 1] * s2;
      p3[i] = p3[i - 1] * s3;
    }
    for (const STerm& t : q_sym_terms())
      via_terms += Rational(t.coeff) * p1[t.e1] * p2[t.e2] * p3[t.e3];
    CHECK(via_terms == eval_q(a, b, c));
  }
}

TEST_CASE("grad_q: exact pinned values and float cross-check") {
  auto g0 = grad_q(pt("1/4", "1/4", "1/4"));
  CHECK(g0[0] == 0);
  CHECK(g0[1] == 0);
  CHECK(g0[2] == 0);

  auto g1 = grad_q(pt("1/8", "1/16", "3/16"));
  CHECK(g1[0] == R(3248907, 16777216));
  CHECK(g1[1] == R(6824523, 33554432));
  CHECK(g1[2] == R(6260123, 33554432));

  // float mode vs central differences
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.02, 0.48);
  const double h = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    double a = u(rng), b = u(rng), c = u(rng);
    auto g = grad_q(a, b, c);
    double fd[3] = {
        (eval_q_scaled(a + h, b, c) - eval_q_scaled(a - h, b, c)) / (2 * h),
        (eval_q_scaled(a, b + h, c) - eval_q_scaled(a, b - h, c)) / (2 * h),
        (eval_q_scaled(a, b, c + h) - eval_q_scaled(a, b, c - h)) / (2 * h)};
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(g[i] - fd[i]) <= 1e-6 * std::max(1.0, std::abs(g[i])));
  }
}

TEST_CASE("float and exact evaluation agree to roundoff") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> den(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    int d1 = den(rng), d2 = den(rng), d3 = den(rng);
    std::uniform_int_distribution<int> n1(0, d1), n2(0, d2), n3(0, d3);
    Rational a(n1(rng), d1), b(n2(rng), d2), c(n3(rng), d3);
    double scale = 0;
    double approx = eval_q_scaled(to_double(a), to_double(b), to_double(c), &scale);
    double exact = to_double(eval_q(a, b, c));
    CHECK(std::abs(approx - exact) <= 1e-12 * scale);
  }
}

TEST_CASE("singular curve: pinned points and identities") {
  CurvePoint quarter = singular_curve_point(R(1, 4));
  CHECK(quarter.p.a1 == R(1, 4));
  CHECK(quarter.inside_cube);

  CurvePoint fifth = singular_curve_point(R(1, 5));
  CHECK(fifth.p.a1 == R(41, 170));
  CHECK(eval_q(fifth.p) == 0);
  auto g = grad_q(fifth.p);
  CHECK(g[0] == 0);
  CHECK(g[1] == 0);
  CHECK(g[2] == 0);

  CurvePoint half = singular_curve_point(R(1, 2));
  CHECK(half.p.a1 == R(-1, 2));
  CHECK_FALSE(half.inside_cube);

  // cusp: a1(t) reaches 1/2 at t = (sqrt5 - 1)/4 (float check)
  double t = (std::sqrt(5.0) - 1.0) / 4.0;
  double a1 = -(16 * t * t * t - 4 * t + 1) / (2 * (8 * t * t - 1));
  CHECK(std::abs(a1 - 0.5) <= 1e-12);
}

TEST_CASE("classify: seeds, pinned assignments, equivariance") {
  CHECK(classify(pt("1/6", "1/6", "1/6")).label == ComponentLabel::O1);
  CHECK(classify(pt("7/15", "7/15", "7/15")).label == ComponentLabel::O2);
  CHECK(classify(pt("1/6", "1/4", "1/3")).label == ComponentLabel::O3);

  CHECK(classify(pt("5/18", "5/18", "5/18")).label == ComponentLabel::O2);
  CHECK(classify(pt("4/15", "4/15", "4/15")).label == ComponentLabel::O2);
  CHECK(classify(pt("1/3", "1/3", "1/6")).label == ComponentLabel::O3);
  CHECK(classify(pt("3/8", "1/4", "1/8")).label == ComponentLabel::O3);
  CHECK(classify(pt("1/8", "1/8", "1/4")).label == ComponentLabel::O1);

  // a non-diagonal point of each negative-sign component
  Classification o1 = classify(pt("1/8", "1/8", "1/4"));
  CHECK(o1.witness.method == "segment-O1");
  Classification o2 = classify(pt("4/9", "4/9", "2/5"));
  CHECK(o2.label == ComponentLabel::O2);
  CHECK(o2.witness.method == "segment-O2");

  // equivariance under all six permutations
  for (const auto& c : {std::array<const char*, 3>{"1/8", "1/4", "1/8"},
                        {"9/20", "7/20", "2/5"}, {"1/3", "1/6", "1/4"}}) {
    ComponentLabel base = classify(pt(c[0], c[1], c[2])).label;
    CHECK(classify(pt(c[0], c[2], c[1])).label == base);
    CHECK(classify(pt(c[1], c[0], c[2])).label == base);
    CHECK(classify(pt(c[1], c[2], c[0])).label == base);
    CHECK(classify(pt(c[2], c[0], c[1])).label == base);
    CHECK(classify(pt(c[2], c[1], c[0])).label == base);
  }
}

TEST_CASE("classify: boundary, on-surface, and domain handling") {
  CHECK(classify(pt("0", "1/4", "1/4")).label == ComponentLabel::OutsideOpenCube);
  CHECK(classify(pt("1/2", "1/4", "1/4")).label == ComponentLabel::OutsideOpenCube);
  CHECK(classify(pt("3/4", "1/4", "1/4")).label == ComponentLabel::OutsideOpenCube);
  CHECK(classify(pt("1/4", "1/4", "1/4")).label == ComponentLabel::OnOmega);
  // interior singular-curve point lies on the surface
  CurvePoint cp = singular_curve_point(R(1, 5));
  CHECK(classify(cp.p).label == ComponentLabel::OnOmega);
  // crossed first probe, clean second
  Classification far_o2 = classify(pt("49/100", "7/20", "7/20"));
  CHECK(far_o2.label == ComponentLabel::O2);
  REQUIRE(far_o2.witness.probes.size() == 2);
  CHECK(far_o2.witness.probes[0].crossed);
  CHECK_FALSE(far_o2.witness.probes[1].crossed);
}

TEST_CASE("classify in float mode") {
  // dyadic doubles take the exact path
  CHECK(classify(0.25, 0.25, 0.25).label == ComponentLabel::OnOmega);
  CHECK(classify(0.125, 0.125, 0.25).label == ComponentLabel::O1);
  // double-rounded 1/6 is a nearby dyadic diagonal point, still O1
  double sixth = 1.0 / 6.0;
  CHECK(classify(sixth, sixth, sixth).label == ComponentLabel::O1);
  // a point within float tolerance of the surface near the degree-3 zero
  Classification near = classify(0.25 + 1e-15, 0.25, 0.25);
  CHECK(near.label == ComponentLabel::OnOmega);
  CHECK(near.witness.method == "on-omega-float-tolerance");
}

TEST_CASE("singular profiles per component") {
  SingularProfile p1 = singular_profile(ComponentLabel::O1);
  CHECK(p1.total == 4);
  CHECK(p1.saddles == 3);
  CHECK(p1.node_type == "unstable node");
  SingularProfile p2 = singular_profile(ComponentLabel::O2);
  CHECK(p2.total == 4);
  CHECK(p2.node_type == "stable node");
  SingularProfile p3 = singular_profile(ComponentLabel::O3);
  CHECK(p3.total == 2);
  CHECK(p3.saddles == 2);
  CHECK(p3.nodes == 0);
  CHECK_THROWS_AS(singular_profile(ComponentLabel::OnOmega), InputError);
}

TEST_CASE("surface_slice: boundary edge, umbilic, determinism") {
  auto segs0 = surface_slice(0.0, 64);
  // the zero set at a3 = 0 contains the line a1 + a2 = 1/2
  for (double x : {0.1, 0.2, 0.25, 0.3, 0.4}) {
    double best = 1e30;
    for (const SliceSegment& s : segs0) {
      best = std::min(best, std::hypot(s.a1_start - x, s.a2_start - (0.5 - x)));
      best = std::min(best, std::hypot(s.a1_end - x, s.a2_end - (0.5 - x)));
    }
    CHECK(best <= std::sqrt(2.0) * 0.5 / 64);
  }

  auto segs14 = surface_slice(0.25, 256);
  double best = 1e30;
  for (const SliceSegment& s : segs14)
    best = std::min({best, std::hypot(s.a1_start - 0.25, s.a2_start - 0.25),
                     std::hypot(s.a1_end - 0.25, s.a2_end - 0.25)});
  CHECK(best <= 2.0 * 0.5 / 256);

  auto par = surface_slice(0.25, 128);
  auto ser = surface_slice_serial(0.25, 128);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].a1_start == ser[i].a1_start);
    CHECK(par[i].a2_end == ser[i].a2_end);
  }

  CHECK_THROWS_AS(surface_slice(0.25, 8), InputError);
  CHECK_THROWS_AS(surface_slice(0.75, 64), InputError);
}

TEST_CASE("slice CSV format") {
  std::string csv = slice_csv({{0.125, 0.25, 0.1875, 0.3125}});
  CHECK(csv == "a1_start,a2_start,a1_end,a2_end\n0.125,0.25,0.1875,0.3125\n");
}
