#include "ldg1d/problems.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ldg1d {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Test 2 source; equals u_xx of the exact solution away from x = 0.
double test2_S(double x) {
  const double common = -4.0 * x * x * std::sin(x * std::abs(x)) + 2.0 * std::cos(0.5 * x) + 2.0;
  if (x == 0.0) return common;
  return 2.0 * sgn(x) * std::cos(x * x) + common;
}

double test3_S(double x) {
  const double ax = std::abs(x);
  const double tail = -4.0 * ax * ax * ax + x * ax * ax * ax;
  return (x < 0.0 ? -12.0 * x * x : 24.0 * x * x) + tail;
}

double test4_S(double x) {
  const double lx = std::log(x);
  const double x4 = x * x * x * x;
  return (4.0 * lx * lx + 12.0 * lx + 9.0 - 8.0 * x4 * lx * lx - 4.0 * x4 * lx) /
         (4.0 * x * x * x * (2.0 * lx + 1.0));
}

// Infimum over theta in (0,1] of -theta p + theta^2 x^2 q + u/x + S(x),
// together with the active theta (0 encodes the theta -> 0+ limit).
std::pair<double, double> test4_reduce(double p, double q, double u, double x) {
  const double base = u / x + test4_S(x);
  double best = base;  // theta -> 0+
  double theta = 0.0;
  const double a2 = x * x * q;
  const double v1 = -p + a2 + base;
  if (v1 < best) {
    best = v1;
    theta = 1.0;
  }
  if (a2 > 0.0) {
    const double ts = p / (2.0 * a2);
    if (ts > 0.0 && ts <= 1.0) {
      const double vs = -0.25 * p * p / a2 + base;
      if (vs < best) {
        best = vs;
        theta = ts;
      }
    }
  }
  return {best, theta};
}

// Test 7 coefficient; c = 1 exactly where cos(t) sin(x) > 0 for t in (0, pi].
double test7_c(double x, double t) {
  const bool one = (t > 0.0 && t <= 0.5 * M_PI && x > 0.0 && x <= M_PI) ||
                   (t > 0.5 * M_PI && t <= M_PI && x > M_PI && x < 2.0 * M_PI);
  return one ? 1.0 : 0.5;
}

}  // namespace

Problem test1() {
  Problem pr;
  pr.name = "test1";
  pr.kind = Problem::Kind::elliptic;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.alpha_paper = 10.0;
  pr.op.f = [](double p, double, double, double, double) { return -p * p + 1.0; };
  pr.op.df_dp = [](double p, double, double, double, double) { return -2.0 * p; };
  pr.op.df_dq = [](double, double, double, double, double) { return 0.0; };
  pr.op.df_du = [](double, double, double, double, double) { return 0.0; };
  pr.bc = BoundaryData::constants(0.0, 0.5);
  pr.exact = [](double x, double) { return 0.5 * x * x; };
  pr.exact_x = [](double x, double) { return x; };
  pr.exact_xx = [](double, double) { return 1.0; };
  return pr;
}

Problem test2() {
  Problem pr;
  pr.name = "test2";
  pr.kind = Problem::Kind::elliptic;
  pr.a = -1.0;
  pr.b = 1.0;
  pr.alpha_paper = 6.0;
  pr.op.f = [](double p, double, double, double x, double) {
    const double S = test2_S(x);
    return -p * p * p + p + S * S * S - S;
  };
  pr.op.df_dp = [](double p, double, double, double, double) { return -3.0 * p * p + 1.0; };
  pr.op.df_dq = [](double, double, double, double, double) { return 0.0; };
  pr.op.df_du = [](double, double, double, double, double) { return 0.0; };
  const double ub0 = std::sin(1.0) - 8.0 * std::cos(0.5) + 9.0;
  const double ua0 = -std::sin(1.0) - 8.0 * std::cos(0.5) + 9.0;
  pr.bc = BoundaryData::constants(ua0, ub0);
  pr.exact = [](double x, double) {
    return std::sin(x * std::abs(x)) - 8.0 * std::cos(0.5 * x) + x * x + 8.0;
  };
  pr.exact_x = [](double x, double) {
    return 2.0 * std::abs(x) * std::cos(x * std::abs(x)) + 4.0 * std::sin(0.5 * x) + 2.0 * x;
  };
  pr.exact_xx = [](double x, double) { return test2_S(x); };
  pr.kinks = {0.0};
  return pr;
}

Problem test3() {
  Problem pr;
  pr.name = "test3";
  pr.kind = Problem::Kind::elliptic;
  pr.a = -1.0;
  pr.b = 1.0;
  pr.alpha_paper = 4.0;
  pr.op.f = [](double p, double q, double u, double x, double) {
    return std::min(-p, -2.0 * p) + q - u + test3_S(x);
  };
  pr.op.df_dp = [](double p, double, double, double, double) { return p >= 0.0 ? -2.0 : -1.0; };
  pr.op.df_dq = [](double, double, double, double, double) { return 1.0; };
  pr.op.df_du = [](double, double, double, double, double) { return -1.0; };
  pr.op.monotone_bound = 2.0;
  pr.bc = BoundaryData::constants(-1.0, 1.0);
  pr.exact = [](double x, double) { return x * std::abs(x) * x * x; };
  pr.exact_x = [](double x, double) { return 4.0 * std::abs(x) * x * x; };
  pr.exact_xx = [](double x, double) { return 12.0 * x * std::abs(x); };
  pr.kinks = {0.0};
  return pr;
}

Problem test4() {
  Problem pr;
  pr.name = "test4";
  pr.kind = Problem::Kind::elliptic;
  pr.a = 1.2;
  pr.b = 4.0;
  pr.alpha_paper = 4.0;
  pr.op.f = [](double p, double q, double u, double x, double) {
    return test4_reduce(p, q, u, x).first;
  };
  // envelope derivatives at the active control
  pr.op.df_dp = [](double p, double q, double u, double x, double) {
    return -test4_reduce(p, q, u, x).second;
  };
  pr.op.df_dq = [](double p, double q, double u, double x, double) {
    const double th = test4_reduce(p, q, u, x).second;
    return th * th * x * x;
  };
  pr.op.df_du = [](double, double, double, double x, double) { return 1.0 / x; };
  pr.op.monotone_bound = 1.0;
  pr.bc = BoundaryData::constants(1.44 * std::log(1.2), 16.0 * std::log(4.0));
  pr.exact = [](double x, double) { return x * x * std::log(x); };
  pr.exact_x = [](double x, double) { return 2.0 * x * std::log(x) + x; };
  pr.exact_xx = [](double x, double) { return 2.0 * std::log(x) + 3.0; };
  return pr;
}

Problem test5() {
  Problem pr;
  pr.name = "test5";
  pr.kind = Problem::Kind::parabolic;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.T_paper = 1.0;
  pr.alpha_paper = 2.0;
  pr.op.f = [](double p, double, double u, double x, double t) {
    return -p * u + 0.5 * x * x + t * t * t * t - 4.0 * t * t * t + 1.0;
  };
  pr.op.df_dp = [](double, double, double u, double, double) { return -u; };
  pr.op.df_dq = [](double, double, double, double, double) { return 0.0; };
  pr.op.df_du = [](double p, double, double, double, double) { return -p; };
  pr.bc.left = [](double t) { return 1.0 + t * t * t * t; };
  pr.bc.right = [](double t) { return 1.5 + t * t * t * t; };
  pr.u0 = [](double x) { return 0.5 * x * x + 1.0; };
  pr.exact = [](double x, double t) { return 0.5 * x * x + t * t * t * t + 1.0; };
  pr.exact_x = [](double x, double) { return x; };
  pr.exact_xx = [](double, double) { return 1.0; };
  pr.exact_t = [](double, double t) { return 4.0 * t * t * t; };
  return pr;
}

Problem test6() {
  Problem pr;
  pr.name = "test6";
  pr.kind = Problem::Kind::parabolic;
  pr.a = 0.0;
  pr.b = 2.0;
  pr.T_paper = 0.5;
  pr.alpha_paper = 4.0;
  const auto S = [](double x, double t) {
    const double e = std::exp((t + 1.0) * x);
    return e * ((t + 1.0) * std::log((t + 1.0) * (t + 1.0) * e + 1.0) - x);
  };
  pr.op.f = [S](double p, double q, double, double x, double t) {
    return -q * std::log(p + 1.0) + S(x, t);
  };
  pr.op.df_dp = [](double p, double q, double, double, double) { return -q / (p + 1.0); };
  pr.op.df_dq = [](double p, double, double, double, double) { return -std::log(p + 1.0); };
  pr.op.df_du = [](double, double, double, double, double) { return 0.0; };
  pr.bc.left = [](double) { return 1.0; };
  pr.bc.right = [](double t) { return std::exp(2.0 * (t + 1.0)); };
  pr.u0 = [](double x) { return std::exp(x); };
  pr.exact = [](double x, double t) { return std::exp((t + 1.0) * x); };
  pr.exact_x = [](double x, double t) { return (t + 1.0) * std::exp((t + 1.0) * x); };
  pr.exact_xx = [](double x, double t) { return (t + 1.0) * (t + 1.0) * std::exp((t + 1.0) * x); };
  pr.exact_t = [](double x, double t) { return x * std::exp((t + 1.0) * x); };
  return pr;
}

Problem test7() {
  Problem pr;
  pr.name = "test7";
  pr.kind = Problem::Kind::parabolic;
  pr.a = 0.0;
  pr.b = 2.0 * M_PI;
  pr.T_paper = 3.10;
  pr.alpha_paper = 2.0;
  pr.op.f = [](double p, double, double, double x, double t) {
    const double amin = std::min(p, 0.5 * p);  // min over A_theta in {1, 1/2}
    return -amin - test7_c(x, t) * std::cos(t) * std::sin(x) + std::sin(t) * std::sin(x);
  };
  pr.op.df_dp = [](double p, double, double, double, double) { return p < 0.0 ? -1.0 : -0.5; };
  pr.op.df_dq = [](double, double, double, double, double) { return 0.0; };
  pr.op.df_du = [](double, double, double, double, double) { return 0.0; };
  pr.op.monotone_bound = 1.0;
  pr.bc = BoundaryData::constants(0.0, 0.0);
  pr.u0 = [](double x) { return std::sin(x); };
  pr.exact = [](double x, double t) { return std::cos(t) * std::sin(x); };
  pr.exact_x = [](double x, double t) { return std::cos(t) * std::cos(x); };
  pr.exact_xx = [](double x, double t) { return -std::cos(t) * std::sin(x); };
  pr.exact_t = [](double x, double t) { return -std::sin(t) * std::sin(x); };
  return pr;
}

Problem test8() {
  Problem pr;
  pr.name = "test8";
  pr.kind = Problem::Kind::parabolic;
  pr.a = 0.0;
  pr.b = 3.0;
  pr.T_paper = 1.0;
  pr.alpha_paper = 2.0;
  pr.op.f = [](double p, double q, double, double x, double t) {
    const double ax = std::abs(x - 1.0);
    // inf over theta in [-1,1] of ax*p + theta*q is ax*p - |q|
    return -(ax * p - std::abs(q)) + ax * ax * (ax + 3.0) * std::exp(-t);
  };
  pr.op.df_dp = [](double, double, double, double x, double) { return -std::abs(x - 1.0); };
  pr.op.df_dq = [](double, double q, double, double, double) { return sgn(q); };
  pr.op.df_du = [](double, double, double, double, double) { return 0.0; };
  pr.op.monotone_bound = 2.0;
  pr.bc.left = [](double t) { return std::exp(-t); };
  pr.bc.right = [](double t) { return 8.0 * std::exp(-t); };
  pr.u0 = [](double x) {
    const double ax = std::abs(x - 1.0);
    return ax * ax * ax;
  };
  pr.exact = [](double x, double t) {
    const double ax = std::abs(x - 1.0);
    return ax * ax * ax * std::exp(-t);
  };
  pr.exact_x = [](double x, double t) {
    return 3.0 * (x - 1.0) * std::abs(x - 1.0) * std::exp(-t);
  };
  pr.exact_xx = [](double x, double t) { return 6.0 * std::abs(x - 1.0) * std::exp(-t); };
  pr.exact_t = [](double x, double t) {
    const double ax = std::abs(x - 1.0);
    return -ax * ax * ax * std::exp(-t);
  };
  pr.kinks = {1.0};
  return pr;
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {"test1", "test2", "test3", "test4",
                                                 "test5", "test6", "test7", "test8"};
  return names;
}

Problem problem_by_name(const std::string& name) {
  if (name == "test1") return test1();
  if (name == "test2") return test2();
  if (name == "test3") return test3();
  if (name == "test4") return test4();
  if (name == "test5") return test5();
  if (name == "test6") return test6();
  if (name == "test7") return test7();
  if (name == "test8") return test8();
  throw std::invalid_argument("unknown problem '" + name + "' (expected test1..test8)");
}

SelectionFixtures selection_fixtures() {
  SelectionFixtures f;
  f.mu = [](double x) {
    return x < 0.5 ? 0.5 * x * x + 0.25 * x : -0.5 * x * x + 1.25 * x - 0.25;
  };
  f.u_plus = [](double x) { return 0.5 * x * x; };
  f.u_minus = [](double x) { return -0.5 * x * x + x; };
  f.u_bar = [](double x) { return 0.5 * x; };
  return f;
}

std::vector<OperatorSample> make_operator_samples(const Problem& prob, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double margin = 1e-6 * (prob.b - prob.a);
  std::uniform_real_distribution<double> xs(prob.a + margin, prob.b - margin);
  std::uniform_real_distribution<double> ts(0.0, prob.kind == Problem::Kind::parabolic ? prob.T_paper : 0.0);

  std::vector<OperatorSample> samples;
  samples.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(samples.size()) < count) {
    const double x = xs(rng);
    bool near_kink = false;
    for (const double k : prob.kinks) near_kink = near_kink || std::abs(x - k) <= 1e-3;
    if (near_kink) continue;
    const double t = prob.kind == Problem::Kind::parabolic ? ts(rng) : 0.0;
    OperatorSample s;
    s.x = x;
    s.t = t;
    s.p = prob.exact_xx(x, t) * (1.0 + 0.3 * unit(rng)) + 0.1 * unit(rng);
    s.q = prob.exact_x(x, t) * (1.0 + 0.3 * unit(rng)) + 0.1 * unit(rng);
    s.u = prob.exact(x, t) * (1.0 + 0.3 * unit(rng)) + 0.1 * unit(rng);
    samples.push_back(s);
  }
  return samples;
}

double exact_pde_residual(const Problem& prob, double x, double t) {
  double r = prob.op.f(prob.exact_xx(x, t), prob.exact_x(x, t), prob.exact(x, t), x, t);
  if (prob.kind == Problem::Kind::parabolic) r += prob.exact_t(x, t);
  return std::abs(r);
}

}  // namespace ldg1d
