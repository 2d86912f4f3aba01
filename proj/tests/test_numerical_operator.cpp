#include <doctest.h>

#include <cmath>
#include <random>

#include "ldg1d/numerical_operator.hpp"
#include "ldg1d/problems.hpp"

using namespace ldg1d;

TEST_CASE("evaluate: moment vanishes on the diagonal") {
  const NumericalOperator op = test1().numerical(10.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double p = d(rng), q = d(rng), u = d(rng), x = 0.5, t = 0.0;
    const double fh = op.evaluate(p, p, p, p, q, q, u, x, t);
    const double f = op.base.f(p, q, u, x, t);
    CHECK(std::abs(fh - f) <= 1e-12 * (1.0 + std::abs(f)));
  }
  // u+ satisfies the PDE: all second derivatives one
  CHECK(op.evaluate(1.0, 1.0, 1.0, 1.0, 0.3, 0.3, 0.1, 0.5, 0.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("evaluate: hand-computed moment value") {
  const NumericalOperator op = test1().numerical(10.0);
  // F = -1 + 1 = 0 at (p2+p3)/2 = 1, moment = 10*(2-1-1+2)
  CHECK(op.evaluate(2.0, 1.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.5, 0.0) == doctest::Approx(20.0).epsilon(1e-13));
}

TEST_CASE("evaluate propagates non-finite values with context") {
  NumericalOperator op = test6().numerical(4.0);
  // log(p+1) with p <= -1 is not finite
  CHECK_THROWS_AS(op.evaluate(-2.0, -2.0, -2.0, -2.0, 1.0, 1.0, 0.0, 0.7, 0.1), EvaluationError);
  try {
    op.evaluate(-2.0, -2.0, -2.0, -2.0, 1.0, 1.0, 0.0, 0.7, 0.1);
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("x=") != std::string::npos);
  }
}

TEST_CASE("moment linearity in p1") {
  const NumericalOperator op = test1().numerical(7.5);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double p1 = d(rng), p2 = d(rng), p3 = d(rng), p4 = d(rng), q = d(rng);
    const double delta = 0.37;
    const double diff = op.evaluate(p1 + delta, p2, p3, p4, q, q, 0.0, 0.5, 0.0) -
                        op.evaluate(p1, p2, p3, p4, q, q, 0.0, 0.5, 0.0);
    CHECK(diff == doctest::Approx(7.5 * delta).epsilon(1e-12));
  }
}

TEST_CASE("consistency check passes for the Lax-Friedrichs form") {
  const Problem prob = test1();
  const NumericalOperator op = prob.numerical(10.0);
  const auto samples = make_operator_samples(prob, 500, 99);
  const CheckReport report = check_consistency(op, samples);
  CHECK(report.n_samples == 500);
  CHECK(report.passed());
}

TEST_CASE("consistency check flags a defective moment") {
  const Problem prob = test1();
  NumericalOperator op = prob.numerical(10.0);
  // moment replaced by alpha (p1 + p4): no longer vanishes on the diagonal
  op.custom = [base = prob.op, alpha = 10.0](double p1, double, double, double p4, double q1,
                                             double q2, double u, double x, double t) {
    return base.f(0.5 * (p1 + p4), 0.5 * (q1 + q2), u, x, t) + alpha * (p1 + p4);
  };
  const auto samples = make_operator_samples(prob, 200, 7);
  const CheckReport report = check_consistency(op, samples);
  CHECK(!report.passed());
  // fails exactly at samples with p != 0; samples here perturb around p = 1
  CHECK(static_cast<int>(report.failures.size()) == report.n_samples);
}

TEST_CASE("g-monotonicity with sufficient alpha") {
  const Problem prob = test1();
  // alpha >= M = sup|dF/dp| = 2|p| on |p| <= 2
  std::vector<OperatorSample> samples;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dp(-2.0, 2.0), dq(-3.0, 3.0);
  for (int i = 0; i < 400; ++i) samples.push_back({dp(rng), dq(rng), dq(rng), 0.5, 0.0});
  CHECK(check_gmonotonicity(prob.numerical(10.0), samples).passed());

  // negative alpha breaks the increase in p1 and p4
  const CheckReport bad = check_gmonotonicity(prob.numerical(-1.0), samples);
  CHECK(!bad.passed());
  bool p1_violation = false;
  for (const auto& f : bad.failures) p1_violation = p1_violation || f.what.find("p1") != std::string::npos;
  CHECK(p1_violation);
}

TEST_CASE("g-monotonicity of the linear operator with alpha = 0") {
  PointwiseOperator linear;
  linear.f = [](double p, double, double, double, double) { return -p; };
  const NumericalOperator op{linear, 0.0, {}};
  std::vector<OperatorSample> samples;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) samples.push_back({d(rng), d(rng), d(rng), 0.0, 0.0});
  // dFhat/dp1 = 0 (allowed), dFhat/dp2 = -1/2 (decreasing): passes
  CHECK(check_gmonotonicity(op, samples).passed());
}

TEST_CASE("finite-difference partials agree with analytic ones") {
  // smooth-at-the-sample operators
  for (const auto& prob : {test1(), test2(), test5(), test6()}) {
    const auto samples = make_operator_samples(prob, 200, 3);
    for (const auto& s : samples) {
      const double an = prob.op.df_dp(s.p, s.q, s.u, s.x, s.t);
      const double fd = prob.op.fd_dp(s.p, s.q, s.u, s.x, s.t);
      CHECK(std::abs(an - fd) <= 1e-5 * (1.0 + std::abs(an)));
      const double anq = prob.op.df_dq(s.p, s.q, s.u, s.x, s.t);
      const double fdq = prob.op.fd_dq(s.p, s.q, s.u, s.x, s.t);
      CHECK(std::abs(anq - fdq) <= 1e-5 * (1.0 + std::abs(anq)));
      const double anu = prob.op.df_du(s.p, s.q, s.u, s.x, s.t);
      const double fdu = prob.op.fd_du(s.p, s.q, s.u, s.x, s.t);
      CHECK(std::abs(anu - fdu) <= 1e-5 * (1.0 + std::abs(anu)));
    }
  }
  // kinked operators: check away from the branch switch
  for (const auto& prob : {test3(), test7()}) {
    const auto samples = make_operator_samples(prob, 300, 5);
    for (const auto& s : samples) {
      if (std::abs(s.p) < 0.05) continue;  // min-branch switch at p = 0
      const double an = prob.op.df_dp(s.p, s.q, s.u, s.x, s.t);
      const double fd = prob.op.fd_dp(s.p, s.q, s.u, s.x, s.t);
      CHECK(std::abs(an - fd) <= 1e-5 * (1.0 + std::abs(an)));
    }
  }
  {
    const Problem prob = test8();
    const auto samples = make_operator_samples(prob, 300, 5);
    for (const auto& s : samples) {
      if (std::abs(s.q) < 0.05) continue;  // |q| kink
      const double an = prob.op.df_dq(s.p, s.q, s.u, s.x, s.t);
      const double fd = prob.op.fd_dq(s.p, s.q, s.u, s.x, s.t);
      CHECK(std::abs(an - fd) <= 1e-5 * (1.0 + std::abs(an)));
    }
  }
}

TEST_CASE("Lax-Friedrichs partial structure") {
  const NumericalOperator op = test1().numerical(10.0);
  const auto d = op.partials(1.2, 0.8, 1.1, 0.9, 0.3, 0.5, 0.0, 0.5, 0.0);
  CHECK(d.dp1 == doctest::Approx(10.0));
  CHECK(d.dp4 == doctest::Approx(10.0));
  const double fp = -2.0 * 0.5 * (0.8 + 1.1);
  CHECK(d.dp2 == doctest::Approx(0.5 * fp - 10.0));
  CHECK(d.dp3 == doctest::Approx(0.5 * fp - 10.0));
  CHECK(d.dq1 == doctest::Approx(0.0));
  CHECK(d.du == doctest::Approx(0.0));

  // finite-difference fallback agrees
  const auto fdp = op.partials(1.2, 0.8, 1.1, 0.9, 0.3, 0.5, 0.0, 0.5, 0.0, false);
  CHECK(fdp.dp2 == doctest::Approx(d.dp2).epsilon(1e-6));
  CHECK(fdp.dp1 == doctest::Approx(d.dp1).epsilon(1e-12));
}
