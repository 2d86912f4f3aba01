#include "ldg1d/numerical_operator.hpp"

#include <cmath>

namespace ldg1d {

namespace {
double fd_step(double v) { return 1e-6 * (1.0 + std::abs(v)); }
}  // namespace

double PointwiseOperator::fd_dp(double p, double q, double u, double x, double t) const {
  const double d = fd_step(p);
  return (f(p + d, q, u, x, t) - f(p - d, q, u, x, t)) / (2.0 * d);
}

double PointwiseOperator::fd_dq(double p, double q, double u, double x, double t) const {
  const double d = fd_step(q);
  return (f(p, q + d, u, x, t) - f(p, q - d, u, x, t)) / (2.0 * d);
}

double PointwiseOperator::fd_du(double p, double q, double u, double x, double t) const {
  const double d = fd_step(u);
  return (f(p, q, u + d, x, t) - f(p, q, u - d, x, t)) / (2.0 * d);
}

double NumericalOperator::evaluate(double p1, double p2, double p3, double p4, double q1, double q2,
                                   double u, double x, double t) const {
  const double value =
      custom ? custom(p1, p2, p3, p4, q1, q2, u, x, t)
             : base.f(0.5 * (p2 + p3), 0.5 * (q1 + q2), u, x, t) + alpha * (p1 - p2 - p3 + p4);
  if (!std::isfinite(value)) {
    throw EvaluationError("numerical operator produced a non-finite value at x=" +
                          std::to_string(x) + ", t=" + std::to_string(t));
  }
  return value;
}

NumericalOperator::Partials NumericalOperator::partials(double, double p2, double p3, double,
                                                        double q1, double q2, double u, double x,
                                                        double t, bool use_analytic) const {
  const double pm = 0.5 * (p2 + p3);
  const double qm = 0.5 * (q1 + q2);
  double fp, fq, fu;
  if (use_analytic && base.has_partials()) {
    fp = base.df_dp(pm, qm, u, x, t);
    fq = base.df_dq(pm, qm, u, x, t);
    fu = base.df_du(pm, qm, u, x, t);
  } else {
    fp = base.fd_dp(pm, qm, u, x, t);
    fq = base.fd_dq(pm, qm, u, x, t);
    fu = base.fd_du(pm, qm, u, x, t);
  }
  Partials d;
  d.dp1 = alpha;
  d.dp4 = alpha;
  d.dp2 = 0.5 * fp - alpha;
  d.dp3 = 0.5 * fp - alpha;
  d.dq1 = 0.5 * fq;
  d.dq2 = 0.5 * fq;
  d.du = fu;
  return d;
}

CheckReport check_consistency(const NumericalOperator& op, const std::vector<OperatorSample>& samples) {
  CheckReport report;
  report.n_samples = static_cast<int>(samples.size());
  for (const OperatorSample& s : samples) {
    const double fv = op.base.f(s.p, s.q, s.u, s.x, s.t);
    const double fh = op.evaluate(s.p, s.p, s.p, s.p, s.q, s.q, s.u, s.x, s.t);
    const double gap = std::abs(fh - fv);
    if (!(gap <= 1e-12 * (1.0 + std::abs(fv)))) {
      report.failures.push_back({s, "Fhat differs from F on the diagonal", gap});
    }
  }
  return report;
}

CheckReport check_gmonotonicity(const NumericalOperator& op, const std::vector<OperatorSample>& samples,
                                double perturbation) {
  CheckReport report;
  report.n_samples = static_cast<int>(samples.size());
  for (const OperatorSample& s : samples) {
    const double d = perturbation * (1.0 + std::abs(s.p));
    double args[4] = {s.p, s.p, s.p, s.p};
    for (int i = 0; i < 4; ++i) {
      double lo[4] = {args[0], args[1], args[2], args[3]};
      double hi[4] = {args[0], args[1], args[2], args[3]};
      lo[i] -= d;
      hi[i] += d;
      const double slope = (op.evaluate(hi[0], hi[1], hi[2], hi[3], s.q, s.q, s.u, s.x, s.t) -
                            op.evaluate(lo[0], lo[1], lo[2], lo[3], s.q, s.q, s.u, s.x, s.t)) /
                           (2.0 * d);
      const bool want_increasing = (i == 0 || i == 3);
      if (want_increasing && slope < -1e-8) {
        report.failures.push_back({s, "not increasing in p" + std::to_string(i + 1), -slope});
      }
      if (!want_increasing && slope > 1e-8) {
        report.failures.push_back({s, "not decreasing in p" + std::to_string(i + 1), slope});
      }
    }
  }
  return report;
}

}  // namespace ldg1d
