#ifndef LDG1D_NUMERICAL_OPERATOR_HPP
#define LDG1D_NUMERICAL_OPERATOR_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldg1d {

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pointwise fully nonlinear operator F(u_xx, u_x, u, x, t). Stationary
// problems ignore t. Partial derivatives are optional; when absent they are
// approximated by central differences with step 1e-6*(1+|value|).
struct PointwiseOperator {
  using Fn = std::function<double(double p, double q, double u, double x, double t)>;
  Fn f;
  Fn df_dp;  // dF/du_xx
  Fn df_dq;  // dF/du_x
  Fn df_du;  // dF/du
  std::optional<double> monotone_bound;  // M with M > |dF/du_xx| when known

  bool has_partials() const { return df_dp && df_dq && df_du; }

  double fd_dp(double p, double q, double u, double x, double t) const;
  double fd_dq(double p, double q, double u, double x, double t) const;
  double fd_du(double p, double q, double u, double x, double t) const;
};

// Lax-Friedrichs-like numerical operator
//   Fhat(p1,p2,p3,p4,q1,q2,u,x,t)
//     = F((p2+p3)/2, (q1+q2)/2, u, x, t) + alpha*(p1 - p2 - p3 + p4),
// consistent with F; g-monotone for alpha large enough (alpha >= M suffices
// when |dF/du_xx| < M).
struct NumericalOperator {
  PointwiseOperator base;
  double alpha = 0.0;
  // Replacement for the Lax-Friedrichs formula, used by the operator checks
  // to probe defective moments; base stays the reference F.
  std::function<double(double p1, double p2, double p3, double p4, double q1, double q2, double u,
                       double x, double t)>
      custom;

  double evaluate(double p1, double p2, double p3, double p4, double q1, double q2, double u,
                  double x, double t) const;

  struct Partials {
    double dp1, dp2, dp3, dp4, dq1, dq2, du;
  };
  // use_analytic: use base partials when available, otherwise (or when false)
  // fall back to central differences of the base operator.
  Partials partials(double p1, double p2, double p3, double p4, double q1, double q2, double u,
                    double x, double t, bool use_analytic = true) const;
};

struct OperatorSample {
  double p, q, u, x, t;
};

struct CheckFailure {
  OperatorSample sample;
  std::string what;
  double violation;
};

struct CheckReport {
  int n_samples = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

// |Fhat(p,p,p,p,q,q,u,x,t) - F(p,q,u,x,t)| <= 1e-12*(1+|F|) at each sample;
// testable restatement of the liminf/limsup consistency for continuous F.
CheckReport check_consistency(const NumericalOperator& op, const std::vector<OperatorSample>& samples);

// Central differences of Fhat in p1, p4 must be >= -1e-8 and in p2, p3 must
// be <= +1e-8 at each sample (diagonal point p1=..=p4=p, q1=q2=q).
CheckReport check_gmonotonicity(const NumericalOperator& op, const std::vector<OperatorSample>& samples,
                                double perturbation = 1e-4);

}  // namespace ldg1d

#endif
