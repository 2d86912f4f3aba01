#ifndef LDG1D_STUDY_HPP
#define LDG1D_STUDY_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldg1d/parabolic.hpp"
#include "ldg1d/problems.hpp"

namespace ldg1d {

enum class SolverChoice { newton, splitting };
enum class SchemeChoice { stationary, rk4, feuler, trapezoidal };

struct RunConfig {
  std::string problem;
  std::vector<int> degrees;
  std::vector<int> mesh_sizes;  // strictly increasing
  double alpha = std::numeric_limits<double>::quiet_NaN();  // NaN: problem default
  SolverChoice solver = SolverChoice::newton;
  SchemeChoice scheme = SchemeChoice::stationary;
  std::optional<double> dt;
  std::optional<double> kappa_t;
  double T = std::numeric_limits<double>::quiet_NaN();      // NaN: problem default
  SolverConfig solver_config;
  ProjectionMode projection = ProjectionMode::modified;
  std::uint64_t seed = 0;

  void validate() const;  // J list increasing, dt/kappa_t exclusivity, ...
};

// One mesh level of a study; orders are log2(e_{2h}/e_h) against the
// previous level and NaN on the coarsest one.
struct StudyCell {
  int J = 0;
  double h = 0.0;
  bool ok = false;
  std::string error_message;
  double l2 = 0.0, linf = 0.0;
  double l2_order = std::numeric_limits<double>::quiet_NaN();
  double linf_order = std::numeric_limits<double>::quiet_NaN();
};

struct StudyBlock {
  int degree = 0;
  std::vector<StudyCell> cells;
};

struct StudyReport {
  std::string problem;
  double alpha = 0.0;
  SchemeChoice scheme = SchemeChoice::stationary;
  std::vector<StudyBlock> blocks;

  std::string to_markdown() const;
  // Pinned schema: J,h,l2,l2_order,linf,linf_order
  std::string to_csv(const StudyBlock& block) const;
};

// Runs one (degree, J) combination and measures errors against the exact
// solution (at T for parabolic problems).
struct SingleRun {
  std::shared_ptr<DGSpace> space;
  DGFunction u;
  double l2 = 0.0, linf = 0.0;
  IterationLog log;
};
SingleRun run_single(const RunConfig& config, int degree, int J);

// Solver failures are recorded in the affected cell; the sweep continues.
StudyReport run_convergence_study(const RunConfig& config);

// Markdown to md_path; one CSV per degree block at csv_stem with suffix
// _r<degree>.csv (or exactly csv_stem if it ends in .csv and there is a
// single block).
void write_report_files(const StudyReport& report, const std::string& md_path,
                        const std::string& csv_stem);

struct SelectionResult {
  enum class Outcome { u_plus, u_minus, mu, other };
  Outcome outcome = Outcome::other;
  double d_plus = 0.0, d_minus = 0.0, d_mu = 0.0;
  std::string diagnostics;
  std::shared_ptr<DGSpace> space;
  std::optional<DGFunction> final;
};

const char* to_string(SelectionResult::Outcome o);

// 100 splitting iterations from (3/4) mu + (1/4) u_bar, then Newton on the
// full discretization; the result is classified by its nearest fixture.
SelectionResult run_selection_experiment(double alpha, int degree, int J,
                                         const SolverConfig& config = {});

}  // namespace ldg1d

#endif
