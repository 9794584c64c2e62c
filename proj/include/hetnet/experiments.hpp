#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/analytic_settings.hpp"
#include "hetnet/core_model.hpp"
#include "hetnet/montecarlo.hpp"

// Batch experiments: sweep one axis for several scenarios and methods, and
// write the resulting curves as CSV.

namespace hetnet {

/// Raised when a result file cannot be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { SinrThresholdDb, RateBps, InnerRadiusM, DensityRatio };
enum class Metric { Coverage, Throughput };

std::string_view to_string(SweepAxis a) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view name);

struct ExperimentSpec {
  NetworkConfig base;  // scenario and small-cell density are overridden per curve
  double density_ratio = 10.0;
  SweepAxis axis = SweepAxis::SinrThresholdDb;
  std::vector<double> grid;
  std::vector<Scenario> scenarios;
  std::vector<Method> methods{Method::Analytic};
  /// Inner/Outer are only produced for the non-uniform scenarios.
  std::vector<Region> regions{Region::Overall};
  /// Only used by the D and density-ratio axes: SINR threshold in dB, or rate in bps.
  Metric metric = Metric::Coverage;
  double fixed_value = -5.0;
  SimSettings sim;
  /// Appended to every curve label, e.g. "|ratio=5|T_db=10".
  std::string label;

  Metric effective_metric() const noexcept;
  /// Throws ConfigError on an empty or unsorted grid, no scenarios or no methods.
  void validate() const;
};

struct ExperimentResult {
  SweepAxis axis = SweepAxis::SinrThresholdDb;
  std::vector<CcdfCurve> curves;
  WarningLog warnings;
};

ExperimentResult run_experiment(const ExperimentSpec& spec, const AnalyticSettings& settings = {});

/// One CSV, header `axis,axis_value,scenario,method,value,ci_low,ci_high`.
void write_csv(std::ostream& out, SweepAxis axis, const std::vector<CcdfCurve>& curves, bool header = true);
/// Writes to path; throws OutputError if the file cannot be written.
void write_csv_file(const std::string& path, SweepAxis axis, const std::vector<CcdfCurve>& curves);

/// Label used in the scenario column: scenario, ":region" unless overall, then the spec suffix.
std::string curve_label(Scenario scenario, Region region, std::string_view suffix);

struct CompareReport {
  double max_gap = 0.0;
  double threshold_at_max = 0.0;
  double fraction_inside_ci = 0.0;
  std::size_t points = 0;
};

/// Both curves must share the same grid; the MC curve must carry confidence bounds.
CompareReport compare_report(const CcdfCurve& analytic, const CcdfCurve& mc);

/// Presets for figures 2-7 of the numerical study. A figure may need several
/// specs (panels); their curves go to one CSV, told apart by label.
std::vector<ExperimentSpec> figure_preset(int figure, const std::vector<Method>& methods, const SimSettings& sim);

/// Evenly spaced grid from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, double step);
/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace hetnet
