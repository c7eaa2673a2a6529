#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aistress {

enum class Transform { Level, YoyPctChange, GapVs };
enum class Comparator { Lt, Le, Gt, Ge };
enum class Direction { Falsifies, Triggers };

struct IndicatorRule {
  std::string id;  // H1..H11
  std::string series_name;
  Transform transform = Transform::Level;
  std::string gap_series;  // GapVs only: value = series - gap_series
  Comparator comparator = Comparator::Ge;
  std::optional<double> threshold;  // empty: qualitative template awaiting an analyst threshold
  std::string units;
  int window = 1;
  Direction direction = Direction::Falsifies;
};

struct Observation {
  std::string date;  // ISO-8601: YYYY, YYYY-MM or YYYY-MM-DD
  double value;
};

using Series = std::vector<Observation>;
using SeriesBundle = std::map<std::string, Series>;

enum class SignalKind { Triggered, Falsified, Indeterminate };
enum class Reason { None, InsufficientData, QualitativeRule, MixedWindow, NotMet };

struct Signal {
  SignalKind kind = SignalKind::Indeterminate;
  Reason reason = Reason::None;

  bool operator==(const Signal&) const = default;
};

class IndicatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the transform, then checks the comparator on the trailing `window`
/// observations. All satisfy: Falsified (or Triggered for trigger rules).
/// For falsification rules, all violate: Triggered. Anything else is Indeterminate.
Signal evaluate_rule(const SeriesBundle& data, const IndicatorRule& rule);
Signal evaluate_rule(const Series& series, const IndicatorRule& rule);

/// Transformed values of the rule's series, oldest first.
std::vector<double> transformed(const SeriesBundle& data, const IndicatorRule& rule);

/// H1..H11; only H2, H5 and H10 carry thresholds.
std::vector<IndicatorRule> default_rules();

struct DashboardRow {
  std::string id;
  std::string series_name;
  Signal signal;
};

struct DashboardReport {
  std::vector<DashboardRow> rows;
  int crisis_triggered = 0;      // among H1-H6, H10, H11
  int competing_falsified = 0;   // among H8, H9
  bool joint_violation = false;  // H1 and (H5 or H11) triggered together
  bool crisis_unlikely = false;  // H8 and H9 falsified, no crisis triggers
};

DashboardReport dashboard(const std::vector<IndicatorRule>& rules, const SeriesBundle& data);

std::string dashboard_csv(const DashboardReport& r);
std::string dashboard_text(const DashboardReport& r);

/// `[rule.<id>]` blocks with keys series, transform, comparator, threshold, units, window, direction.
std::vector<IndicatorRule> parse_rules(const std::string& text);
std::string serialize_rules(const std::vector<IndicatorRule>& rules);

/// CSV with header `date,value`.
Series parse_series(const std::string& csv_text);
/// Every `*.csv` in `dir`, keyed by file stem.
SeriesBundle load_series_dir(const std::filesystem::path& dir);

const char* to_string(SignalKind k);
const char* to_string(Reason r);
const char* to_string(Comparator c);

}  // namespace aistress
