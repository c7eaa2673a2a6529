#include "aistress/indicators.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "aistress/csv.hpp"
#include "aistress/params.hpp"

namespace aistress {
namespace {

struct DateKey {
  int y = 0, m = 0, d = 0;
  auto operator<=>(const DateKey&) const = default;
};

DateKey parse_date(const std::string& s) {
  DateKey k;
  int parts[3] = {0, 0, 0};
  int idx = 0;
  std::string cur;
  for (char ch : s + "-") {
    if (ch == '-') {
      if (cur.empty() || idx >= 3 || !is_number(cur))
        throw IndicatorError("malformed date '" + s + "'");
      parts[idx++] = std::stoi(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  k.y = parts[0];
  k.m = parts[1];
  k.d = parts[2];
  return k;
}

bool satisfies(double v, Comparator c, double thr) {
  switch (c) {
    case Comparator::Lt: return v < thr;
    case Comparator::Le: return v <= thr;
    case Comparator::Gt: return v > thr;
    case Comparator::Ge: return v >= thr;
  }
  return false;
}

void require_sorted(const Series& s, const std::string& name) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(parse_date(s[i - 1].date) < parse_date(s[i].date)))
      throw IndicatorError("series '" + name + "' is not strictly sorted by date");
}

std::vector<double> apply_transform(const Series& s, const IndicatorRule& rule, const Series* other) {
  std::vector<double> out;
  switch (rule.transform) {
    case Transform::Level:
      for (const auto& o : s) out.push_back(o.value);
      break;
    case Transform::YoyPctChange: {
      std::map<DateKey, double> by_date;
      for (const auto& o : s) by_date[parse_date(o.date)] = o.value;
      for (const auto& o : s) {
        DateKey prev = parse_date(o.date);
        --prev.y;
        auto it = by_date.find(prev);
        if (it != by_date.end() && it->second != 0.0)
          out.push_back(100.0 * (o.value / it->second - 1.0));
      }
      break;
    }
    case Transform::GapVs: {
      std::map<DateKey, double> rhs;
      for (const auto& o : *other) rhs[parse_date(o.date)] = o.value;
      for (const auto& o : s) {
        auto it = rhs.find(parse_date(o.date));
        if (it != rhs.end()) out.push_back(o.value - it->second);
      }
      break;
    }
  }
  return out;
}

Signal judge(const std::vector<double>& values, const IndicatorRule& rule) {
  if (!rule.threshold) return {SignalKind::Indeterminate, Reason::QualitativeRule};
  if (rule.window < 1) throw IndicatorError("rule " + rule.id + ": window must be ≥ 1");
  if (values.size() < static_cast<std::size_t>(rule.window))
    return {SignalKind::Indeterminate, Reason::InsufficientData};
  std::size_t met = 0;
  for (auto it = values.end() - rule.window; it != values.end(); ++it)
    met += satisfies(*it, rule.comparator, *rule.threshold) ? 1 : 0;
  const auto w = static_cast<std::size_t>(rule.window);
  if (rule.direction == Direction::Triggers) {
    if (met == w) return {SignalKind::Triggered, Reason::None};
    return {SignalKind::Indeterminate, met == 0 ? Reason::NotMet : Reason::MixedWindow};
  }
  if (met == w) return {SignalKind::Falsified, Reason::None};
  if (met == 0) return {SignalKind::Triggered, Reason::None};
  return {SignalKind::Indeterminate, Reason::MixedWindow};
}

bool in(const std::string& id, std::initializer_list<const char*> ids) {
  return std::any_of(ids.begin(), ids.end(), [&](const char* x) { return id == x; });
}

}  // namespace

std::vector<double> transformed(const SeriesBundle& data, const IndicatorRule& rule) {
  const Series* other = nullptr;
  if (rule.transform == Transform::GapVs) {
    auto it = data.find(rule.gap_series);
    if (it == data.end())
      throw IndicatorError("rule " + rule.id + ": unknown series '" + rule.gap_series + "' in gap_vs");
    other = &it->second;
    require_sorted(*other, rule.gap_series);
  }
  auto it = data.find(rule.series_name);
  if (it == data.end()) return {};
  require_sorted(it->second, rule.series_name);
  return apply_transform(it->second, rule, other);
}

Signal evaluate_rule(const SeriesBundle& data, const IndicatorRule& rule) {
  if (!rule.threshold) return {SignalKind::Indeterminate, Reason::QualitativeRule};
  return judge(transformed(data, rule), rule);
}

Signal evaluate_rule(const Series& series, const IndicatorRule& rule) {
  if (rule.transform == Transform::GapVs)
    throw IndicatorError("rule " + rule.id + ": unknown series '" + rule.gap_series + "' in gap_vs");
  return evaluate_rule(SeriesBundle{{rule.series_name, series}}, rule);
}

std::vector<IndicatorRule> default_rules() {
  auto tmpl = [](const char* id, const char* series) {
    IndicatorRule r;
    r.id = id;
    r.series_name = series;
    return r;
  };
  std::vector<IndicatorRule> rules;
  rules.push_back(tmpl("H1", "ai_exposed_wage_growth_gap"));
  {
    IndicatorRule r = tmpl("H2", "saas_net_retention_pct");
    r.comparator = Comparator::Ge;
    r.threshold = 110.0;
    r.units = "percent";
    r.window = 4;
    rules.push_back(r);
  }
  rules.push_back(tmpl("H3", "credential_requirements_ai_exposed"));
  rules.push_back(tmpl("H4", "top_quintile_consumption_share_of_decline"));
  {
    IndicatorRule r = tmpl("H5", "private_public_mark_gap_bps");
    r.comparator = Comparator::Le;
    r.threshold = 200.0;
    r.units = "basis points";
    r.window = 4;
    rules.push_back(r);
  }
  rules.push_back(tmpl("H6", "m2_velocity"));
  rules.push_back(tmpl("H7", "enterprise_ai_deployment_pct"));
  rules.push_back(tmpl("H8", "ai_sector_price_minus_wage_compression"));
  rules.push_back(tmpl("H9", "ai_complementary_absorption_rate"));
  {
    IndicatorRule r = tmpl("H10", "stablecoin_share_of_card_volume_pct");
    r.comparator = Comparator::Lt;
    r.threshold = 5.0;
    r.units = "percent of card volume";
    r.window = 4;
    rules.push_back(r);
  }
  rules.push_back(tmpl("H11", "tech_metro_high_fico_delinquency_gap"));
  return rules;
}

DashboardReport dashboard(const std::vector<IndicatorRule>& rules, const SeriesBundle& data) {
  std::set<std::string> seen;
  for (const auto& r : rules)
    if (!seen.insert(r.id).second) throw IndicatorError("duplicate rule id '" + r.id + "'");

  DashboardReport rep;
  auto triggered = [&](const char* id) {
    return std::any_of(rep.rows.begin(), rep.rows.end(), [&](const DashboardRow& row) {
      return row.id == id && row.signal.kind == SignalKind::Triggered;
    });
  };
  auto falsified = [&](const char* id) {
    return std::any_of(rep.rows.begin(), rep.rows.end(), [&](const DashboardRow& row) {
      return row.id == id && row.signal.kind == SignalKind::Falsified;
    });
  };

  for (const auto& rule : rules) {
    Signal sig;
    if (rule.transform == Transform::GapVs && !data.count(rule.gap_series))
      sig = {SignalKind::Indeterminate, rule.threshold ? Reason::InsufficientData : Reason::QualitativeRule};
    else
      sig = evaluate_rule(data, rule);
    rep.rows.push_back({rule.id, rule.series_name, sig});
    if (sig.kind == SignalKind::Triggered &&
        in(rule.id, {"H1", "H2", "H3", "H4", "H5", "H6", "H10", "H11"}))
      ++rep.crisis_triggered;
    if (sig.kind == SignalKind::Falsified && in(rule.id, {"H8", "H9"})) ++rep.competing_falsified;
  }
  rep.joint_violation = triggered("H1") && (triggered("H5") || triggered("H11"));
  rep.crisis_unlikely = falsified("H8") && falsified("H9") && rep.crisis_triggered == 0;
  return rep;
}

std::string dashboard_csv(const DashboardReport& r) {
  std::string out = "id,series,signal,reason\n";
  for (const auto& row : r.rows)
    out += row.id + ',' + row.series_name + ',' + to_string(row.signal.kind) + ',' +
           to_string(row.signal.reason) + '\n';
  return out;
}

std::string dashboard_text(const DashboardReport& r) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s  %-44s  %-13s  %s\n", "id", "series", "signal", "reason");
  out += line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%-4s  %-44s  %-13s  %s\n", row.id.c_str(),
                  row.series_name.c_str(), to_string(row.signal.kind), to_string(row.signal.reason));
    out += line;
  }
  out += "\ncrisis indicators triggered: " + std::to_string(r.crisis_triggered) + "\n";
  out += "competing mechanisms falsified: " + std::to_string(r.competing_falsified) + "\n";
  if (r.joint_violation)
    out += "FLAG: conditions (1) and (4) are violated simultaneously - crisis pathway materializing\n";
  if (r.crisis_unlikely) out += "BANNER: crisis pathway unlikely to be operative\n";
  return out;
}

std::vector<IndicatorRule> parse_rules(const std::string& text) {
  const auto sections = parse_key_value(text);
  if (!sections[0].entries.empty())
    throw ConfigError("rule file: key outside a [rule.<id>] block", sections[0].entry_lines[0]);
  std::vector<IndicatorRule> rules;
  std::set<std::string> ids;
  for (std::size_t si = 1; si < sections.size(); ++si) {
    const auto& sec = sections[si];
    if (sec.header.rfind("rule.", 0) != 0 || sec.header.size() == 5)
      throw ConfigError("line " + std::to_string(sec.line) + ": expected [rule.<id>]", sec.line);
    IndicatorRule r;
    r.id = sec.header.substr(5);
    if (!ids.insert(r.id).second)
      throw ConfigError("line " + std::to_string(sec.line) + ": duplicate rule '" + r.id + "'", sec.line);
    for (std::size_t i = 0; i < sec.entries.size(); ++i) {
      const auto& [key, value] = sec.entries[i];
      const int line = sec.entry_lines[i];
      auto bad = [&] {
        return ConfigError("line " + std::to_string(line) + ": bad value '" + value + "' for " + key, line);
      };
      if (key == "series") r.series_name = value;
      else if (key == "transform") {
        if (value == "level") r.transform = Transform::Level;
        else if (value == "yoy_pct_change") r.transform = Transform::YoyPctChange;
        else if (value.rfind("gap_vs:", 0) == 0 && value.size() > 7) {
          r.transform = Transform::GapVs;
          r.gap_series = value.substr(7);
        } else throw bad();
      } else if (key == "comparator") {
        if (value == "<") r.comparator = Comparator::Lt;
        else if (value == "<=") r.comparator = Comparator::Le;
        else if (value == ">") r.comparator = Comparator::Gt;
        else if (value == ">=") r.comparator = Comparator::Ge;
        else throw bad();
      } else if (key == "threshold") r.threshold = parse_number(value, line, key);
      else if (key == "units") r.units = value;
      else if (key == "window") {
        const double w = parse_number(value, line, key);
        if (w < 1 || w != static_cast<int>(w)) throw bad();
        r.window = static_cast<int>(w);
      } else if (key == "direction") {
        if (value == "falsifies") r.direction = Direction::Falsifies;
        else if (value == "triggers") r.direction = Direction::Triggers;
        else throw bad();
      } else
        throw ConfigError("line " + std::to_string(line) + ": unknown rule key '" + key + "'", line);
    }
    if (r.series_name.empty())
      throw ConfigError("rule " + r.id + ": missing 'series'", sec.line);
    rules.push_back(std::move(r));
  }
  return rules;
}

std::string serialize_rules(const std::vector<IndicatorRule>& rules) {
  std::string out;
  for (const auto& r : rules) {
    out += "[rule." + r.id + "]\n";
    out += "series = " + r.series_name + "\n";
    out += "transform = ";
    switch (r.transform) {
      case Transform::Level: out += "level\n"; break;
      case Transform::YoyPctChange: out += "yoy_pct_change\n"; break;
      case Transform::GapVs: out += "gap_vs:" + r.gap_series + "\n"; break;
    }
    out += "comparator = " + std::string(to_string(r.comparator)) + "\n";
    if (r.threshold) out += "threshold = " + format_number(*r.threshold) + "\n";
    if (!r.units.empty()) out += "units = " + r.units + "\n";
    out += "window = " + std::to_string(r.window) + "\n";
    out += std::string("direction = ") + (r.direction == Direction::Falsifies ? "falsifies" : "triggers") + "\n\n";
  }
  return out;
}

Series parse_series(const std::string& csv_text) {
  const CsvTable t = parse_csv(csv_text, true);
  const int di = t.column("date");
  const int vi = t.column("value");
  if (di < 0 || vi < 0) throw IndicatorError("series CSV needs 'date' and 'value' columns");
  Series s;
  int line = 1;
  for (const auto& r : t.rows) {
    ++line;
    parse_date(r.at(di));
    s.push_back({r.at(di), parse_number(r.at(vi), line, "value")});
  }
  return s;
}

SeriesBundle load_series_dir(const std::filesystem::path& dir) {
  SeriesBundle b;
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: '" + dir.string() + "'");
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      b[entry.path().stem().string()] = parse_series(read_file(entry.path()));
  return b;
}

const char* to_string(SignalKind k) {
  switch (k) {
    case SignalKind::Triggered: return "Triggered";
    case SignalKind::Falsified: return "Falsified";
    case SignalKind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::None: return "";
    case Reason::InsufficientData: return "insufficient data";
    case Reason::QualitativeRule: return "qualitative rule";
    case Reason::MixedWindow: return "mixed window";
    case Reason::NotMet: return "condition not met";
  }
  return "?";
}

const char* to_string(Comparator c) {
  switch (c) {
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
  }
  return "?";
}

}  // namespace aistress
