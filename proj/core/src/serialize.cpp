// Copyright 2026 The recidaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recidaudit/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "recidaudit/svg.hpp"

namespace recidaudit {

namespace {

using nlohmann::json;

const char* kSeriesColors[] = {"#222222", "#117733", "#4477aa", "#cc6677",
                               "#ddaa33", "#aa4499"};

std::string date_tick_label(double day_count) {
  return format_date(Date{std::chrono::days{long(day_count)}});
}

std::string plain_tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double to_day_number(Date d) { return double(d.time_since_epoch().count()); }

std::string label_name(std::optional<bool> label) {
  if (!label) return "all";
  return *label ? "recidivist" : "non-recidivist";
}

}  // namespace

json to_json(const AuditReport& report) {
  json j;
  j["schema_version"] = kOutputSchemaVersion;
  j["cutoff"] = format_date(report.cutoff);
  j["post_cutoff_positives"] = report.post_cutoff_positives;
  j["post_cutoff_negatives"] = report.post_cutoff_negatives;
  j["pre_cutoff_positives"] = report.pre_cutoff_positives;
  j["pre_cutoff_negatives"] = report.pre_cutoff_negatives;
  j["excess_share"] =
      report.excess_share ? json(*report.excess_share) : json(nullptr);
  j["excess_ratio"] =
      report.excess_ratio ? json(*report.excess_ratio) : json(nullptr);
  j["verdict"] = to_string(report.verdict);
  return j;
}

json to_json(const ValidationFinding& finding) {
  return json{{"person_id", finding.person_id},
              {"severity", to_string(finding.severity)},
              {"code", to_string(finding.code)},
              {"detail", finding.detail}};
}

json findings_report_json(const ParseResult& result) {
  json j;
  j["schema_version"] = kOutputSchemaVersion;
  j["records"] = result.records.size();
  j["rejected_rows"] = result.rejected_rows;
  json arr = json::array();
  for (const auto& f : result.findings) arr.push_back(to_json(f));
  j["findings"] = std::move(arr);
  return j;
}

Table histogram_table(const std::vector<HistogramSeries>& series) {
  Table t("screen-date-histogram", {"bin-start", "label", "count"});
  for (const auto& s : series) {
    for (const auto& bin : s.bins) {
      t.add_row({format_date(bin.bin_start), label_name(s.label), bin.count});
    }
  }
  return t;
}

std::string histogram_svg(const std::vector<HistogramSeries>& series,
                          const std::string& title,
                          std::optional<Date> cutoff_marker) {
  if (series.empty() || series.front().bins.empty()) {
    return SvgCanvas(640, 360).finish();
  }
  double x_min = 1e18, x_max = -1e18;
  long y_max = 1;
  int width_days = series.front().bins.front().width_days;
  for (const auto& s : series) {
    for (const auto& bin : s.bins) {
      x_min = std::min(x_min, to_day_number(bin.bin_start));
      x_max = std::max(x_max, to_day_number(bin.bin_start) + bin.width_days);
      y_max = std::max(y_max, bin.count);
    }
  }
  ChartFrame frame(760, 400, x_min, x_max, 0, double(y_max) * 1.05, title,
                   "screen date", "persons per bin");
  frame.draw_axes(frame.x.ticks(6), &date_tick_label, frame.y.ticks(5), 0);

  std::vector<std::pair<std::string, std::string>> legend;
  const double y0 = frame.y(0);
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kSeriesColors[i % 6];
    legend.emplace_back(label_name(series[i].label), color);
    for (const auto& bin : series[i].bins) {
      if (bin.count == 0) continue;
      const double px = frame.x(to_day_number(bin.bin_start));
      const double pw =
          frame.x(to_day_number(bin.bin_start) + width_days) - px;
      const double py = frame.y(double(bin.count));
      frame.canvas.rect(px, py, std::max(pw - 0.5, 0.5), y0 - py, color,
                        series.size() > 1 ? 0.55 : 0.9);
    }
  }
  if (series.size() > 1) frame.legend(legend);
  if (cutoff_marker) frame.vline(to_day_number(*cutoff_marker), "red");
  return frame.canvas.finish();
}

Table prepost_table(const PrePostTable& t, const std::string& label_name) {
  Table out("recidivism-by-pre-post-cutoff",
            {label_name, "pre-cutoff", "post-cutoff", "total"});
  out.add_row({std::string("0"), t.pre_negatives, t.post_negatives,
               t.negatives()});
  out.add_row({std::string("1"), t.pre_positives, t.post_positives,
               t.positives()});
  out.add_row({std::string("total"), t.pre(), t.post(), t.total()});
  return out;
}

Table km_table(const KMCurve& curve) {
  Table t("survival-curve", {"t", "at-risk", "events", "survival"});
  t.rate_digits = 6;
  for (const auto& s : curve.steps) {
    t.add_row({s.t, s.at_risk, s.events, s.survival});
  }
  return t;
}

Table km_table_multi(
    const std::vector<std::pair<std::string, const KMCurve*>>& curves) {
  Table t("survival-curves", {"dataset", "t", "at-risk", "events", "survival"});
  t.rate_digits = 6;
  for (const auto& [name, curve] : curves) {
    for (const auto& s : curve->steps) {
      t.add_row({name, s.t, s.at_risk, s.events, s.survival});
    }
  }
  return t;
}

std::string km_svg(
    const std::vector<std::pair<std::string, const KMCurve*>>& curves,
    long window_marker_days) {
  long t_max = 1;
  for (const auto& [name, curve] : curves) {
    if (!curve->steps.empty()) t_max = std::max(t_max, curve->steps.back().t);
  }
  ChartFrame frame(760, 420, 0, double(t_max), 0, 1.0,
                   "Non-recidivism survival", "days since screen",
                   "survival probability");
  frame.draw_axes(frame.x.ticks(6), &plain_tick_label, frame.y.ticks(6), 1);

  std::vector<std::pair<std::string, std::string>> legend;
  for (size_t i = 0; i < curves.size(); ++i) {
    const char* color = kSeriesColors[i % 6];
    legend.emplace_back(curves[i].first, color);
    std::vector<std::pair<double, double>> pts;
    double last_s = 1.0;
    pts.emplace_back(frame.x(0), frame.y(1.0));
    for (const auto& s : curves[i].second->steps) {
      pts.emplace_back(frame.x(double(s.t)), frame.y(last_s));
      pts.emplace_back(frame.x(double(s.t)), frame.y(s.survival));
      last_s = s.survival;
    }
    pts.emplace_back(frame.x(double(t_max)), frame.y(last_s));
    frame.canvas.polyline(pts, color);
  }
  frame.legend(legend);
  frame.vline(double(window_marker_days), "red", "4 3");
  return frame.canvas.finish();
}

Table roc_table(const RocCurve& curve) {
  Table t("roc-curve", {"threshold", "fpr", "tpr"});
  t.rate_digits = 6;
  for (const auto& p : curve.points) {
    t.add_row({long(p.threshold), p.fpr, p.tpr});
  }
  return t;
}

Table roc_table_multi(
    const std::vector<std::pair<std::string, const RocCurve*>>& curves) {
  Table t("roc-curves", {"dataset", "threshold", "fpr", "tpr"});
  t.rate_digits = 6;
  for (const auto& [name, curve] : curves) {
    for (const auto& p : curve->points) {
      t.add_row({name, long(p.threshold), p.fpr, p.tpr});
    }
  }
  return t;
}

std::string roc_svg(
    const std::vector<std::pair<std::string, const RocCurve*>>& curves,
    int marked_threshold) {
  ChartFrame frame(520, 520, 0, 1, 0, 1, "ROC across decile thresholds",
                   "false positive rate", "true positive rate");
  frame.draw_axes(frame.x.ticks(6), &plain_tick_label, frame.y.ticks(6), 1);
  frame.canvas.line(frame.x(0), frame.y(0), frame.x(1), frame.y(1), "#bbb",
                    1.0, "4 3");

  std::vector<std::pair<std::string, std::string>> legend;
  for (size_t i = 0; i < curves.size(); ++i) {
    const char* color = kSeriesColors[i % 6];
    legend.emplace_back(curves[i].first, color);
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : curves[i].second->points) {
      pts.emplace_back(frame.x(p.fpr), frame.y(p.tpr));
    }
    frame.canvas.polyline(pts, color);
    for (const auto& p : curves[i].second->points) {
      if (p.threshold == marked_threshold) {
        frame.canvas.circle(frame.x(p.fpr), frame.y(p.tpr), 5, "#3366cc");
      }
    }
  }
  frame.legend(legend);
  return frame.canvas.finish();
}

Table fraction_observed_table(const std::vector<ObservedFractionBin>& bins) {
  Table t("fraction-observed-two-years",
          {"bin-start", "n", "fraction", "smoothed"});
  t.rate_digits = 4;
  for (const auto& b : bins) {
    t.add_row({format_date(b.bin_start), b.n, cell(b.fraction),
               cell(b.smoothed)});
  }
  return t;
}

std::string fraction_observed_svg(const std::vector<ObservedFractionBin>& bins,
                                  Date solid_marker, Date dashed_marker) {
  if (bins.empty()) return SvgCanvas(640, 360).finish();
  const double x_min = to_day_number(bins.front().bin_start);
  const double x_max =
      to_day_number(bins.back().bin_start) + 7;
  ChartFrame frame(760, 420, x_min, x_max, 0, 1.0,
                   "Fraction of non-recidivists observed two free years",
                   "screen date", "fraction");
  frame.draw_axes(frame.x.ticks(6), &date_tick_label, frame.y.ticks(6), 1);

  for (const auto& b : bins) {
    if (!b.fraction) continue;
    frame.canvas.circle(frame.x(to_day_number(b.bin_start)),
                        frame.y(*b.fraction), 2, "#888");
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& b : bins) {
    if (!b.smoothed) continue;
    pts.emplace_back(frame.x(to_day_number(b.bin_start)),
                     frame.y(*b.smoothed));
  }
  frame.canvas.polyline(pts, "#117733", 2.0);
  frame.vline(to_day_number(solid_marker), "red");
  frame.vline(to_day_number(dashed_marker), "red", "5 4");
  return frame.canvas.finish();
}

Table quarterly_rates_table(const std::vector<QuarterRates>& rates) {
  Table t("quarterly-recidivism-rates", {"year-quarter", "n", "rate-0", "rate-1"});
  for (const auto& q : rates) {
    t.add_row({to_string(q.quarter), q.n, cell(q.rate0), cell(q.rate1)});
  }
  return t;
}

Table confusion_matrix_table(const ConfusionMatrix& cm) {
  Table t("confusion-matrix",
          {"actual", "predicted-low", "predicted-high", "row-share"});
  t.rate_digits = 2;
  const double n = double(std::max(cm.n(), 1L));
  t.add_row({std::string("0"), cm.tn, cm.fp, double(cm.actual_negatives()) / n});
  t.add_row({std::string("1"), cm.fn, cm.tp, double(cm.actual_positives()) / n});
  return t;
}

Table confusion_similar_table(
    const std::vector<std::pair<std::string, const ConfusionMatrix*>>& rows) {
  Table t("confusion-results-similar", {"dataset", "n", "accuracy", "fpr", "fnr"});
  t.rate_digits = 3;
  for (const auto& [name, cm] : rows) {
    const ConfusionStats s = derive_stats(*cm);
    t.add_row({name, cm->n(), cell(s.accuracy), cell(s.fpr), cell(s.fnr)});
  }
  return t;
}

Table confusion_different_table(
    const std::vector<std::pair<std::string, const ConfusionMatrix*>>& rows) {
  Table t("confusion-results-different",
          {"dataset", "n", "prevalence", "ppv", "npv", "detection-rate"});
  t.rate_digits = 2;
  for (const auto& [name, cm] : rows) {
    const ConfusionStats s = derive_stats(*cm);
    t.add_row({name, cm->n(), cell(s.prevalence), cell(s.ppv), cell(s.npv),
               cell(s.detection_rate)});
  }
  return t;
}

Table rate_by_decile_table(
    const std::vector<std::pair<std::string, const DecileRates*>>& series) {
  Table t("rate-by-decile",
          {"dataset", "decile", "n", "rate", "ci-low", "ci-high"});
  for (const auto& [name, rates] : series) {
    for (size_t d = 0; d < rates->size(); ++d) {
      const DecileRate& cellv = (*rates)[d];
      t.add_row({name, long(d + 1), cellv.n, cell(cellv.rate),
                 cell(cellv.ci_low), cell(cellv.ci_high)});
    }
  }
  return t;
}

std::string rate_by_decile_svg(
    const std::vector<std::pair<std::string, const DecileRates*>>& series,
    bool ci_band_for_last) {
  ChartFrame frame(640, 420, 1, 10, 0, 1.0, "Recidivism rate by score decile",
                   "decile", "rate");
  std::vector<double> deciles;
  for (int d = 1; d <= 10; ++d) deciles.push_back(d);
  frame.draw_axes(deciles, &plain_tick_label, frame.y.ticks(6), 1);

  std::vector<std::pair<std::string, std::string>> legend;
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kSeriesColors[i % 6];
    legend.emplace_back(series[i].first, color);
    const DecileRates& rates = *series[i].second;
    const bool with_ci = ci_band_for_last && i + 1 == series.size();
    std::vector<std::pair<double, double>> pts;
    for (size_t d = 0; d < rates.size(); ++d) {
      if (!rates[d].rate) continue;
      const double px = frame.x(double(d + 1));
      pts.emplace_back(px, frame.y(*rates[d].rate));
      if (with_ci && rates[d].ci_low) {
        frame.canvas.line(px, frame.y(*rates[d].ci_low), px,
                          frame.y(*rates[d].ci_high), color, 1.0);
      }
    }
    frame.canvas.polyline(pts, color, 2.0);
    for (const auto& [px, py] : pts) frame.canvas.circle(px, py, 2.5, color);
  }
  frame.legend(legend);
  return frame.canvas.finish();
}

Table decile_distribution_table(const DecileDistribution& dist) {
  Table t("decile-distribution-by-outcome",
          {"decile", "non-recidivists", "recidivists", "non-recidivist-density",
           "recidivist-density"});
  t.rate_digits = 4;
  for (size_t d = 0; d < 10; ++d) {
    t.add_row({long(d + 1), dist.negatives[d], dist.positives[d],
               dist.negative_density[d], dist.positive_density[d]});
  }
  return t;
}

std::string decile_distribution_svg(
    const std::vector<std::pair<std::string, const DecileDistribution*>>& dists) {
  long y_max = 1;
  for (const auto& [name, dist] : dists) {
    for (size_t d = 0; d < 10; ++d) {
      y_max = std::max({y_max, dist->positives[d], dist->negatives[d]});
    }
  }
  ChartFrame frame(760, 420, 1, 10, 0, double(y_max) * 1.05,
                   "Score decile distribution by outcome", "decile", "persons");
  std::vector<double> deciles;
  for (int d = 1; d <= 10; ++d) deciles.push_back(d);
  frame.draw_axes(deciles, &plain_tick_label, frame.y.ticks(5), 0);

  std::vector<std::pair<std::string, std::string>> legend;
  size_t color_idx = 0;
  for (const auto& [name, dist] : dists) {
    const char* neg_color = kSeriesColors[color_idx % 6];
    const char* pos_color = kSeriesColors[(color_idx + 1) % 6];
    color_idx += 2;
    legend.emplace_back(name + " non-recidivists", neg_color);
    legend.emplace_back(name + " recidivists", pos_color);
    std::vector<std::pair<double, double>> neg_pts, pos_pts;
    for (size_t d = 0; d < 10; ++d) {
      neg_pts.emplace_back(frame.x(double(d + 1)),
                           frame.y(double(dist->negatives[d])));
      pos_pts.emplace_back(frame.x(double(d + 1)),
                           frame.y(double(dist->positives[d])));
    }
    frame.canvas.polyline(neg_pts, neg_color, 2.0);
    frame.canvas.polyline(pos_pts, pos_color, 2.0, "5 3");
    if (dist->crossing) frame.vline(*dist->crossing, pos_color, "2 3");
  }
  frame.legend(legend);
  return frame.canvas.finish();
}

Table test_results_table(
    const std::vector<std::pair<std::string, const TestResult*>>& rows) {
  Table t("statistical-significance-tests",
          {"comparison", "n", "mean", "se", "ci-low", "ci-high", "null-h0",
           "t-stat", "t-pvalue", "chi-sq", "chi-pvalue"});
  t.rate_digits = 3;
  for (const auto& [name, r] : rows) {
    t.add_row({name, r->n, r->mean, r->se, r->ci_low, r->ci_high, r->null_p0,
               r->t_stat ? TableCell(*r->t_stat) : TableCell(std::monostate{}),
               r->t_pvalue ? TableCell(format_pvalue(*r->t_pvalue))
                           : TableCell(std::monostate{}),
               r->chi_sq, format_pvalue(r->chi_pvalue)});
  }
  return t;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    if (!out.flush()) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

}  // namespace recidaudit
