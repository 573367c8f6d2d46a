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

#ifndef RECIDAUDIT_SVG_HPP_
#define RECIDAUDIT_SVG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recidaudit {

/// Minimal self-contained SVG writer: rectangles, lines, polylines,
/// circles and text. Coordinates are raw pixels; charts do their own
/// scaling. Output is deterministic for identical input.
class SvgCanvas {
 public:
  SvgCanvas(int width, int height);

  void rect(double x, double y, double w, double h, std::string_view fill,
            double opacity = 1.0);
  void line(double x1, double y1, double x2, double y2,
            std::string_view stroke, double stroke_width = 1.0,
            std::string_view dash = {});
  void polyline(const std::vector<std::pair<double, double>>& points,
                std::string_view stroke, double stroke_width = 1.5,
                std::string_view dash = {});
  void circle(double cx, double cy, double r, std::string_view fill);
  void text(double x, double y, std::string_view s, int font_size = 12,
            std::string_view anchor = "start", std::string_view fill = "#333");

  int width() const { return width_; }
  int height() const { return height_; }

  std::string finish() const;

 private:
  int width_;
  int height_;
  std::string body_;
};

/// Linear mapping from data space to a pixel viewport, with simple tick
/// generation. Used by all chart emitters.
struct LinearScale {
  double domain_min = 0;
  double domain_max = 1;
  double range_min = 0;
  double range_max = 1;

  double operator()(double v) const;
  std::vector<double> ticks(int count = 5) const;
};

/// Shared chart frame: margins, axes, tick labels, title.
struct ChartFrame {
  SvgCanvas canvas;
  LinearScale x;
  LinearScale y;

  ChartFrame(int width, int height, double x_min, double x_max, double y_min,
             double y_max, std::string_view title, std::string_view x_label,
             std::string_view y_label);

  /// Draws axis lines and ticks. x_tick_labeler formats tick values
  /// (dates, deciles, ...).
  void draw_axes(const std::vector<double>& x_ticks,
                 std::string (*x_tick_labeler)(double),
                 const std::vector<double>& y_ticks, int y_digits = 2);

  void legend(const std::vector<std::pair<std::string, std::string>>&
                  label_color_pairs);

  /// Vertical reference line at data x.
  void vline(double x_value, std::string_view stroke,
             std::string_view dash = {});
};

}  // namespace recidaudit

#endif  // RECIDAUDIT_SVG_HPP_
