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

#include "recidaudit/svg.hpp"

#include <cmath>
#include <cstdio>

namespace recidaudit {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c; break;
    }
  }
  return out;
}

constexpr double kMarginLeft = 62;
constexpr double kMarginRight = 18;
constexpr double kMarginTop = 36;
constexpr double kMarginBottom = 46;

}  // namespace

SvgCanvas::SvgCanvas(int width, int height) : width_(width), height_(height) {}

void SvgCanvas::rect(double x, double y, double w, double h,
                     std::string_view fill, double opacity) {
  body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" fill=\"" +
           std::string(fill) + "\"";
  if (opacity < 1.0) body_ += " fill-opacity=\"" + num(opacity) + "\"";
  body_ += "/>\n";
}

void SvgCanvas::line(double x1, double y1, double x2, double y2,
                     std::string_view stroke, double stroke_width,
                     std::string_view dash) {
  body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
           num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"" + num(stroke_width) +
           "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += "/>\n";
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& points,
                         std::string_view stroke, double stroke_width,
                         std::string_view dash) {
  if (points.empty()) return;
  body_ += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"" + num(stroke_width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += " points=\"";
  for (const auto& [x, y] : points) {
    body_ += num(x) + "," + num(y) + " ";
  }
  body_ += "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double r, std::string_view fill) {
  body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
           num(r) + "\" fill=\"" + std::string(fill) + "\"/>\n";
}

void SvgCanvas::text(double x, double y, std::string_view s, int font_size,
                     std::string_view anchor, std::string_view fill) {
  body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(font_size) + "\" text-anchor=\"" +
           std::string(anchor) + "\" fill=\"" + std::string(fill) + "\">" +
           escape_text(s) + "</text>\n";
}

std::string SvgCanvas::finish() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width_) + "\" height=\"" +
                    std::to_string(height_) + "\" viewBox=\"0 0 " +
                    std::to_string(width_) + " " + std::to_string(height_) +
                    "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

double LinearScale::operator()(double v) const {
  if (domain_max == domain_min) return (range_min + range_max) / 2.0;
  const double t = (v - domain_min) / (domain_max - domain_min);
  return range_min + t * (range_max - range_min);
}

std::vector<double> LinearScale::ticks(int count) const {
  std::vector<double> out;
  if (count < 2) count = 2;
  for (int i = 0; i < count; ++i) {
    out.push_back(domain_min +
                  (domain_max - domain_min) * double(i) / double(count - 1));
  }
  return out;
}

ChartFrame::ChartFrame(int width, int height, double x_min, double x_max,
                       double y_min, double y_max, std::string_view title,
                       std::string_view x_label, std::string_view y_label)
    : canvas(width, height) {
  x = LinearScale{x_min, x_max, kMarginLeft, double(width) - kMarginRight};
  y = LinearScale{y_min, y_max, double(height) - kMarginBottom, kMarginTop};
  canvas.text(width / 2.0, 20, title, 14, "middle", "#111");
  canvas.text(width / 2.0, height - 8, x_label, 12, "middle");
  // y label drawn horizontally above the axis to avoid transforms
  canvas.text(6, kMarginTop - 10, y_label, 12, "start");
}

void ChartFrame::draw_axes(const std::vector<double>& x_ticks,
                           std::string (*x_tick_labeler)(double),
                           const std::vector<double>& y_ticks, int y_digits) {
  const double x0 = x.range_min;
  const double x1 = x.range_max;
  const double y0 = y.range_min;  // bottom in pixels
  const double y1 = y.range_max;  // top in pixels
  canvas.line(x0, y0, x1, y0, "#444");
  canvas.line(x0, y0, x0, y1, "#444");
  for (const double t : x_ticks) {
    const double px = x(t);
    canvas.line(px, y0, px, y0 + 4, "#444");
    canvas.text(px, y0 + 18, x_tick_labeler(t), 10, "middle");
  }
  for (const double t : y_ticks) {
    const double py = y(t);
    canvas.line(x0 - 4, py, x0, py, "#444");
    canvas.line(x0, py, x1, py, "#eee");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.*f", y_digits, t);
    canvas.text(x0 - 8, py + 4, buf, 10, "end");
  }
}

void ChartFrame::legend(
    const std::vector<std::pair<std::string, std::string>>& label_color_pairs) {
  double lx = x.range_min + 10;
  const double ly = y.range_max + 12;
  for (const auto& [label, color] : label_color_pairs) {
    canvas.rect(lx, ly - 9, 12, 12, color);
    canvas.text(lx + 16, ly + 1, label, 11);
    lx += 16 + 7.0 * double(label.size()) + 24;
  }
}

void ChartFrame::vline(double x_value, std::string_view stroke,
                       std::string_view dash) {
  const double px = x(x_value);
  if (px < x.range_min - 0.5 || px > x.range_max + 0.5) return;
  canvas.line(px, y.range_min, px, y.range_max, stroke, 1.5, dash);
}

}  // namespace recidaudit
