#pragma once

#include <string>

namespace vdd::svg {

/// Minimal deterministic SVG builder (fixed decimal formatting, no timestamps).
class Canvas {
public:
    Canvas(double width, double height);

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0);
    void polyline(const std::string& points, const std::string& stroke,
                  double stroke_width = 1.0);
    void rect(double x, double y, double w, double h, const std::string& fill);
    void circle(double cx, double cy, double r, const std::string& fill);
    void text(double x, double y, const std::string& content, double size = 12.0,
              const std::string& anchor = "start");

    std::string finish() const;

private:
    double width_;
    double height_;
    std::string body_;
};

/// Fixed-precision number formatting shared by all SVG output.
std::string num(double v);

} // namespace vdd::svg
