#include "vdd/svg.hpp"

#include <cstdio>

namespace vdd::svg {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

Canvas::Canvas(double width, double height) : width_(width), height_(height) {}

void Canvas::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                  double stroke_width) {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
             "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             num(stroke_width) + "\"/>\n";
}

void Canvas::polyline(const std::string& points, const std::string& stroke,
                      double stroke_width) {
    body_ += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(stroke_width) + "\"/>\n";
}

void Canvas::rect(double x, double y, double w, double h, const std::string& fill) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
             "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
}

void Canvas::circle(double cx, double cy, double r, const std::string& fill) {
    body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
             "\" fill=\"" + fill + "\"/>\n";
}

void Canvas::text(double x, double y, const std::string& content, double size,
                  const std::string& anchor) {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
             "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">" + content +
             "</text>\n";
}

std::string Canvas::finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) +
           "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " +
           num(height_) + "\">\n<rect x=\"0\" y=\"0\" width=\"" + num(width_) +
           "\" height=\"" + num(height_) + "\" fill=\"white\"/>\n" + body_ + "</svg>\n";
}

} // namespace vdd::svg
