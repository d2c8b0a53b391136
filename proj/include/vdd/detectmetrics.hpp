#pragma once

#include <string>
#include <vector>

#include "vdd/geometry.hpp"

namespace vdd::detectmetrics {

struct Detection {
    geometry::BBox box;      // polar-image pixel coordinates
    double confidence = 0.0; // [0, 1]
};

struct MatchResult {
    std::vector<bool> is_tp;      // per detection, in confidence order of `order`
    std::vector<int> order;       // detection indices sorted by descending confidence
    std::vector<bool> gt_matched; // per ground-truth box
    double iou_threshold = 0.5;
};

struct PRCurve {
    std::vector<double> recall;    // non-decreasing
    std::vector<double> precision;
    double ap = 0.0;
};

struct EvalConfig {
    std::vector<double> iou_thresholds = default_iou_thresholds();
    double confidence_cutoff = 0.5; // display overlays only, never AP
    double nms_iou = 0.5;

    static std::vector<double> default_iou_thresholds(); // 0.50, 0.55, ..., 0.95
};

/// Probability map over detector cells, row-major.
struct ProbMap {
    int rows = 0;
    int cols = 0;
    std::vector<double> values; // [0, 1]

    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
};

/// 4-connected components of cells >= threshold; one detection per component,
/// box = component cell bounds scaled to pixels, confidence = max cell value.
std::vector<Detection> extract_boxes(const ProbMap& probmap, double cell_scale_x,
                                     double cell_scale_y, double threshold);
std::vector<Detection> extract_boxes(const ProbMap& probmap, double cell_scale,
                                     double threshold);

/// Greedy NMS by descending confidence; suppresses IoU strictly above iou_thresh.
/// Ties break toward the smaller box, then input order.
std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_thresh);

/// Intersection over union; 0 for disjoint boxes.
double iou(const geometry::BBox& a, const geometry::BBox& b);

/// Greedy confidence-ordered matching, one GT per detection, IoU >= threshold
/// counts as a match; equal IoU breaks toward the lower GT index.
MatchResult match_at_iou(const std::vector<Detection>& dets,
                         const std::vector<geometry::BBox>& gts, double iou_threshold);

/// PR sweep over confidence-ordered detections with 101-point interpolated AP.
/// No GTs: AP = 1.0 with no detections (nominal skip), else 0.0.
PRCurve average_precision(const std::vector<Detection>& dets,
                          const std::vector<geometry::BBox>& gts, double iou_threshold);

/// Per-threshold AP over the pooled image set (matching stays per-image),
/// averaged across cfg.iou_thresholds.
double mean_ap(const std::vector<std::vector<Detection>>& dets_per_image,
               const std::vector<std::vector<geometry::BBox>>& gts_per_image,
               const EvalConfig& cfg);

/// Single-threshold pooled AP (the per-threshold component of mean_ap).
PRCurve pooled_average_precision(const std::vector<std::vector<Detection>>& dets_per_image,
                                 const std::vector<std::vector<geometry::BBox>>& gts_per_image,
                                 double iou_threshold);

/// mAP grid in the paper's table layout: rows = methods, columns = test
/// domains grouped by training domain.
struct ReportGrid {
    std::vector<std::string> training_sets;
    std::vector<std::string> test_sets;
    std::vector<std::string> method_labels;
    // values[method][train][test], fractions in [0, 1]
    std::vector<std::vector<std::vector<double>>> values;
};

struct Report {
    std::string table; // UTF-8 text table, percentages to one decimal
    std::string svg;   // grouped bar chart
};

/// Renders the table and chart. Throws Errc::IncompleteGrid when any cell is
/// missing (dimension mismatch or non-finite value).
Report report(const ReportGrid& grid);

} // namespace vdd::detectmetrics
