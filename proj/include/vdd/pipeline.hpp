#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vdd/childeval.hpp"
#include "vdd/controller.hpp"
#include "vdd/detectmetrics.hpp"
#include "vdd/synthdata.hpp"

namespace vdd::pipeline {

/// gen: one dataset directory per domain (manifest + PGM images).
struct GenConfig {
    std::vector<std::string> domains = {"A", "B", "C", "D"};
    std::vector<int> counts; // empty -> per-domain paper defaults (402/396/50/76)
    std::uint64_t seed = 0;
    std::string out_dir;
    synthdata::PartGeometry geometry;
};

struct GenResult {
    std::vector<std::string> manifest_paths;
    std::vector<int> sizes;
};

GenResult run_gen(const GenConfig& cfg);

/// unwrap: RANSAC circle fit (or explicit center), polar resampling, polygon
/// transforms, fill-rate audit.
struct UnwrapConfig {
    std::string manifest;
    std::string out_dir;
    int out_height = 200; // desk scale; paper scale is 800x1333
    int out_width = 333;
    double r_min_frac = 0.30; // annulus bounds as fractions of the fitted radius
    double r_max_frac = 0.98;
    double grad_frac = 0.5;   // border-point threshold as a fraction of max gradient
    int ransac_iterations = 500;
    double ransac_tol = 2.0;
    std::uint64_t seed = 0;
    bool use_center_override = false;
    double center_x = 0.0, center_y = 0.0, center_r = 0.0;
};

struct UnwrapResult {
    std::string manifest_path;
    int unwrapped = 0;
    int skipped = 0; // images with no circle model
    double fill_rate_cartesian_mean = 0.0;
    double fill_rate_polar_mean = 0.0;
    double improved_fraction = 0.0; // burrs whose polar fill rate is higher
    int burrs = 0;
};

UnwrapResult run_unwrap(const UnwrapConfig& cfg);

/// search: NAS over merge blocks with the chosen child evaluator.
struct SearchCmdConfig {
    std::string manifest; // polar dataset; required for the microdet evaluator
    std::string out_dir;
    std::string evaluator = "surrogate"; // surrogate | microdet | external
    std::string external_command;
    int external_timeout_ms = 600'000;
    controller::SearchConfig search;
    childeval::MicroDetConfig microdet;
    childeval::DetectParams detect;
    detectmetrics::EvalConfig eval;
    std::uint64_t split_seed = 0; // 1:2:1 split of the polar dataset
};

struct SearchResult {
    controller::SearchLog log;
    std::string log_path;
    std::string best_arch_path;
    std::string svg_path;
};

SearchResult run_search_cmd(const SearchCmdConfig& cfg);

/// train: fits the micro-detector head for one architecture.
struct TrainCmdConfig {
    std::string manifest; // polar dataset
    std::string arch;     // canonical encoding, or @file containing it
    std::string out_model;
    childeval::MicroDetConfig microdet;
    std::string subset = "nas+train"; // nas | train | eval | nas+train | all
    std::uint64_t split_seed = 0;
    std::uint64_t seed = 0;
};

std::string run_train_cmd(const TrainCmdConfig& cfg); // returns model path

/// detect: detections JSON for every image of the (sub)dataset.
struct DetectCmdConfig {
    std::string manifest;
    std::string model;
    std::string out_json;
    childeval::DetectParams params;
    std::string subset = "all";
    std::uint64_t split_seed = 0;
};

std::string run_detect_cmd(const DetectCmdConfig& cfg);

/// eval: mAP of a detections file against dataset ground truth.
struct EvalCmdConfig {
    std::string manifest;
    std::string detections;
    std::string out_json;
    detectmetrics::EvalConfig eval;
    std::string subset = "all";
    std::uint64_t split_seed = 0;
};

struct EvalResult {
    double map = 0.0;
    std::vector<double> ap_per_iou;
    int images = 0;
    int gts = 0;
};

EvalResult run_eval_cmd(const EvalCmdConfig& cfg);

/// report: table + SVG from a result-grid JSON file.
struct ReportCmdConfig {
    std::string grid_json;
    std::string out_dir;
};

struct ReportResult {
    std::string table_path;
    std::string svg_path;
};

ReportResult run_report_cmd(const ReportCmdConfig& cfg);

/// Model file payload (arch + head), JSON on disk.
struct Model {
    archspace::Architecture arch;
    childeval::MicroDetHead head;
    int channels = childeval::kChannels;
};

void write_model(const Model& model, const std::string& path);
Model read_model(const std::string& path);

/// Detections file payload: {"<image_id>": {"boxes": [[x1,y1,x2,y2],...],
/// "scores": [...]}} in one JSON document.
using DetectionsFile = std::map<std::string, std::vector<detectmetrics::Detection>>;
void write_detections(const DetectionsFile& dets, const std::string& path);
DetectionsFile read_detections(const std::string& path);

/// Deterministic subset selection shared by search/train/detect/eval.
synthdata::Dataset select_subset(const synthdata::Dataset& ds, const std::string& subset,
                                 std::uint64_t split_seed);

/// Grid JSON reader for the report command.
detectmetrics::ReportGrid read_grid(const std::string& path);

} // namespace vdd::pipeline
