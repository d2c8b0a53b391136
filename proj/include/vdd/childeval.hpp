#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "vdd/archspace.hpp"
#include "vdd/detectmetrics.hpp"
#include "vdd/image.hpp"
#include "vdd/synthdata.hpp"

namespace vdd::childeval {

struct FeatureMap {
    int rows = 0;
    int cols = 0;
    int channels = 0;
    std::vector<float> data; // [row][col][channel]

    float at(int r, int c, int ch) const {
        return data[(static_cast<std::size_t>(r) * cols + c) * channels + ch];
    }
    float& at(int r, int c, int ch) {
        return data[(static_cast<std::size_t>(r) * cols + c) * channels + ch];
    }
};

/// Backbone stand-in: levels P2..P5 of a 4-channel handcrafted filter bank
/// (intensity, |dx|, |dy|, 3x3 local std), level k downscaled by 2^k via
/// repeated 2x2 average pooling with edge-replicated ceil padding.
struct FeaturePyramid {
    std::array<FeatureMap, 4> levels; // P2..P5
    int image_rows = 0;
    int image_cols = 0;
};

inline constexpr int kChannels = 4;

/// Throws Errc::ImageTooSmall below 32x32.
FeaturePyramid build_pyramid(const GrayImage& image);

/// Evaluates the blocks in order over the growing map pool and returns the
/// newest map. Per block the higher-id input is resampled (nearest neighbor)
/// to the lower-id input's resolution; SUM adds, POOL adds with the second
/// input gated by sigmoid(GAP(first)) per channel.
FeatureMap assemble(const archspace::Architecture& arch, const FeaturePyramid& pyr);

struct SurrogateSpec {
    double w_cov = 0.5;
    double w_bal = 0.3;
    double w_depth = 0.2;
};

struct Reward {
    double value = 0.0; // [0, 1]
};

/// Deterministic architecture score: backbone coverage + SUM/POOL balance +
/// relative depth, weighted by spec.
Reward surrogate_reward(const archspace::Architecture& arch, const SurrogateSpec& spec = {});

struct MicroDetHead {
    std::vector<double> weights; // channels + 1, bias last
};

struct MicroDetConfig {
    int channels = kChannels;
    double train_lr = 0.5;
    int train_iters = 300;      // desk default; paper-scale 3000
    bool augment_flip = true;   // left-right flip augmentation of the train set
    bool full_batch = false;    // gradient over all images per step instead of one
    double pos_weight_cap = 50.0;
};

/// Cell-wise training data for one image: assembled features plus the
/// positive/negative label per cell (center-inside-GT-bbox rule).
struct CellBatch {
    FeatureMap features;
    std::vector<std::uint8_t> labels; // rows*cols
    double pos_weight = 1.0;          // balanced weight applied to positive cells
};

CellBatch make_cell_batch(const FeatureMap& features,
                          const std::vector<geometry::BBox>& gt_boxes, int image_rows,
                          int image_cols, double pos_weight_cap);

/// Weighted mean logistic loss of the head over the batch.
double cell_loss(const MicroDetHead& head, const CellBatch& batch);

/// Gradient of cell_loss with respect to the head weights.
std::vector<double> cell_loss_grad(const MicroDetHead& head, const CellBatch& batch);

/// SGD over train_iters single-image steps (epoch-shuffled, seeded), or
/// full-batch steps when cfg.full_batch. Samples must already be polar.
/// Throws Errc::NonFiniteLoss with step diagnostics.
MicroDetHead train_microdet(const archspace::Architecture& arch, const MicroDetConfig& cfg,
                            const synthdata::Dataset& train, std::uint64_t seed);

/// Per-cell objectness probabilities from the head over an assembled map.
detectmetrics::ProbMap predict_probmap(const MicroDetHead& head, const FeatureMap& features);

struct DetectParams {
    double extract_threshold = 0.35;
    double nms_iou = 0.5;
};

/// Full single-image detection: assemble, head, box extraction, NMS.
/// Boxes come back in polar-image pixel coordinates.
std::vector<detectmetrics::Detection> detect_image(const archspace::Architecture& arch,
                                                   const MicroDetHead& head,
                                                   const FeaturePyramid& pyr,
                                                   const DetectParams& params);

/// Ground-truth polar boxes of a polar sample (bbox per stored polygon part).
std::vector<geometry::BBox> sample_gt_boxes(const synthdata::Sample& sample);

/// Child evaluator interface used by the search loop. Implementations must be
/// deterministic functions of (arch, child_iters).
class ChildEvaluator {
public:
    virtual ~ChildEvaluator() = default;
    virtual Reward evaluate(const archspace::Architecture& arch, int child_iters) = 0;
};

class SurrogateEvaluator final : public ChildEvaluator {
public:
    explicit SurrogateEvaluator(SurrogateSpec spec = {}) : spec_(spec) {}
    Reward evaluate(const archspace::Architecture& arch, int) override {
        return surrogate_reward(arch, spec_);
    }

private:
    SurrogateSpec spec_;
};

/// Trains the micro-detector on the train subset and scores mAP on the NAS
/// subset. Pyramids are cached per sample across trials.
class MicroDetEvaluator final : public ChildEvaluator {
public:
    MicroDetEvaluator(synthdata::Dataset train, synthdata::Dataset nas, MicroDetConfig cfg,
                      DetectParams detect, detectmetrics::EvalConfig eval, std::uint64_t seed);
    Reward evaluate(const archspace::Architecture& arch, int child_iters) override;

private:
    const FeaturePyramid& pyramid_for(const synthdata::Sample& sample);

    synthdata::Dataset train_;
    synthdata::Dataset nas_;
    MicroDetConfig cfg_;
    DetectParams detect_;
    detectmetrics::EvalConfig eval_;
    std::uint64_t seed_;
    std::unordered_map<std::string, FeaturePyramid> pyramid_cache_;
};

/// Newline-delimited JSON over a child process's standard streams.
/// Request {"id","arch","child_iters"}, reply {"id","reward"}; a reply with a
/// mismatched id or a reward outside [0,1] is Errc::ExternalMalformedReply.
class ExternalEvaluator final : public ChildEvaluator {
public:
    explicit ExternalEvaluator(std::string command, int timeout_ms = 600'000);
    ~ExternalEvaluator() override;
    Reward evaluate(const archspace::Architecture& arch, int child_iters) override;

    ExternalEvaluator(const ExternalEvaluator&) = delete;
    ExternalEvaluator& operator=(const ExternalEvaluator&) = delete;

private:
    void spawn();
    void shutdown();

    std::string command_;
    int timeout_ms_;
    int next_id_ = 1;
    int child_pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string read_buffer_;
};

} // namespace vdd::childeval
