#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vdd/archspace.hpp"
#include "vdd/childeval.hpp"

namespace vdd::controller {

/// Single-layer tanh recurrent cell with an embedding of the previous action
/// and three categorical output heads (input-a, input-b, op). Parameters live
/// in one flat vector so numeric checks and updates stay simple.
struct ControllerState {
    int T = 0;        // blocks per architecture
    int H = 0;        // hidden size
    int pool_max = 0; // head width: pool size at the last block, 4 + T - 1

    std::vector<double> params;
    std::vector<double> hidden; // working buffer, zeroed at each sample
    std::mt19937_64 rng;
    std::uint64_t rng_seed = 0;

    // flat layout offsets
    std::size_t off_embed = 0; // (2*pool_max + 2) x H
    std::size_t off_wx = 0;    // H x H
    std::size_t off_wh = 0;    // H x H
    std::size_t off_bh = 0;    // H
    std::size_t off_head_a = 0;  // pool_max x H (+ pool_max bias)
    std::size_t off_head_b = 0;  // pool_max x H (+ pool_max bias)
    std::size_t off_head_op = 0; // 2 x H (+ 2 bias)
};

struct ActionTrace {
    std::vector<int> actions;    // 3T categorical choices: a, b, op per block
    std::vector<double> logprobs; // natural log, one per choice
    archspace::Architecture arch;
};

/// Exponential moving average of rewards; first update seeds b with the reward.
struct BaselineState {
    double b = 0.0;
    double alpha = 0.8; // history weight: b <- alpha*b + (1-alpha)*R
    bool initialized = false;
};

struct SearchConfig {
    int T = 7;
    int trials = 500;
    double lr = 0.1;
    int m = 1; // architectures per minibatch, fixed
    int child_iters = 3000;
    std::uint64_t seed = 0;
    int hidden = 32;
    double baseline_alpha = 0.8;
    // Optional stop once the cumulative best improves by <= converge_delta
    // over converge_window consecutive trials (0 disables).
    int converge_window = 0;
    double converge_delta = 0.01;
};

struct SearchLogEntry {
    int trial = 0; // 1-based
    std::string arch;
    double reward = 0.0;
    double baseline = 0.0;
    double best = 0.0;
};

struct SearchLog {
    std::vector<SearchLogEntry> entries;
    std::string best_arch;
    double best_reward = 0.0;
    long long total_child_iters = 0;
};

/// Uniform [-0.1, 0.1] parameter init, zero hidden state; deterministic in seed.
ControllerState init_controller(int T, int H, std::uint64_t seed);

/// Samples one architecture with masked renormalized softmax heads (pool-size
/// and duplicate-input masking), advancing the hidden state once per draw.
/// The result always validates.
ActionTrace sample_architecture(ControllerState& state);

/// Total log-probability of a fixed action sequence under the current
/// parameters (teacher-forced replay of sample_architecture).
double score_trace(const ControllerState& state, const std::vector<int>& actions);

/// Gradient of score_trace with respect to the flat parameter vector,
/// backpropagated through all 3T recurrent steps.
std::vector<double> logprob_gradient(const ControllerState& state,
                                     const std::vector<int>& actions);

/// REINFORCE ascent step: params += lr * (R - baseline.b) * grad. A zero
/// advantage is an exact no-op. Throws Errc::NonFiniteGradient.
void reinforce_update(ControllerState& state, const ActionTrace& trace, double reward,
                      const BaselineState& baseline, double lr);

BaselineState update_baseline(BaselineState baseline, double reward);

/// The outer search loop: sample, evaluate, baseline, update, trials times.
/// Deterministic given cfg.seed and a deterministic evaluator. Evaluator
/// errors propagate with the failing trial in the message.
SearchLog run_search(const SearchConfig& cfg, childeval::ChildEvaluator& evaluator);

/// Line-oriented log: "trial, arch, reward, baseline, best_so_far".
std::string searchlog_to_text(const SearchLog& log);
SearchLog searchlog_from_text(const std::string& text);

/// Reward scatter plus baseline and cumulative-best curves.
std::string searchlog_progress_svg(const SearchLog& log);

} // namespace vdd::controller
