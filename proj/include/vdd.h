/* vdd.h — C API of the visual defect detection pipeline library.
 *
 * All functions return vdd_status; VDD_OK is 0. On failure a human-readable
 * message is available from vdd_last_error() on the calling thread. Handles
 * are opaque and must be released with their matching *_close/*_free call.
 */
#ifndef VDD_H
#define VDD_H

#include <stddef.h>
#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

typedef enum vdd_status {
    VDD_OK = 0,
    VDD_ERR_INVALID_ARGUMENT = 1,
    VDD_ERR_DEGENERATE_INPUT = 2,
    VDD_ERR_EMPTY_RESULT = 3,
    VDD_ERR_NO_MODEL = 4,
    VDD_ERR_OUT_OF_ANNULUS = 5,
    VDD_ERR_OUT_OF_RANGE = 6,
    VDD_ERR_INVALID_CONFIG = 7,
    VDD_ERR_INVALID_POLYGON = 8,
    VDD_ERR_INVALID_RATIOS = 9,
    VDD_ERR_IO = 10,
    VDD_ERR_PARSE = 11,
    VDD_ERR_TOO_LARGE = 12,
    VDD_ERR_NON_FINITE_GRADIENT = 13,
    VDD_ERR_NON_FINITE_LOSS = 14,
    VDD_ERR_IMAGE_TOO_SMALL = 15,
    VDD_ERR_EXTERNAL_TIMEOUT = 16,
    VDD_ERR_EXTERNAL_MALFORMED_REPLY = 17,
    VDD_ERR_INCOMPLETE_GRID = 18,
    VDD_ERR_INTERNAL = 19
} vdd_status;

const char* vdd_version(void);
const char* vdd_status_name(vdd_status status);

/* Message of the most recent failure on this thread; empty string if none. */
const char* vdd_last_error(void);

/* ---------------------------------------------------------------- datasets */

typedef struct vdd_dataset vdd_dataset;

vdd_status vdd_dataset_open(const char* manifest_path, vdd_dataset** out);
void vdd_dataset_close(vdd_dataset* ds);
size_t vdd_dataset_size(const vdd_dataset* ds);
const char* vdd_dataset_domain(const vdd_dataset* ds);
/* NULL when index is out of range. */
const char* vdd_dataset_sample_id(const vdd_dataset* ds, size_t index);

/* ----------------------------------------------------------- architectures */

typedef struct vdd_arch vdd_arch;

/* Parses the canonical "a-b-OP;a-b-OP" encoding and validates it. */
vdd_status vdd_arch_parse(const char* encoding, vdd_arch** out);
void vdd_arch_free(vdd_arch* arch);
size_t vdd_arch_block_count(const vdd_arch* arch);
/* Canonical encoding; fails with VDD_ERR_TOO_LARGE when buf is too small. */
vdd_status vdd_arch_encode(const vdd_arch* arch, char* buf, size_t bufsize);
/* Deterministic structural score in [0,1] used by the surrogate evaluator. */
vdd_status vdd_arch_surrogate_reward(const vdd_arch* arch, double* out_reward);

/* ------------------------------------------------------------ gen command */

typedef struct vdd_gen_params {
    const char* domains;  /* comma list, e.g. "A,B,C,D" */
    const char* counts;   /* comma list of sizes; NULL/empty -> paper defaults */
    uint64_t seed;
    int canvas;           /* square canvas side, px */
    double r_border;      /* outer border circle radius */
    double r_bore;        /* inner bore radius */
} vdd_gen_params;

void vdd_gen_params_init(vdd_gen_params* p);
vdd_status vdd_gen_run(const vdd_gen_params* p, const char* out_dir);

/* ---------------------------------------------------------- unwrap command */

typedef struct vdd_unwrap_params {
    const char* manifest;
    int out_height;
    int out_width;
    double r_min_frac;
    double r_max_frac;
    double grad_frac;
    int ransac_iterations;
    double ransac_tol;
    uint64_t seed;
    int use_center_override; /* nonzero -> skip RANSAC, use cx/cy/cr */
    double center_x, center_y, center_r;
} vdd_unwrap_params;

typedef struct vdd_unwrap_stats {
    int unwrapped;
    int skipped;
    int burrs;
    double fill_rate_cartesian_mean;
    double fill_rate_polar_mean;
    double improved_fraction;
} vdd_unwrap_stats;

void vdd_unwrap_params_init(vdd_unwrap_params* p);
vdd_status vdd_unwrap_run(const vdd_unwrap_params* p, const char* out_dir,
                          vdd_unwrap_stats* stats /* may be NULL */);

/* ---------------------------------------------------------- search command */

typedef struct vdd_search_params {
    const char* manifest;       /* polar dataset; required for microdet */
    const char* evaluator;      /* "surrogate" | "microdet" | "external" */
    const char* external_command;
    int external_timeout_ms;
    int blocks;                 /* T */
    int trials;
    double lr;
    int child_iters;
    int hidden;
    double baseline_alpha;
    int converge_window;        /* 0 disables the convergence stop */
    double converge_delta;
    uint64_t seed;
    uint64_t split_seed;        /* 0 -> use seed */
    double train_lr;
    int augment_flip;
    double extract_threshold;
    double nms_iou;
} vdd_search_params;

typedef struct vdd_search_stats {
    int trials_run;
    double best_reward;
    long long total_child_iters;
} vdd_search_stats;

void vdd_search_params_init(vdd_search_params* p);
vdd_status vdd_search_run(const vdd_search_params* p, const char* out_dir,
                          vdd_search_stats* stats /* may be NULL */);

/* ----------------------------------------------------------- train command */

typedef struct vdd_train_params {
    const char* manifest;  /* polar dataset */
    const char* arch;      /* canonical encoding or "@file" */
    const char* subset;    /* nas | train | eval | nas+train | all */
    uint64_t split_seed;
    uint64_t seed;
    double train_lr;
    int train_iters;
    int augment_flip;
} vdd_train_params;

void vdd_train_params_init(vdd_train_params* p);
vdd_status vdd_train_run(const vdd_train_params* p, const char* out_model);

/* ---------------------------------------------------------- detect command */

typedef struct vdd_detect_params {
    const char* manifest;  /* polar dataset */
    const char* model;
    const char* subset;
    uint64_t split_seed;
    double extract_threshold;
    double nms_iou;
} vdd_detect_params;

void vdd_detect_params_init(vdd_detect_params* p);
vdd_status vdd_detect_run(const vdd_detect_params* p, const char* out_json);

/* ------------------------------------------------------------ eval command */

typedef struct vdd_eval_params {
    const char* manifest;   /* polar dataset with ground truth */
    const char* detections; /* detections JSON */
    const char* subset;
    uint64_t split_seed;
} vdd_eval_params;

void vdd_eval_params_init(vdd_eval_params* p);
vdd_status vdd_eval_run(const vdd_eval_params* p, const char* out_json,
                        double* out_map /* may be NULL */);

/* ---------------------------------------------------------- report command */

/* grid_json: {"training_sets": [...], "test_sets": [...],
 *             "methods": [{"label": ..., "values": {train: {test: mAP}}}]} */
vdd_status vdd_report_run(const char* grid_json, const char* out_dir);

#if defined(__cplusplus)
}
#endif

#endif /* VDD_H */
