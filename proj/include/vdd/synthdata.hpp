#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdd/geometry.hpp"
#include "vdd/image.hpp"

namespace vdd::synthdata {

/// Per-domain rendering knobs. Domain shift = different presets.
struct DomainParams {
    std::string name = "A";
    int brightness = 0;          // additive offset, [-128, 127]
    double noise_sigma = 6.0;    // Gaussian pixel noise, >= 0
    double blur_radius = 0.8;    // Gaussian blur sigma in px, >= 0
    int jitter_px = 3;           // max viewpoint shift per axis
    double burr_rate = 2.0;      // expected burrs per image (Poisson)
    double burr_scale_min = 20.0; // angular extent range, degrees
    double burr_scale_max = 90.0;
    std::uint64_t texture_seed = 101;
};

/// Fixed part geometry shared by all domains.
struct PartGeometry {
    int canvas = 256;        // square canvas side, px
    double r_border = 96.0;  // outer cylinder border circle radius
    double r_bore = 40.0;    // inner bore radius (burrs attach here)
};

struct Sample {
    GrayImage image;
    std::vector<geometry::Polygon> burr_polygons; // Cartesian, image frame
    geometry::Circle true_circle;                 // rendered outer border circle
    double bore_radius = 0.0;                     // rendered bore radius
    std::string domain;
    std::string id;
};

struct Dataset {
    std::vector<Sample> samples;
    std::string manifest_path;
};

struct SplitRatios {
    double nas = 1.0;
    double train = 2.0;
    double eval = 1.0;
};

struct Splits {
    Dataset nas;
    Dataset train;
    Dataset eval;
};

/// Built-in domain presets A..D (B is the A-with-shift domain: brightness -40,
/// doubled noise; D is the darkest). Throws Errc::InvalidArgument for other names.
DomainParams domain_preset(const std::string& name);

/// Paper-scale default dataset sizes for presets A..D.
int domain_default_count(const std::string& name);

/// Renders one annular part with Poisson(burr_rate) crescent burrs, speckle
/// texture, brightness/blur/noise, and an integer viewpoint jitter. Pure
/// function of (params, geometry, seed).
Sample generate_sample(const DomainParams& params, const PartGeometry& geom, std::uint64_t seed);

/// n samples seeded seed..seed+n-1. In-memory only; write_manifest persists.
Dataset generate_domain(const DomainParams& params, const PartGeometry& geom, int n,
                        std::uint64_t seed);

/// Deterministic shuffled partition with largest-remainder rounding.
/// Throws Errc::InvalidRatios (weight <= 0) or Errc::InvalidArgument (empty dataset).
Splits split_1_2_1(const Dataset& ds, const SplitRatios& ratios, std::uint64_t seed);

/// Mirrors the sample about its vertical center line; id gains a "_flip" suffix.
Sample flip_lr(const Sample& sample);

/// Writes manifest JSON plus one PGM per sample under dir(manifest_path)/images/.
void write_manifest(const Dataset& ds, const std::string& manifest_path);

/// Reads a manifest written by write_manifest; image paths resolve relative to
/// the manifest. Throws Errc::IoError / Errc::ParseError.
Dataset read_manifest(const std::string& manifest_path);

/// LabelMe-compatible subset: top-level "shapes", each with "label" and
/// "points" ([[x,y],...]); unknown fields ignored.
struct LabeledPolygon {
    std::string label;
    geometry::Polygon polygon;
};
std::vector<LabeledPolygon> read_labelme(const std::string& path);

} // namespace vdd::synthdata
