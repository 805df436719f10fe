#ifndef GEEZ_SYNTHGEN_HPP
#define GEEZ_SYNTHGEN_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "geez/image.hpp"
#include "geez/labels.hpp"
#include "geez/rng.hpp"

namespace geez {

// Deterministic synthetic data: 20 built-in glyph rasters perturbed into
// per-class variants, written in the dataset directory layout. Given
// (templates, config, seed), every output byte is reproducible.

struct GlyphTemplate {
    int label;          // class id 0..19
    BinaryImage raster; // ink-is-one, canonical size 40x32
};

// The bundled templates, one per class, in label order.
const std::vector<GlyphTemplate>& glyph_templates();

struct PerturbationConfig {
    int max_translation = 3;      // pixels per axis
    double rotation_range = 10.0; // degrees, drawn from +/- range
    double scale_min = 0.8;
    double scale_max = 1.2;
    double noise_prob = 0.02;     // salt-and-pepper probability per pixel
    double dilate_prob = 0.25;    // remaining mass after dilate+erode = no morphology
    double erode_prob = 0.25;
    std::uint64_t seed = 1;

    void validate() const;
    // Everything off: identity geometry, no morphology, no noise.
    static PerturbationConfig zero_strength(std::uint64_t seed = 1);
};

// Renders an ink-is-one raster as a page: ink 0, background 255.
GrayImage render_page(const BinaryImage& glyph);

// Rotation by inverse-mapping nearest neighbor; output is the rotated
// bounding box, values stay in {0,1}.
BinaryImage rotate_nearest(const BinaryImage& img, double degrees);

// One perturbed page: scale, rotate, translate onto a white canvas, optional
// one-pixel dilation/erosion, salt-and-pepper noise. A perturbation that
// erases all ink retries with fresh draws, up to 10 times, then throws.
// `attempts_used`, when given, receives the zero-based successful draw index.
GrayImage perturb(const GlyphTemplate& tpl, const PerturbationConfig& cfg, Rng& draw,
                  int* attempts_used = nullptr);

struct GenerationManifest {
    std::uint64_t seed = 0;
    std::string prng;
    int per_class = 0;
    std::vector<std::pair<std::string, int>> files; // relative path, draw index
};

// Writes per_class PGM pages per class under out_dir/{00..19}/, plus
// labels.txt and manifest.txt. Classes generate independently (seed mixed
// with class and file index) so the tree is identical no matter how the work
// is scheduled.
GenerationManifest generate_dataset(const std::filesystem::path& out_dir, int per_class = 28,
                                    const PerturbationConfig& cfg = {});

} // namespace geez

#endif
