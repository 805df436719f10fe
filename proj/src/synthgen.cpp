#include "geez/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "geez/dataset.hpp"
#include "geez/imaging.hpp"
#include "geez/pnm.hpp"

namespace geez {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

BinaryImage scale_nearest(const BinaryImage& img, double factor) {
    const int out_rows = std::max(1, static_cast<int>(std::lround(img.rows * factor)));
    const int out_cols = std::max(1, static_cast<int>(std::lround(img.cols * factor)));
    return resize_nearest(img, out_rows, out_cols);
}

BinaryImage morph_one_px(const BinaryImage& img, bool dilate) {
    BinaryImage out(img.rows, img.cols, img.polarity);
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            const auto px = [&](int rr, int cc) -> int {
                if (rr < 0 || rr >= img.rows || cc < 0 || cc >= img.cols) return 0;
                return img.at(rr, cc);
            };
            const int self = px(r, c);
            const int n = px(r - 1, c), s = px(r + 1, c), w = px(r, c - 1), e = px(r, c + 1);
            if (dilate)
                out.at(r, c) = (self | n | s | w | e) ? 1 : 0;
            else
                out.at(r, c) = (self & n & s & w & e) ? 1 : 0;
        }
    }
    return out;
}

} // namespace

void PerturbationConfig::validate() const {
    if (max_translation < 0) throw Error("perturbation: max_translation must be >= 0");
    if (rotation_range < 0.0) throw Error("perturbation: rotation_range must be >= 0");
    if (!(scale_min > 0.0) || !(scale_max >= scale_min))
        throw Error("perturbation: scale range must be positive with min <= max");
    if (noise_prob < 0.0 || noise_prob > 1.0)
        throw Error("perturbation: noise_prob must be in [0,1]");
    if (dilate_prob < 0.0 || erode_prob < 0.0 || dilate_prob + erode_prob > 1.0)
        throw Error("perturbation: morphology weights must be nonnegative and sum to <= 1");
}

PerturbationConfig PerturbationConfig::zero_strength(std::uint64_t seed) {
    PerturbationConfig cfg;
    cfg.max_translation = 0;
    cfg.rotation_range = 0.0;
    cfg.scale_min = 1.0;
    cfg.scale_max = 1.0;
    cfg.noise_prob = 0.0;
    cfg.dilate_prob = 0.0;
    cfg.erode_prob = 0.0;
    cfg.seed = seed;
    return cfg;
}

GrayImage render_page(const BinaryImage& glyph) {
    if (glyph.polarity != Polarity::InkIsOne)
        throw PolarityError("render_page: requires ink-is-one polarity");
    GrayImage page(glyph.rows, glyph.cols);
    for (std::size_t i = 0; i < glyph.size(); ++i)
        page.pixels[i] = glyph.pixels[i] ? 0 : 255;
    return page;
}

BinaryImage rotate_nearest(const BinaryImage& img, double degrees) {
    if (degrees == 0.0) return img;
    const double rad = degrees * kPi / 180.0;
    const double cs = std::cos(rad), sn = std::sin(rad);

    const int out_rows =
        static_cast<int>(std::ceil(std::fabs(cs) * img.rows + std::fabs(sn) * img.cols));
    const int out_cols =
        static_cast<int>(std::ceil(std::fabs(sn) * img.rows + std::fabs(cs) * img.cols));
    BinaryImage out(std::max(1, out_rows), std::max(1, out_cols), img.polarity);

    const double in_r0 = (img.rows - 1) / 2.0, in_c0 = (img.cols - 1) / 2.0;
    const double out_r0 = (out.rows - 1) / 2.0, out_c0 = (out.cols - 1) / 2.0;
    for (int r = 0; r < out.rows; ++r) {
        for (int c = 0; c < out.cols; ++c) {
            // inverse map: rotate the destination offset back by -degrees
            const double dr = r - out_r0, dc = c - out_c0;
            const int sr = static_cast<int>(std::lround(cs * dr + sn * dc + in_r0));
            const int sc = static_cast<int>(std::lround(-sn * dr + cs * dc + in_c0));
            if (sr >= 0 && sr < img.rows && sc >= 0 && sc < img.cols) out.at(r, c) = img.at(sr, sc);
        }
    }
    return out;
}

GrayImage perturb(const GlyphTemplate& tpl, const PerturbationConfig& cfg, Rng& draw,
                  int* attempts_used) {
    cfg.validate();
    if (!tpl.raster.has_ink()) throw BlankImageError("perturb: template has no ink");

    for (int attempt = 0; attempt < 10; ++attempt) {
        const double factor = cfg.scale_min == cfg.scale_max
                                  ? cfg.scale_min
                                  : rng_real(draw, cfg.scale_min, cfg.scale_max);
        const double angle = cfg.rotation_range == 0.0
                                 ? 0.0
                                 : rng_real(draw, -cfg.rotation_range, cfg.rotation_range);
        const int dr = cfg.max_translation == 0
                           ? 0
                           : static_cast<int>(rng_int(draw, -cfg.max_translation,
                                                      cfg.max_translation));
        const int dc = cfg.max_translation == 0
                           ? 0
                           : static_cast<int>(rng_int(draw, -cfg.max_translation,
                                                      cfg.max_translation));
        const double morph_u = rng_real(draw, 0.0, 1.0);

        BinaryImage glyph = rotate_nearest(scale_nearest(tpl.raster, factor), angle);

        // Canvas margin covers translation plus one pixel of dilation.
        const int margin = cfg.max_translation + 2;
        BinaryImage canvas(glyph.rows + 2 * margin, glyph.cols + 2 * margin, Polarity::InkIsOne);
        for (int r = 0; r < glyph.rows; ++r)
            for (int c = 0; c < glyph.cols; ++c)
                if (glyph.at(r, c)) canvas.at(r + margin + dr, c + margin + dc) = 1;

        if (morph_u < cfg.dilate_prob)
            canvas = morph_one_px(canvas, true);
        else if (morph_u < cfg.dilate_prob + cfg.erode_prob)
            canvas = morph_one_px(canvas, false);

        if (!canvas.has_ink()) continue; // morphology ate the glyph, redraw

        GrayImage page = render_page(canvas);
        if (cfg.noise_prob > 0.0) {
            for (std::uint8_t& p : page.pixels)
                if (rng_chance(draw, cfg.noise_prob)) p = rng_chance(draw, 0.5) ? 255 : 0;
        }
        if (attempts_used) *attempts_used = attempt;
        return page;
    }
    throw Error("perturb: no ink left after 10 attempts (class " +
                class_info(tpl.label).folder + ")");
}

GenerationManifest generate_dataset(const fs::path& out_dir, int per_class,
                                    const PerturbationConfig& cfg) {
    cfg.validate();
    if (per_class < 1) throw Error("generate_dataset: per_class must be >= 1");
    const std::vector<GlyphTemplate>& templates = glyph_templates();

    fs::create_directories(out_dir);
    for (int id = 0; id < kNumClasses; ++id)
        fs::create_directories(out_dir / class_info(id).folder);

    std::vector<std::vector<int>> draw_index(kNumClasses, std::vector<int>(per_class, 0));
    std::vector<std::string> failure(kNumClasses);

#pragma omp parallel for schedule(dynamic)
    for (int id = 0; id < kNumClasses; ++id) {
        try {
            const std::string folder = class_info(id).folder;
            for (int k = 0; k < per_class; ++k) {
                Rng rng(mix_seed(mix_seed(cfg.seed, seed_tag::kSynth),
                                 (static_cast<std::uint64_t>(id) << 32) |
                                     static_cast<std::uint64_t>(k)));
                int attempts = 0;
                const GrayImage page = perturb(templates[id], cfg, rng, &attempts);
                draw_index[id][k] = attempts;
                char name[16];
                std::snprintf(name, sizeof name, "%03d.pgm", k);
                write_pgm(out_dir / folder / name, page);
            }
        } catch (const std::exception& ex) {
            failure[id] = ex.what();
        }
    }
    for (int id = 0; id < kNumClasses; ++id)
        if (!failure[id].empty())
            throw Error("generate_dataset: class " + class_info(id).folder + ": " + failure[id]);

    write_labels_manifest(out_dir);

    GenerationManifest manifest;
    manifest.seed = cfg.seed;
    manifest.prng = "mt19937_64";
    manifest.per_class = per_class;

    std::ofstream out(out_dir / "manifest.txt");
    if (!out) throw Error("cannot write " + (out_dir / "manifest.txt").string());
    out << "seed=" << cfg.seed << "\n";
    out << "prng=" << manifest.prng << "\n";
    out << "per_class=" << per_class << "\n";
    out << "config=max_translation=" << cfg.max_translation << "\n";
    out << "config=rotation_range=" << cfg.rotation_range << "\n";
    out << "config=scale_min=" << cfg.scale_min << "\n";
    out << "config=scale_max=" << cfg.scale_max << "\n";
    out << "config=noise_prob=" << cfg.noise_prob << "\n";
    out << "config=dilate_prob=" << cfg.dilate_prob << "\n";
    out << "config=erode_prob=" << cfg.erode_prob << "\n";
    for (int id = 0; id < kNumClasses; ++id) {
        const std::string folder = class_info(id).folder;
        for (int k = 0; k < per_class; ++k) {
            char name[16];
            std::snprintf(name, sizeof name, "%03d.pgm", k);
            const std::string rel = folder + "/" + name;
            out << rel << " " << draw_index[id][k] << "\n";
            manifest.files.emplace_back(rel, draw_index[id][k]);
        }
    }
    return manifest;
}

} // namespace geez
