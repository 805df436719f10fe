#include "geez/imaging.hpp"

#include <array>
#include <cmath>

namespace geez {

GrayImage to_grayscale(const RgbImage& img) {
    if (img.rows < 1 || img.cols < 1) throw DimensionError("to_grayscale: empty raster");
    GrayImage out(img.rows, img.cols);
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            const double y = 0.299 * img.at(r, c, 0) + 0.587 * img.at(r, c, 1) +
                             0.114 * img.at(r, c, 2);
            const long v = std::lround(y);
            out.at(r, c) = static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
        }
    }
    return out;
}

int otsu_threshold(const GrayImage& img) {
    if (img.rows < 1 || img.cols < 1) throw DimensionError("otsu_threshold: empty image");

    std::array<std::size_t, 256> hist{};
    for (std::uint8_t p : img.pixels) ++hist[p];

    int lowest = -1, highest = -1;
    for (int i = 0; i < 256; ++i) {
        if (hist[i] != 0) {
            if (lowest < 0) lowest = i;
            highest = i;
        }
    }
    if (lowest == highest) return lowest; // constant image: degenerate case

    const double total = static_cast<double>(img.size());
    double total_sum = 0.0;
    for (int i = 0; i < 256; ++i) total_sum += static_cast<double>(i) * hist[i];

    // Between-class variance with the dark class {p <= t}:
    //   sigma_b^2(t) = w0 w1 (mu0 - mu1)^2, zero when either class is empty.
    int best_t = 0;
    double best_var = -1.0;
    double w0 = 0.0, sum0 = 0.0;
    for (int t = 0; t < 256; ++t) {
        w0 += static_cast<double>(hist[t]);
        sum0 += static_cast<double>(t) * hist[t];
        const double w1 = total - w0;
        double var = 0.0;
        if (w0 > 0.0 && w1 > 0.0) {
            const double mu0 = sum0 / w0;
            const double mu1 = (total_sum - sum0) / w1;
            var = (w0 / total) * (w1 / total) * (mu0 - mu1) * (mu0 - mu1);
        }
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
    if (threshold < 0 || threshold > 255)
        throw DimensionError("binarize: threshold must be in 0..255");
    BinaryImage out(img.rows, img.cols, Polarity::InkIsZero);
    for (std::size_t i = 0; i < img.size(); ++i)
        out.pixels[i] = img.pixels[i] >= threshold ? 1 : 0;
    return out;
}

BinaryImage invert(const BinaryImage& img) {
    if (img.polarity != Polarity::InkIsZero)
        throw PolarityError("invert: image is already ink-is-one");
    BinaryImage out(img.rows, img.cols, Polarity::InkIsOne);
    for (std::size_t i = 0; i < img.size(); ++i) out.pixels[i] = 1 - img.pixels[i];
    return out;
}

BinaryImage crop_to_content(const BinaryImage& img) {
    if (img.polarity != Polarity::InkIsOne)
        throw PolarityError("crop_to_content: requires ink-is-one polarity");

    int top = -1, bottom = -1, left = img.cols, right = -1;
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            if (img.at(r, c) != 0) {
                if (top < 0) top = r;
                bottom = r;
                if (c < left) left = c;
                if (c > right) right = c;
            }
        }
    }
    if (top < 0) throw BlankImageError("crop_to_content: no ink pixels (blank scan)");

    BinaryImage out(bottom - top + 1, right - left + 1, Polarity::InkIsOne);
    for (int r = 0; r < out.rows; ++r)
        for (int c = 0; c < out.cols; ++c) out.at(r, c) = img.at(top + r, left + c);
    return out;
}

BinaryImage resize_nearest(const BinaryImage& img, int out_rows, int out_cols) {
    if (img.rows < 1 || img.cols < 1) throw DimensionError("resize_nearest: empty image");
    if (out_rows < 1 || out_cols < 1)
        throw DimensionError("resize_nearest: output dimensions must be >= 1");

    BinaryImage out(out_rows, out_cols, img.polarity);
    for (int r = 0; r < out_rows; ++r) {
        int sr = static_cast<int>((r + 0.5) * img.rows / out_rows);
        if (sr >= img.rows) sr = img.rows - 1;
        for (int c = 0; c < out_cols; ++c) {
            int sc = static_cast<int>((c + 0.5) * img.cols / out_cols);
            if (sc >= img.cols) sc = img.cols - 1;
            out.at(r, c) = img.at(sr, sc);
        }
    }
    return out;
}

FeatureVector flatten(const BinaryImage& img) {
    if (img.rows != kInputRows || img.cols != kInputCols)
        throw DimensionError("flatten: expected " + std::to_string(kInputRows) + "x" +
                             std::to_string(kInputCols) + ", got " + std::to_string(img.rows) +
                             "x" + std::to_string(img.cols));
    if (img.polarity != Polarity::InkIsOne)
        throw PolarityError("flatten: requires ink-is-one polarity");

    FeatureVector out(kFeatureLength);
    for (int k = 0; k < kFeatureLength; ++k)
        out[k] = img.at(k % kInputRows, k / kInputRows);
    return out;
}

BinaryImage reshape_feature(const FeatureVector& features) {
    if (features.size() != static_cast<std::size_t>(kFeatureLength))
        throw DimensionError("reshape_feature: expected length " +
                             std::to_string(kFeatureLength));
    BinaryImage out(kInputRows, kInputCols, Polarity::InkIsOne);
    for (int k = 0; k < kFeatureLength; ++k)
        out.at(k % kInputRows, k / kInputRows) = features[k] != 0.0 ? 1 : 0;
    return out;
}

FeatureVector preprocess(const GrayImage& img) {
    const int t = otsu_threshold(img);
    const BinaryImage binary = binarize(img, t < 255 ? t + 1 : 255);
    return flatten(resize_nearest(crop_to_content(invert(binary))));
}

FeatureVector preprocess(const RgbImage& img) { return preprocess(to_grayscale(img)); }

} // namespace geez
