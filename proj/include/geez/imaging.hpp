#ifndef GEEZ_IMAGING_HPP
#define GEEZ_IMAGING_HPP

#include "geez/image.hpp"

namespace geez {

// Preprocessing pipeline that turns a raw character scan into the
// network-ready feature vector:
//
//   grayscale -> threshold -> invert -> crop-to-content -> resize 45x40 -> flatten
//
// All functions are pure; none touch shared state.

// Rec.601 luma: round(0.299 R + 0.587 G + 0.114 B), clamped to 0..255.
GrayImage to_grayscale(const RgbImage& img);

// Global Otsu threshold over the 256-bin histogram. The returned t is the
// largest intensity of the dark class: pixels <= t are dark, pixels > t are
// light. Ties resolve to the smallest t. A constant image returns its single
// intensity (degenerate case).
int otsu_threshold(const GrayImage& img);

// pixel >= t -> 1 (light/background), pixel < t -> 0 (dark/ink).
// Result polarity is ink-is-zero.
BinaryImage binarize(const GrayImage& img, int threshold);

// Flips every pixel and the polarity flag. Input must be ink-is-zero;
// inverting twice is rejected so strokes can never silently become background.
BinaryImage invert(const BinaryImage& img);

// Tightest sub-rectangle spanning the first/last row and column that contain
// an ink pixel. Requires ink-is-one polarity and at least one ink pixel;
// throws BlankImageError otherwise. Idempotent.
BinaryImage crop_to_content(const BinaryImage& img);

// Nearest-neighbor resampling to out_rows x out_cols:
//   out(r,c) = in(floor((r+0.5)*in_rows/out_rows), floor((c+0.5)*in_cols/out_cols))
BinaryImage resize_nearest(const BinaryImage& img, int out_rows = kInputRows,
                           int out_cols = kInputCols);

// Column-major flattening of a 45x40 ink-is-one raster: out[k] is the pixel
// at row k mod 45, column k div 45.
FeatureVector flatten(const BinaryImage& img);

// Inverse of flatten; restores the 45x40 ink-is-one raster.
BinaryImage reshape_feature(const FeatureVector& features);

// Full pipeline on a grayscale page. The binarize threshold is
// min(otsu+1, 255), which maps Otsu's dark class (pixel <= t) onto ink and
// leaves an all-white page entirely background.
FeatureVector preprocess(const GrayImage& img);
FeatureVector preprocess(const RgbImage& img);

} // namespace geez

#endif
