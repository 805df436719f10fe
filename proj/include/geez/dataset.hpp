#ifndef GEEZ_DATASET_HPP
#define GEEZ_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "geez/image.hpp"
#include "geez/labels.hpp"

namespace geez {

enum class SampleSource { Synthetic, Scanned };
enum class Split { Unassigned, Train, Test };
enum class Encoding { OneHot20, Binary5 };

inline constexpr int encoding_length(Encoding e) { return e == Encoding::OneHot20 ? 20 : 5; }
std::string encoding_name(Encoding e);
Encoding encoding_from_name(const std::string& name);

using TargetVector = std::vector<double>;

struct LabeledSample {
    FeatureVector features; // length 1800, entries in {0,1}
    int label = 0;          // class id 0..19
    SampleSource source = SampleSource::Scanned;
    std::string sample_id;  // "<folder>/<filename>", stable across loads
};

struct Dataset {
    std::vector<LabeledSample> samples;
    std::vector<Split> split; // parallel to samples

    std::size_t size() const { return samples.size(); }
    std::size_t count_class(int label) const;
    std::size_t count_split(Split s) const;
    // Indices of samples tagged s, in dataset order.
    std::vector<std::size_t> indices_of(Split s) const;
};

struct LoadFailure {
    std::string path;
    std::string reason;
};

struct LoadReport {
    std::size_t loaded = 0;
    std::vector<LoadFailure> failures;
};

// Loads `root/{00..19}/*.pgm` (P2/P5; P3/P6 PPM also accepted), running every
// image through the preprocessing pipeline. `root/labels.txt` must list each
// class folder with its codepoint and value. Sample order is lexicographic by
// (folder, filename) regardless of loader parallelism. Unreadable or blank
// files are skipped and listed in the report; loading continues.
Dataset load_dataset(const std::filesystem::path& root, LoadReport* report = nullptr);

// Writes the labels.txt manifest: one line per class, "<folder> <hex> <value>".
void write_labels_manifest(const std::filesystem::path& root);

// Seeded per-class shuffle assigning exactly train_per_class train and
// test_per_class test samples to every class. Deterministic given the
// dataset order and seed. Throws SplitError when a class is short.
void split_per_class(Dataset& ds, int train_per_class = 23, int test_per_class = 5,
                     std::uint64_t seed = 0);

// Length-20 vector with a single 1.0 at the class index.
TargetVector encode_label_onehot(int label);

// Length-5 vector, most-significant bit first, of the value id+1 (1..20).
TargetVector encode_label_binary5(int label);

TargetVector encode_label(int label, Encoding encoding);

// One-hot: argmax, lowest index on ties. Binary-5: each component rounds to
// {0,1} (>= 0.5 is 1), the bits read as id+1; patterns outside 1..20 throw
// DecodeError.
int decode_prediction(const std::vector<double>& output, Encoding encoding);

// FNV-1a 64-bit hex digest of the ordered sample bytes (label byte followed
// by the 1800 feature bytes of every sample, dataset order).
std::string dataset_digest(const Dataset& ds);

} // namespace geez

#endif
