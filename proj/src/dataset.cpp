#include "geez/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geez/imaging.hpp"
#include "geez/pnm.hpp"
#include "geez/rng.hpp"

namespace geez {

namespace fs = std::filesystem;

std::string encoding_name(Encoding e) { return e == Encoding::OneHot20 ? "onehot20" : "binary5"; }

Encoding encoding_from_name(const std::string& name) {
    if (name == "onehot20" || name == "onehot") return Encoding::OneHot20;
    if (name == "binary5") return Encoding::Binary5;
    throw Error("unknown encoding '" + name + "' (expected onehot20 or binary5)");
}

std::size_t Dataset::count_class(int label) const {
    std::size_t n = 0;
    for (const auto& s : samples)
        if (s.label == label) ++n;
    return n;
}

std::size_t Dataset::count_split(Split s) const {
    return static_cast<std::size_t>(std::count(split.begin(), split.end(), s));
}

std::vector<std::size_t> Dataset::indices_of(Split s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < split.size(); ++i)
        if (split[i] == s) out.push_back(i);
    return out;
}

namespace {

void check_labels_manifest(const fs::path& root) {
    const fs::path manifest = root / "labels.txt";
    std::ifstream in(manifest);
    if (!in) throw LabelError("missing manifest " + manifest.string());

    std::vector<bool> seen(kNumClasses, false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string folder, hex;
        long value = 0;
        if (!(ls >> folder >> hex >> value))
            throw LabelError("labels.txt: malformed line '" + line + "'");
        const int id = class_id_from_folder(folder);
        const ClassInfo info = class_info(id);
        char expected_hex[8];
        std::snprintf(expected_hex, sizeof expected_hex, "%04X",
                      static_cast<unsigned>(info.codepoint));
        if (hex != expected_hex || value != info.value)
            throw LabelError("labels.txt: entry for folder " + folder +
                             " does not match the class table");
        seen[id] = true;
    }
    for (int id = 0; id < kNumClasses; ++id)
        if (!seen[id])
            throw LabelError("labels.txt: missing entry for folder " + class_info(id).folder);
}

bool is_image_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

} // namespace

Dataset load_dataset(const fs::path& root, LoadReport* report) {
    if (!fs::is_directory(root)) throw Error("dataset root is not a directory: " + root.string());
    check_labels_manifest(root);

    struct Entry {
        int label;
        std::string sample_id;
        fs::path path;
    };
    std::vector<Entry> entries;

    std::vector<std::string> folders;
    for (const auto& e : fs::directory_iterator(root)) {
        if (!e.is_directory()) continue; // manifest and report files live beside the folders
        folders.push_back(e.path().filename().string());
    }
    std::sort(folders.begin(), folders.end());

    for (const std::string& folder : folders) {
        const int label = class_id_from_folder(folder); // throws on unknown names
        std::vector<fs::path> files;
        for (const auto& f : fs::directory_iterator(root / folder))
            if (f.is_regular_file() && is_image_file(f.path())) files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            entries.push_back({label, folder + "/" + f.filename().string(), f});
    }

    const std::size_t n = entries.size();
    std::vector<LabeledSample> loaded(n);
    std::vector<std::string> failure(n); // empty string = success
    const SampleSource source = fs::exists(root / "manifest.txt") ? SampleSource::Synthetic
                                                                  : SampleSource::Scanned;

#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const Entry& e = entries[i];
        try {
            LabeledSample s;
            s.features = preprocess(read_pnm_gray(e.path));
            s.label = e.label;
            s.source = source;
            s.sample_id = e.sample_id;
            loaded[i] = std::move(s);
        } catch (const std::exception& ex) {
            failure[i] = ex.what();
        }
    }

    Dataset ds;
    LoadReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (failure[i].empty()) {
            ds.samples.push_back(std::move(loaded[i]));
        } else {
            rep.failures.push_back({entries[i].path.string(), failure[i]});
        }
    }
    rep.loaded = ds.samples.size();
    ds.split.assign(ds.samples.size(), Split::Unassigned);

    for (const auto& f : rep.failures)
        std::cerr << "load_dataset: skipped " << f.path << ": " << f.reason << "\n";
    if (report) *report = rep;

    if (ds.samples.empty()) throw Error("empty dataset under " + root.string());
    return ds;
}

void write_labels_manifest(const fs::path& root) {
    std::ofstream out(root / "labels.txt");
    if (!out) throw Error("cannot write " + (root / "labels.txt").string());
    for (int id = 0; id < kNumClasses; ++id) {
        const ClassInfo info = class_info(id);
        char hex[8];
        std::snprintf(hex, sizeof hex, "%04X", static_cast<unsigned>(info.codepoint));
        out << info.folder << " " << hex << " " << info.value << "\n";
    }
}

void split_per_class(Dataset& ds, int train_per_class, int test_per_class, std::uint64_t seed) {
    ds.split.assign(ds.samples.size(), Split::Unassigned);
    for (int label = 0; label < kNumClasses; ++label) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < ds.samples.size(); ++i)
            if (ds.samples[i].label == label) idx.push_back(i);
        if (idx.size() < static_cast<std::size_t>(train_per_class + test_per_class))
            throw SplitError("class " + class_info(label).folder + " has " +
                             std::to_string(idx.size()) + " samples, needs " +
                             std::to_string(train_per_class + test_per_class));

        Rng rng(mix_seed(seed, seed_tag::kSplit, static_cast<std::uint64_t>(label)));
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng_index(rng, i)]);

        for (int k = 0; k < train_per_class; ++k) ds.split[idx[k]] = Split::Train;
        for (int k = 0; k < test_per_class; ++k)
            ds.split[idx[train_per_class + k]] = Split::Test;
    }
}

TargetVector encode_label_onehot(int label) {
    if (label < 0 || label >= kNumClasses)
        throw LabelError("encode_label_onehot: id out of range: " + std::to_string(label));
    TargetVector v(kNumClasses, 0.0);
    v[label] = 1.0;
    return v;
}

TargetVector encode_label_binary5(int label) {
    if (label < 0 || label >= kNumClasses)
        throw LabelError("encode_label_binary5: id out of range: " + std::to_string(label));
    const int value = label + 1; // 1..20
    TargetVector v(5, 0.0);
    for (int bit = 0; bit < 5; ++bit) v[4 - bit] = (value >> bit) & 1;
    return v;
}

TargetVector encode_label(int label, Encoding encoding) {
    return encoding == Encoding::OneHot20 ? encode_label_onehot(label)
                                          : encode_label_binary5(label);
}

int decode_prediction(const std::vector<double>& output, Encoding encoding) {
    const std::size_t expected = static_cast<std::size_t>(encoding_length(encoding));
    if (output.size() != expected)
        throw DimensionError("decode_prediction: expected length " + std::to_string(expected) +
                             ", got " + std::to_string(output.size()));

    if (encoding == Encoding::OneHot20) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < output.size(); ++i)
            if (output[i] > output[best]) best = i; // lowest index wins ties
        return static_cast<int>(best);
    }

    int value = 0;
    for (int bit = 0; bit < 5; ++bit) value = (value << 1) | (output[bit] >= 0.5 ? 1 : 0);
    if (value < 1 || value > kNumClasses)
        throw DecodeError("decode_prediction: 5-bit pattern " + std::to_string(value) +
                          " is outside 1..20");
    return value - 1;
}

std::string dataset_digest(const Dataset& ds) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (const auto& s : ds.samples) {
        feed(static_cast<std::uint8_t>(s.label));
        for (double f : s.features) feed(f != 0.0 ? 1 : 0);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace geez
