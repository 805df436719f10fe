#ifndef GEEZ_TRAINING_HPP
#define GEEZ_TRAINING_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "geez/dataset.hpp"
#include "geez/network.hpp"
#include "geez/optimizer.hpp"

namespace geez {

struct TrainConfig {
    Architecture architecture;
    CgConfig cg;
    std::uint64_t seed = 1;

    void validate() const;
    // Canonical key=value lines covering every field; the digest input.
    std::string canonical_string() const;
    std::string digest() const;
};

struct TrainMeta {
    std::uint64_t seed = 0;
    int iterations = 0;
    double final_loss = 0.0;
    std::string stop_reason;
    std::string dataset_digest;
    std::string config_digest;
    std::string config_text; // canonical config lines as trained
};

struct TrainedModel {
    NetworkParams params;
    TrainMeta meta;
};

// Adapts the batch network kernels to the optimizer's flat-parameter
// interface. `parallel = false` routes through the serial reference kernels.
class BatchObjective : public Objective {
public:
    BatchObjective(const Architecture& arch, Matrix inputs, Matrix targets);

    double value(const std::vector<double>& theta) override;
    double value_and_gradient(const std::vector<double>& theta,
                              std::vector<double>& grad) override;

    bool parallel = true;

private:
    NetworkParams params_;
    Matrix inputs_;
    Matrix targets_;
};

// Assembles the full-batch objective over the train-tagged samples,
// initializes from the seed and minimizes with PR+ conjugate gradient.
// Deterministic given (dataset, config).
std::pair<TrainedModel, CgTrace> train(const Dataset& ds, const TrainConfig& cfg);

// GEEZMLP1 container plus a `<model>.meta.txt` sidecar. Save/load round-trips
// the parameters bit-exactly; malformed files raise FormatError with the byte
// offset of the defect. A present sidecar must pass digest verification.
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

// FNV-1a 64-bit hex digest of a string (config digests, sidecar checks).
std::string fnv1a_hex(const std::string& text);

} // namespace geez

#endif
