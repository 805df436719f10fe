#include "geez/training.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace geez {

namespace fs = std::filesystem;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_u32_le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void append_f64_le(std::string& out, double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

std::uint32_t read_u32_le(const std::string& buf, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i)
        v = (v << 8) | static_cast<std::uint8_t>(buf[off + static_cast<std::size_t>(i)]);
    return v;
}

double read_f64_le(const std::string& buf, std::size_t off) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i)
        bits = (bits << 8) | static_cast<std::uint8_t>(buf[off + static_cast<std::size_t>(i)]);
    return std::bit_cast<double>(bits);
}

constexpr char kMagic[8] = {'G', 'E', 'E', 'Z', 'M', 'L', 'P', '\x01'};

} // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void TrainConfig::validate() const {
    architecture.validate_for_training();
    if (!(cg.wolfe_c1 > 0.0 && cg.wolfe_c1 < cg.wolfe_c2 && cg.wolfe_c2 < 1.0))
        throw Error("cg config requires 0 < c1 < c2 < 1");
    if (cg.max_iterations < 0) throw Error("cg config: max_iterations must be >= 0");
}

std::string TrainConfig::canonical_string() const {
    std::ostringstream out;
    out << "layer_sizes=";
    for (std::size_t i = 0; i < architecture.layer_sizes.size(); ++i)
        out << (i ? "," : "") << architecture.layer_sizes[i];
    out << "\n";
    out << "hidden_activation=" << activation_name(architecture.hidden_activation) << "\n";
    out << "output_activation=" << activation_name(architecture.output_activation) << "\n";
    out << "encoding=" << encoding_name(architecture.target_encoding) << "\n";
    out << "max_iterations=" << cg.max_iterations << "\n";
    out << "gradient_tolerance=" << fmt_double(cg.gradient_tolerance) << "\n";
    out << "loss_goal=" << fmt_double(cg.loss_goal) << "\n";
    out << "wolfe_c1=" << fmt_double(cg.wolfe_c1) << "\n";
    out << "wolfe_c2=" << fmt_double(cg.wolfe_c2) << "\n";
    out << "max_line_search_evals=" << cg.max_line_search_evals << "\n";
    out << "restart_interval=" << cg.restart_interval << "\n";
    out << "seed=" << seed << "\n";
    return out.str();
}

std::string TrainConfig::digest() const { return fnv1a_hex(canonical_string()); }

BatchObjective::BatchObjective(const Architecture& arch, Matrix inputs, Matrix targets)
    : inputs_(std::move(inputs)), targets_(std::move(targets)) {
    params_.arch = arch;
    const int L = arch.num_weight_layers();
    for (int l = 0; l < L; ++l) {
        params_.weights.emplace_back(arch.layer_sizes[l + 1], arch.layer_sizes[l]);
        params_.biases.emplace_back(arch.layer_sizes[l + 1], 0.0);
    }
}

double BatchObjective::value(const std::vector<double>& theta) {
    unflatten_params(theta, params_);
    return parallel ? batch_loss(params_, inputs_, targets_)
                    : batch_loss_serial(params_, inputs_, targets_);
}

double BatchObjective::value_and_gradient(const std::vector<double>& theta,
                                          std::vector<double>& grad) {
    unflatten_params(theta, params_);
    return parallel ? batch_loss_and_gradient(params_, inputs_, targets_, grad)
                    : batch_loss_and_gradient_serial(params_, inputs_, targets_, grad);
}

std::pair<TrainedModel, CgTrace> train(const Dataset& ds, const TrainConfig& cfg) {
    cfg.validate();
    const std::vector<std::size_t> train_idx = ds.indices_of(Split::Train);
    if (train_idx.empty()) throw Error("train: no samples tagged as train split");

    const int input_size = cfg.architecture.layer_sizes.front();
    const int output_size = cfg.architecture.layer_sizes.back();
    Matrix X(static_cast<int>(train_idx.size()), input_size);
    Matrix T(static_cast<int>(train_idx.size()), output_size);
    for (std::size_t i = 0; i < train_idx.size(); ++i) {
        const LabeledSample& s = ds.samples[train_idx[i]];
        if (static_cast<int>(s.features.size()) != input_size)
            throw DimensionError("train: sample " + s.sample_id + " feature length " +
                                 std::to_string(s.features.size()) + " != network input " +
                                 std::to_string(input_size));
        std::copy(s.features.begin(), s.features.end(), X.row(static_cast<int>(i)));
        const TargetVector t = encode_label(s.label, cfg.architecture.target_encoding);
        std::copy(t.begin(), t.end(), T.row(static_cast<int>(i)));
    }

    BatchObjective obj(cfg.architecture, std::move(X), std::move(T));
    NetworkParams params = init_network(cfg.architecture, cfg.seed);
    CgResult res = cg_minimize(obj, flatten_params(params), cfg.cg);
    unflatten_params(res.theta, params);

    TrainedModel model;
    model.params = std::move(params);
    model.meta.seed = cfg.seed;
    model.meta.iterations = res.iterations;
    model.meta.final_loss = res.final_loss;
    model.meta.stop_reason = stop_reason_name(res.stop);
    model.meta.dataset_digest = dataset_digest(ds);
    model.meta.config_text = cfg.canonical_string();
    model.meta.config_digest = cfg.digest();
    return {std::move(model), std::move(res.trace)};
}

void save_model(const TrainedModel& model, const fs::path& path) {
    const NetworkParams& p = model.params;
    const int L = p.arch.num_weight_layers();

    std::string buf;
    buf.append(kMagic, sizeof kMagic);
    append_u32_le(buf, static_cast<std::uint32_t>(L));
    for (int l = 0; l < L; ++l) {
        append_u32_le(buf, static_cast<std::uint32_t>(p.weights[l].rows));
        append_u32_le(buf, static_cast<std::uint32_t>(p.weights[l].cols));
    }
    for (int l = 1; l <= L; ++l)
        buf.push_back(static_cast<char>(p.arch.activation_of(l)));
    buf.push_back(static_cast<char>(p.arch.target_encoding == Encoding::OneHot20 ? 0 : 1));
    for (int l = 0; l < L; ++l) {
        for (double w : p.weights[l].data) append_f64_le(buf, w);
        for (double b : p.biases[l]) append_f64_le(buf, b);
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write model " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw Error("write failed for " + path.string());

    std::ofstream meta(path.string() + ".meta.txt");
    if (!meta) throw Error("cannot write sidecar for " + path.string());
    meta << "seed=" << model.meta.seed << "\n";
    meta << "iterations=" << model.meta.iterations << "\n";
    meta << "final_loss=" << fmt_double(model.meta.final_loss) << "\n";
    meta << "stop_reason=" << model.meta.stop_reason << "\n";
    meta << "dataset_digest=" << model.meta.dataset_digest << "\n";
    meta << "config_digest=" << model.meta.config_digest << "\n";
    std::istringstream lines(model.meta.config_text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) meta << "config=" << line << "\n";
}

TrainedModel load_model(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string buf = ss.str();

    if (buf.size() < 8 || std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0)
        throw FormatError("model: bad magic", 0);
    if (buf.size() < 12) throw FormatError("model: truncated header", 8);
    const std::uint32_t L = read_u32_le(buf, 8);
    if (L < 2 || L > 64) throw FormatError("model: implausible layer count " + std::to_string(L), 8);

    const std::size_t dims_off = 12;
    const std::size_t act_off = dims_off + 8u * L;
    const std::size_t enc_off = act_off + L;
    const std::size_t payload_off = enc_off + 1;
    if (buf.size() < payload_off)
        throw FormatError("model: truncated header, expected " + std::to_string(payload_off) +
                              " bytes, got " + std::to_string(buf.size()),
                          static_cast<long long>(buf.size()));

    std::vector<std::uint32_t> rows(L), cols(L);
    std::size_t n_params = 0;
    for (std::uint32_t l = 0; l < L; ++l) {
        rows[l] = read_u32_le(buf, dims_off + 8u * l);
        cols[l] = read_u32_le(buf, dims_off + 8u * l + 4);
        if (rows[l] < 1 || cols[l] < 1)
            throw FormatError("model: zero dimension in layer " + std::to_string(l),
                              static_cast<long long>(dims_off + 8u * l));
        if (l > 0 && cols[l] != rows[l - 1])
            throw FormatError("model: layer " + std::to_string(l) + " input width " +
                                  std::to_string(cols[l]) + " does not chain to previous output " +
                                  std::to_string(rows[l - 1]),
                              static_cast<long long>(dims_off + 8u * l + 4));
        n_params += static_cast<std::size_t>(rows[l]) * cols[l] + rows[l];
    }

    Architecture arch;
    arch.layer_sizes.assign(1, static_cast<int>(cols[0]));
    for (std::uint32_t l = 0; l < L; ++l) arch.layer_sizes.push_back(static_cast<int>(rows[l]));

    std::vector<std::uint8_t> act(L);
    for (std::uint32_t l = 0; l < L; ++l) {
        act[l] = static_cast<std::uint8_t>(buf[act_off + l]);
        if (act[l] > 1)
            throw FormatError("model: unknown activation code " + std::to_string(act[l]),
                              static_cast<long long>(act_off + l));
        if (l > 0 && l + 1 < L && act[l] != act[0])
            throw FormatError("model: mixed hidden activations are not supported",
                              static_cast<long long>(act_off + l));
    }
    arch.hidden_activation = static_cast<Activation>(act[0]);
    arch.output_activation = static_cast<Activation>(act[L - 1]);

    const std::uint8_t enc = static_cast<std::uint8_t>(buf[enc_off]);
    if (enc > 1)
        throw FormatError("model: unknown encoding code " + std::to_string(enc),
                          static_cast<long long>(enc_off));
    arch.target_encoding = enc == 0 ? Encoding::OneHot20 : Encoding::Binary5;

    const std::size_t expected = payload_off + 8 * n_params;
    if (buf.size() != expected)
        throw FormatError("model: expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(buf.size()),
                          static_cast<long long>(std::min(buf.size(), expected)));

    TrainedModel model;
    model.params.arch = arch;
    std::size_t off = payload_off;
    for (std::uint32_t l = 0; l < L; ++l) {
        Matrix W(static_cast<int>(rows[l]), static_cast<int>(cols[l]));
        for (double& w : W.data) {
            w = read_f64_le(buf, off);
            off += 8;
        }
        std::vector<double> b(rows[l]);
        for (double& v : b) {
            v = read_f64_le(buf, off);
            off += 8;
        }
        model.params.weights.push_back(std::move(W));
        model.params.biases.push_back(std::move(b));
    }

    // Sidecar is optional on load; when present its digest must check out.
    const fs::path meta_path = path.string() + ".meta.txt";
    std::ifstream meta(meta_path);
    if (meta) {
        std::string line, config_text, stored_digest;
        while (std::getline(meta, line)) {
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(0, eq);
            const std::string val = line.substr(eq + 1);
            if (key == "seed") model.meta.seed = std::stoull(val);
            else if (key == "iterations") model.meta.iterations = std::stoi(val);
            else if (key == "final_loss") model.meta.final_loss = std::stod(val);
            else if (key == "stop_reason") model.meta.stop_reason = val;
            else if (key == "dataset_digest") model.meta.dataset_digest = val;
            else if (key == "config_digest") stored_digest = val;
            else if (key == "config") config_text += val + "\n";
        }
        model.meta.config_text = config_text;
        model.meta.config_digest = fnv1a_hex(config_text);
        if (model.meta.config_digest != stored_digest)
            throw Error("model sidecar " + meta_path.string() +
                        " failed digest verification (tampered or corrupt)");
    }
    return model;
}

} // namespace geez
