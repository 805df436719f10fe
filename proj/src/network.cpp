#include "geez/network.hpp"

#include <algorithm>
#include <cmath>

#include "geez/rng.hpp"

namespace geez {

namespace {

// Samples per accumulation block. Fixed so that results do not depend on the
// thread count: each block is summed sequentially, blocks reduce in index
// order.
constexpr int kBatchBlock = 16;

inline double activate(Activation a, double z) {
    return a == Activation::Tanh ? std::tanh(z) : 1.0 / (1.0 + std::exp(-z));
}

// Derivative expressed through the activation value.
inline double activate_deriv(Activation act, double a) {
    return act == Activation::Tanh ? 1.0 - a * a : a * (1.0 - a);
}

struct LayerOffsets {
    std::vector<std::size_t> w; // flat offset of each weight matrix
    std::vector<std::size_t> b; // flat offset of each bias vector
    std::size_t total = 0;
};

LayerOffsets layer_offsets(const Architecture& arch) {
    const int L = arch.num_weight_layers();
    LayerOffsets off;
    off.w.resize(L);
    off.b.resize(L);
    std::size_t pos = 0;
    for (int l = 0; l < L; ++l) {
        off.w[l] = pos;
        pos += static_cast<std::size_t>(arch.layer_sizes[l + 1]) * arch.layer_sizes[l];
    }
    for (int l = 0; l < L; ++l) {
        off.b[l] = pos;
        pos += static_cast<std::size_t>(arch.layer_sizes[l + 1]);
    }
    off.total = pos;
    return off;
}

// Per-thread scratch for one sample's forward/backward pass.
struct Workspace {
    std::vector<std::vector<double>> a;     // activations per layer, a[0] = input copy
    std::vector<std::vector<double>> delta; // delta per weight layer

    explicit Workspace(const Architecture& arch) {
        const int L = arch.num_weight_layers();
        a.resize(L + 1);
        for (int l = 0; l <= L; ++l) a[l].resize(arch.layer_sizes[l]);
        delta.resize(L);
        for (int l = 0; l < L; ++l) delta[l].resize(arch.layer_sizes[l + 1]);
    }
};

inline void forward_sample(const NetworkParams& p, const double* x, Workspace& ws) {
    const int L = p.arch.num_weight_layers();
    const double* a_prev = x;
    for (int l = 0; l < L; ++l) {
        const Matrix& W = p.weights[l];
        const std::vector<double>& b = p.biases[l];
        const Activation act = p.arch.activation_of(l + 1);
        std::vector<double>& a = ws.a[l + 1];
        for (int j = 0; j < W.rows; ++j) {
            const double* wr = W.row(j);
            double z = b[j];
            for (int k = 0; k < W.cols; ++k) z += wr[k] * a_prev[k];
            a[j] = activate(act, z);
        }
        a_prev = a.data();
    }
}

// Squared error of the sample and, when grad_block is non-null, the sample's
// gradient contribution (scaled by inv_nd) accumulated into the block buffer.
inline double backward_sample(const NetworkParams& p, const double* x, const double* t,
                              double inv_nd, Workspace& ws, const LayerOffsets& off,
                              double* grad_block) {
    const int L = p.arch.num_weight_layers();
    const int d = p.arch.layer_sizes[L];

    forward_sample(p, x, ws);

    const std::vector<double>& out = ws.a[L];
    double sq = 0.0;
    for (int j = 0; j < d; ++j) {
        const double r = out[j] - t[j];
        sq += r * r;
    }
    if (!grad_block) return sq;

    const Activation out_act = p.arch.activation_of(L);
    for (int j = 0; j < d; ++j)
        ws.delta[L - 1][j] = (out[j] - t[j]) * activate_deriv(out_act, out[j]) * inv_nd;

    for (int l = L; l >= 1; --l) {
        const Matrix& W = p.weights[l - 1];
        const std::vector<double>& delta = ws.delta[l - 1];
        const double* a_prev = l == 1 ? x : ws.a[l - 1].data();

        double* gw = grad_block + off.w[l - 1];
        double* gb = grad_block + off.b[l - 1];
        for (int j = 0; j < W.rows; ++j) {
            const double dj = delta[j];
            double* gwr = gw + static_cast<std::size_t>(j) * W.cols;
            for (int k = 0; k < W.cols; ++k) gwr[k] += dj * a_prev[k];
            gb[j] += dj;
        }

        if (l > 1) {
            const Activation act = p.arch.activation_of(l - 1);
            std::vector<double>& delta_prev = ws.delta[l - 2];
            for (int k = 0; k < W.cols; ++k) {
                double s = 0.0;
                for (int j = 0; j < W.rows; ++j) s += W(j, k) * delta[j];
                delta_prev[k] = s * activate_deriv(act, a_prev[k]);
            }
        }
    }
    return sq;
}

void check_batch(const NetworkParams& p, const Matrix& X, const Matrix& T) {
    const int L = p.arch.num_weight_layers();
    if (X.rows == 0) throw Error("empty batch");
    if (X.rows != T.rows) throw DimensionError("batch: X and T row counts differ");
    if (X.cols != p.arch.layer_sizes[0])
        throw DimensionError("batch: input width " + std::to_string(X.cols) +
                             " does not match network input " +
                             std::to_string(p.arch.layer_sizes[0]));
    if (T.cols != p.arch.layer_sizes[L])
        throw DimensionError("batch: target width " + std::to_string(T.cols) +
                             " does not match network output " +
                             std::to_string(p.arch.layer_sizes[L]));
}

// Shared implementation: `parallel` only changes which thread runs a block.
double batch_loss_impl(const NetworkParams& p, const Matrix& X, const Matrix& T, bool parallel) {
    check_batch(p, X, T);
    const int n_blocks = (X.rows + kBatchBlock - 1) / kBatchBlock;
    std::vector<double> block_sq(n_blocks, 0.0);

#pragma omp parallel if (parallel)
    {
        Workspace ws(p.arch);
#pragma omp for schedule(static)
        for (int blk = 0; blk < n_blocks; ++blk) {
            const int lo = blk * kBatchBlock;
            const int hi = std::min(X.rows, lo + kBatchBlock);
            double sq = 0.0;
            for (int i = lo; i < hi; ++i)
                sq += backward_sample(p, X.row(i), T.row(i), 0.0, ws, LayerOffsets{}, nullptr);
            block_sq[blk] = sq;
        }
    }

    double total = 0.0;
    for (double s : block_sq) total += s;
    return total / (2.0 * X.rows * T.cols);
}

double batch_gradient_impl(const NetworkParams& p, const Matrix& X, const Matrix& T,
                           std::vector<double>& grad, bool parallel) {
    check_batch(p, X, T);
    const LayerOffsets off = layer_offsets(p.arch);
    const int n_blocks = (X.rows + kBatchBlock - 1) / kBatchBlock;
    const double inv_nd = 1.0 / (static_cast<double>(X.rows) * T.cols);

    std::vector<double> partials(static_cast<std::size_t>(n_blocks) * off.total, 0.0);
    std::vector<double> block_sq(n_blocks, 0.0);

#pragma omp parallel if (parallel)
    {
        Workspace ws(p.arch);
#pragma omp for schedule(static)
        for (int blk = 0; blk < n_blocks; ++blk) {
            const int lo = blk * kBatchBlock;
            const int hi = std::min(X.rows, lo + kBatchBlock);
            double* grad_block = partials.data() + static_cast<std::size_t>(blk) * off.total;
            double sq = 0.0;
            for (int i = lo; i < hi; ++i)
                sq += backward_sample(p, X.row(i), T.row(i), inv_nd, ws, off, grad_block);
            block_sq[blk] = sq;
        }
    }

    grad.assign(off.total, 0.0);
    // Coordinate sums run over blocks in index order, so the reduction is
    // identical no matter how blocks were scheduled.
#pragma omp parallel for schedule(static) if (parallel)
    for (long long k = 0; k < static_cast<long long>(off.total); ++k) {
        double s = 0.0;
        for (int blk = 0; blk < n_blocks; ++blk)
            s += partials[static_cast<std::size_t>(blk) * off.total + k];
        grad[k] = s;
    }

    double total = 0.0;
    for (double s : block_sq) total += s;
    return total / (2.0 * X.rows * T.cols);
}

} // namespace

std::string activation_name(Activation a) { return a == Activation::Tanh ? "tanh" : "logistic"; }

Activation activation_from_name(const std::string& name) {
    if (name == "tanh") return Activation::Tanh;
    if (name == "logistic" || name == "sigmoid") return Activation::Logistic;
    throw Error("unknown activation '" + name + "' (expected tanh or logistic)");
}

std::size_t Architecture::param_count() const { return layer_offsets(*this).total; }

void Architecture::validate() const {
    if (layer_sizes.size() < 3)
        throw DimensionError("architecture needs at least one hidden layer");
    for (int s : layer_sizes)
        if (s < 1) throw DimensionError("architecture layer sizes must be >= 1");
}

void Architecture::validate_for_training() const {
    validate();
    const int out = layer_sizes.back();
    if (out != encoding_length(target_encoding))
        throw DimensionError("output layer size " + std::to_string(out) +
                             " does not match encoding " + encoding_name(target_encoding) +
                             " (length " + std::to_string(encoding_length(target_encoding)) +
                             ")");
}

NetworkParams init_network(const Architecture& arch, std::uint64_t seed) {
    arch.validate();
    NetworkParams p;
    p.arch = arch;
    const int L = arch.num_weight_layers();
    Rng rng(mix_seed(seed, seed_tag::kInit));
    for (int l = 0; l < L; ++l) {
        const int fan_out = arch.layer_sizes[l + 1];
        const int fan_in = arch.layer_sizes[l];
        const double lim = std::sqrt(6.0 / (fan_in + fan_out));
        Matrix W(fan_out, fan_in);
        for (double& w : W.data) w = rng_real(rng, -lim, lim);
        p.weights.push_back(std::move(W));
        p.biases.emplace_back(fan_out, 0.0);
    }
    return p;
}

std::vector<double> flatten_params(const NetworkParams& params) {
    const LayerOffsets off = layer_offsets(params.arch);
    std::vector<double> theta(off.total);
    const int L = params.arch.num_weight_layers();
    for (int l = 0; l < L; ++l) {
        std::copy(params.weights[l].data.begin(), params.weights[l].data.end(),
                  theta.begin() + off.w[l]);
        std::copy(params.biases[l].begin(), params.biases[l].end(), theta.begin() + off.b[l]);
    }
    return theta;
}

void unflatten_params(const std::vector<double>& theta, NetworkParams& params) {
    const LayerOffsets off = layer_offsets(params.arch);
    if (theta.size() != off.total)
        throw DimensionError("unflatten_params: expected " + std::to_string(off.total) +
                             " values, got " + std::to_string(theta.size()));
    const int L = params.arch.num_weight_layers();
    for (int l = 0; l < L; ++l) {
        std::copy(theta.begin() + off.w[l],
                  theta.begin() + off.w[l] + params.weights[l].data.size(),
                  params.weights[l].data.begin());
        std::copy(theta.begin() + off.b[l], theta.begin() + off.b[l] + params.biases[l].size(),
                  params.biases[l].begin());
    }
}

ForwardTrace forward(const NetworkParams& params, const std::vector<double>& x) {
    const int L = params.arch.num_weight_layers();
    if (static_cast<int>(x.size()) != params.arch.layer_sizes[0])
        throw DimensionError("forward: input length " + std::to_string(x.size()) +
                             " does not match network input " +
                             std::to_string(params.arch.layer_sizes[0]));

    ForwardTrace trace;
    trace.activations.resize(L + 1);
    trace.pre_activations.resize(L);
    trace.activations[0] = x;
    for (int l = 0; l < L; ++l) {
        const Matrix& W = params.weights[l];
        const std::vector<double>& a_prev = trace.activations[l];
        const Activation act = params.arch.activation_of(l + 1);
        std::vector<double>& z = trace.pre_activations[l];
        std::vector<double>& a = trace.activations[l + 1];
        z.resize(W.rows);
        a.resize(W.rows);
        for (int j = 0; j < W.rows; ++j) {
            const double* wr = W.row(j);
            double zj = params.biases[l][j];
            for (int k = 0; k < W.cols; ++k) zj += wr[k] * a_prev[k];
            z[j] = zj;
            a[j] = activate(act, zj);
        }
    }
    return trace;
}

std::vector<double> forward_output(const NetworkParams& params, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != params.arch.layer_sizes[0])
        throw DimensionError("forward_output: input length mismatch");
    Workspace ws(params.arch);
    forward_sample(params, x.data(), ws);
    return ws.a.back();
}

double loss_mse(const Matrix& outputs, const Matrix& targets) {
    if (outputs.rows != targets.rows || outputs.cols != targets.cols)
        throw DimensionError("loss_mse: shape mismatch");
    if (outputs.rows == 0) throw Error("loss_mse: empty batch");
    double sq = 0.0;
    for (std::size_t i = 0; i < outputs.data.size(); ++i) {
        const double r = outputs.data[i] - targets.data[i];
        sq += r * r;
    }
    return sq / (2.0 * outputs.rows * outputs.cols);
}

double batch_loss(const NetworkParams& p, const Matrix& X, const Matrix& T) {
    return batch_loss_impl(p, X, T, true);
}

double batch_loss_serial(const NetworkParams& p, const Matrix& X, const Matrix& T) {
    return batch_loss_impl(p, X, T, false);
}

double batch_loss_and_gradient(const NetworkParams& p, const Matrix& X, const Matrix& T,
                               std::vector<double>& grad) {
    return batch_gradient_impl(p, X, T, grad, true);
}

double batch_loss_and_gradient_serial(const NetworkParams& p, const Matrix& X, const Matrix& T,
                                      std::vector<double>& grad) {
    return batch_gradient_impl(p, X, T, grad, false);
}

std::vector<double> backprop_gradient(const NetworkParams& p, const Matrix& X, const Matrix& T) {
    std::vector<double> grad;
    batch_loss_and_gradient(p, X, T, grad);
    return grad;
}

std::vector<double> numerical_gradient(const NetworkParams& params, const Matrix& X,
                                       const Matrix& T, double eps) {
    if (eps <= 0.0) throw Error("numerical_gradient: eps must be positive");
    NetworkParams probe = params;
    std::vector<double> theta = flatten_params(params);
    std::vector<double> grad(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const double saved = theta[k];
        theta[k] = saved + eps;
        unflatten_params(theta, probe);
        const double f_plus = batch_loss_serial(probe, X, T);
        theta[k] = saved - eps;
        unflatten_params(theta, probe);
        const double f_minus = batch_loss_serial(probe, X, T);
        theta[k] = saved;
        grad[k] = (f_plus - f_minus) / (2.0 * eps);
    }
    unflatten_params(theta, probe);
    return grad;
}

} // namespace geez
