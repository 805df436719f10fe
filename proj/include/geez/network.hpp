#ifndef GEEZ_NETWORK_HPP
#define GEEZ_NETWORK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geez/dataset.hpp"
#include "geez/image.hpp"

namespace geez {

enum class Activation : std::uint8_t { Tanh = 0, Logistic = 1 };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

// Dense row-major matrix. Also used for sample batches (rows = samples).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
};

// Layer sizes plus activation/encoding configuration. layer_sizes[0] is the
// input width; the last entry is the output width.
struct Architecture {
    std::vector<int> layer_sizes{kFeatureLength, 20, 15, 10, 20};
    Activation hidden_activation = Activation::Tanh;
    Activation output_activation = Activation::Logistic;
    Encoding target_encoding = Encoding::OneHot20;

    int num_weight_layers() const { return static_cast<int>(layer_sizes.size()) - 1; }
    // Activation of weight layer l in 1..L.
    Activation activation_of(int layer) const {
        return layer == num_weight_layers() ? output_activation : hidden_activation;
    }
    std::size_t param_count() const;
    // Requires at least one hidden layer and positive sizes.
    void validate() const;
    // Additionally requires the output width to match the target encoding.
    void validate_for_training() const;
};

// Weight matrices (fan_out x fan_in) and bias vectors per layer. Entry l of
// each vector belongs to weight layer l+1.
struct NetworkParams {
    Architecture arch;
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
};

// Uniform Glorot init: weights from U(-sqrt(6/(fan_in+fan_out)), +...),
// biases zero. Deterministic given the seed.
NetworkParams init_network(const Architecture& arch, std::uint64_t seed);

// Flat parameter view the optimizer works on: all weight matrices row-major,
// layer by layer, then all bias vectors. flatten/unflatten round-trip
// bit-exactly.
std::vector<double> flatten_params(const NetworkParams& params);
void unflatten_params(const std::vector<double>& theta, NetworkParams& params);

// Single-sample forward pass keeping everything backprop needs.
// activations[0] is the input, activations[L] the output;
// pre_activations[l-1] holds z of weight layer l.
struct ForwardTrace {
    std::vector<std::vector<double>> activations;
    std::vector<std::vector<double>> pre_activations;
    const std::vector<double>& output() const { return activations.back(); }
};

ForwardTrace forward(const NetworkParams& params, const std::vector<double>& x);
std::vector<double> forward_output(const NetworkParams& params, const std::vector<double>& x);

// Mean squared error with the 1/(2 N d) normalization, over batch rows.
double loss_mse(const Matrix& outputs, const Matrix& targets);

// Full-batch loss and exact gradient. X rows are inputs, T rows are targets.
// The parallel and serial paths share one block-structured accumulation
// (fixed block size, blocks reduced in index order), so their results are
// bit-identical for any thread count; the serial path is the reference the
// tests compare against.
double batch_loss(const NetworkParams& params, const Matrix& X, const Matrix& T);
double batch_loss_serial(const NetworkParams& params, const Matrix& X, const Matrix& T);
double batch_loss_and_gradient(const NetworkParams& params, const Matrix& X, const Matrix& T,
                               std::vector<double>& grad);
double batch_loss_and_gradient_serial(const NetworkParams& params, const Matrix& X,
                                      const Matrix& T, std::vector<double>& grad);

// Gradient of loss_mse over the batch, in flat parameter order.
std::vector<double> backprop_gradient(const NetworkParams& params, const Matrix& X,
                                      const Matrix& T);

// Central-difference oracle: (L(theta+eps e_k) - L(theta-eps e_k)) / (2 eps).
std::vector<double> numerical_gradient(const NetworkParams& params, const Matrix& X,
                                       const Matrix& T, double eps = 1e-5);

} // namespace geez

#endif
