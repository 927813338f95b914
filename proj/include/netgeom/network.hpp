#ifndef NETGEOM_NETWORK_HPP
#define NETGEOM_NETWORK_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "netgeom/geometry.hpp"

namespace netgeom {

using Bits = std::vector<std::uint8_t>;

/// One affine map followed by the step activation. Row j of `weights` holds
/// the incoming weights of node j.
struct Layer {
    Eigen::MatrixXd weights;
    Eigen::VectorXd offsets;

    Eigen::Index inputs() const { return weights.cols(); }
    Eigen::Index nodes() const { return weights.rows(); }
};

/// Feed-forward classification network under the step activation. The first
/// layer is the hyperplane layer; the last one is the output layer.
class StepNetwork {
public:
    /// Throws ShapeMismatch / EmptyNetwork / NonFinite on invalid shapes.
    StepNetwork(Eigen::Index input_dim, std::vector<Layer> layers);

    Eigen::Index input_dim() const { return input_dim_; }
    const std::vector<Layer>& layers() const { return layers_; }
    /// Number of layers minus one.
    std::size_t height() const { return layers_.size() - 1; }
    Eigen::Index outputs() const { return layers_.back().nodes(); }

private:
    Eigen::Index input_dim_;
    std::vector<Layer> layers_;
};

struct ForwardTrace {
    std::vector<Bits> activations;  // one entry per layer; back() is the output
    const Bits& output() const { return activations.back(); }
};

/// 1 if t > 0, else 0.
constexpr std::uint8_t step(double t) { return t > 0.0 ? 1 : 0; }

ForwardTrace forward(const StepNetwork& N, const Eigen::VectorXd& x);

/// Applies one layer to a previous activation vector.
Bits apply_layer(const Layer& layer, const Eigen::VectorXd& input);

/// Hyperplane i has normal = row i of the first weight matrix, offset = the
/// node's offset. Throws ZeroNormal naming the node for a zero row.
Arrangement first_layer_arrangement(const StepNetwork& N);

/// Parses `{"inputs": n, "layers": [{"weights": [[..]..], "offsets": [..]}, ..]}`.
/// Errors: MalformedJson, SchemaViolation, EmptyNetwork, ShapeMismatch,
/// ZeroNormal, NonFinite.
StepNetwork parse_network(std::string_view document);

}  // namespace netgeom

#endif
