#include "netgeom/network.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

namespace netgeom {

StepNetwork::StepNetwork(Eigen::Index input_dim, std::vector<Layer> layers)
    : input_dim_(input_dim), layers_(std::move(layers)) {
    if (input_dim_ < 1) throw Error(ErrorKind::ShapeMismatch, "network must have at least one input");
    if (layers_.empty()) throw Error(ErrorKind::EmptyNetwork, "network has no layers");
    Eigen::Index prev = input_dim_;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const auto& L = layers_[l];
        const std::string where = "layer " + std::to_string(l + 1);
        if (L.nodes() == 0) throw Error(ErrorKind::ShapeMismatch, where + " has no nodes", l);
        if (L.offsets.size() != L.nodes()) {
            throw Error(ErrorKind::ShapeMismatch,
                        where + " has " + std::to_string(L.nodes()) + " weight rows but " +
                            std::to_string(L.offsets.size()) + " offsets",
                        l);
        }
        if (L.inputs() != prev) {
            throw Error(ErrorKind::ShapeMismatch,
                        where + " expects " + std::to_string(L.inputs()) + " inputs, previous layer provides " +
                            std::to_string(prev),
                        l);
        }
        if (!L.weights.allFinite() || !L.offsets.allFinite())
            throw Error(ErrorKind::NonFinite, where + " contains a non-finite value", l);
        prev = L.nodes();
    }
}

Bits apply_layer(const Layer& layer, const Eigen::VectorXd& input) {
    if (input.size() != layer.inputs()) {
        throw Error(ErrorKind::DimensionMismatch, "layer expects " + std::to_string(layer.inputs()) +
                                                      " inputs, got " + std::to_string(input.size()));
    }
    const Eigen::VectorXd pre = layer.weights * input + layer.offsets;
    Bits out(static_cast<std::size_t>(pre.size()));
    for (Eigen::Index j = 0; j < pre.size(); ++j) out[static_cast<std::size_t>(j)] = step(pre(j));
    return out;
}

ForwardTrace forward(const StepNetwork& N, const Eigen::VectorXd& x) {
    if (x.size() != N.input_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "input has dimension " + std::to_string(x.size()) +
                                                      ", network expects " + std::to_string(N.input_dim()));
    }
    ForwardTrace trace;
    trace.activations.reserve(N.layers().size());
    Eigen::VectorXd current = x;
    for (const auto& layer : N.layers()) {
        Bits bits = apply_layer(layer, current);
        current.resize(static_cast<Eigen::Index>(bits.size()));
        for (std::size_t j = 0; j < bits.size(); ++j) current(static_cast<Eigen::Index>(j)) = bits[j];
        trace.activations.push_back(std::move(bits));
    }
    return trace;
}

Arrangement first_layer_arrangement(const StepNetwork& N) {
    const Layer& first = N.layers().front();
    std::vector<Hyperplane> planes;
    planes.reserve(static_cast<std::size_t>(first.nodes()));
    for (Eigen::Index i = 0; i < first.nodes(); ++i) {
        if (!(first.weights.row(i).norm() > kDefaultTol)) {
            throw Error(ErrorKind::ZeroNormal,
                        "first-layer node " + std::to_string(i + 1) + " has an all-zero weight row",
                        static_cast<std::size_t>(i));
        }
        planes.emplace_back(first.weights.row(i).transpose(), first.offsets(i));
    }
    return Arrangement(N.input_dim(), std::move(planes));
}

namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw Error(ErrorKind::SchemaViolation, where + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw Error(ErrorKind::NonFinite, where + " is not finite");
    return d;
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(ErrorKind::SchemaViolation, where + " is missing \"" + key + "\"");
    return *it;
}

}  // namespace

StepNetwork parse_network(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedJson, std::string("malformed JSON: ") + e.what());
    } catch (const json::out_of_range& e) {
        throw Error(ErrorKind::NonFinite, std::string("number out of range: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::SchemaViolation, "network document must be an object");

    const json& inputs = require(doc, "inputs", "network");
    if (!inputs.is_number_integer() || inputs.get<long long>() < 1)
        throw Error(ErrorKind::SchemaViolation, "\"inputs\" must be a positive integer");
    const auto n = static_cast<Eigen::Index>(inputs.get<long long>());

    const json& layers = require(doc, "layers", "network");
    if (!layers.is_array()) throw Error(ErrorKind::SchemaViolation, "\"layers\" must be an array");
    if (layers.empty()) throw Error(ErrorKind::EmptyNetwork, "network has no layers");

    std::vector<Layer> parsed;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::string where = "layer " + std::to_string(l + 1);
        const json& L = layers[l];
        if (!L.is_object()) throw Error(ErrorKind::SchemaViolation, where + " must be an object", l);
        const json& W = require(L, "weights", where);
        const json& b = require(L, "offsets", where);
        if (!W.is_array() || !b.is_array())
            throw Error(ErrorKind::SchemaViolation, where + ": weights and offsets must be arrays", l);
        if (W.empty()) throw Error(ErrorKind::ShapeMismatch, where + " has no nodes", l);
        if (!W[0].is_array()) throw Error(ErrorKind::SchemaViolation, where + ": weights must be rows", l);

        const auto rows = static_cast<Eigen::Index>(W.size());
        const auto cols = static_cast<Eigen::Index>(W[0].size());
        Layer layer{Eigen::MatrixXd(rows, cols), Eigen::VectorXd(static_cast<Eigen::Index>(b.size()))};
        for (Eigen::Index r = 0; r < rows; ++r) {
            const json& row = W[static_cast<std::size_t>(r)];
            if (!row.is_array()) throw Error(ErrorKind::SchemaViolation, where + ": weights must be rows", l);
            if (static_cast<Eigen::Index>(row.size()) != cols)
                throw Error(ErrorKind::ShapeMismatch, where + ": weight rows have unequal lengths", l);
            for (Eigen::Index c = 0; c < cols; ++c)
                layer.weights(r, c) = finite_number(row[static_cast<std::size_t>(c)], where + " weight");
        }
        for (std::size_t j = 0; j < b.size(); ++j)
            layer.offsets(static_cast<Eigen::Index>(j)) = finite_number(b[j], where + " offset");
        parsed.push_back(std::move(layer));
    }

    StepNetwork net(n, std::move(parsed));
    const Layer& first = net.layers().front();
    for (Eigen::Index i = 0; i < first.nodes(); ++i) {
        if (!(first.weights.row(i).norm() > kDefaultTol)) {
            throw Error(ErrorKind::ZeroNormal,
                        "first-layer node " + std::to_string(i + 1) + " has an all-zero weight row",
                        static_cast<std::size_t>(i));
        }
    }
    return net;
}

}  // namespace netgeom
