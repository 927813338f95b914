/**
 * Compiles a step network into the arrangement of its first layer plus, per
 * output, the selection of regions on which that output is 1.
 *
 * Two independent routes produce selections: `compile` evaluates the network
 * at one witness per region (outputs are constant on a region), and
 * `compile_symbolic` pushes region membership bits through the weighted unions
 * of each later layer without touching any point coordinates.
 */

#ifndef NETGEOM_COMPILER_HPP
#define NETGEOM_COMPILER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "netgeom/geometry.hpp"
#include "netgeom/network.hpp"
#include "netgeom/selection.hpp"

namespace netgeom {

struct CompiledNetwork {
    Arrangement arrangement;
    std::vector<Region> regions;    // nonempty regions, lexicographic label order
    std::vector<Selection> selections;  // one per output
    /// layer_selections[l][j]: labels of regions on which node j of hidden
    /// layer l outputs 1. Covers every layer but the output layer, starting
    /// with the hyperplane layer.
    std::vector<std::vector<Selection>> layer_selections;

    /// Nontrivial labels as a selection (complement universe).
    Selection all_regions() const;
};

CompiledNetwork compile(const StepNetwork& N, const EnumerationOptions& opts = {});

/// Final-layer selections from region labels alone.
std::vector<Selection> compile_symbolic(const StepNetwork& N, const std::vector<Region>& regions);

/// Per-layer, per-node activation bits over `regions`, derived symbolically.
/// Result[l][j][r] is node j of layer l on region r.
std::vector<std::vector<Bits>> symbolic_activations(const StepNetwork& N, const std::vector<Region>& regions);

/// Unordered pairs of region labels with identical last-hidden-layer
/// signatures; no output layer can tell them apart. Throws InvalidArgument
/// when the network has no hidden layer.
std::vector<std::pair<RegionLabel, RegionLabel>> inseparable_pairs(const CompiledNetwork& C);

struct VerifyOptions {
    std::size_t samples = 10000;
    double margin = 10 * kDefaultTol;
    double sample_box = 10.0;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
};

struct Mismatch {
    Eigen::VectorXd point;
    Bits expected;  // network output
    Bits got;       // compiled prediction
};

struct VerifyReport {
    std::size_t samples = 0;
    std::size_t discarded = 0;
    std::vector<Mismatch> mismatches;
};

/// Samples uniform points in [-sample_box, sample_box]^n, skips those within
/// `margin` of a hyperplane and compares network outputs with selection
/// membership of the point's region. Reproducible for a given seed regardless
/// of thread count.
VerifyReport verify(const StepNetwork& N, const CompiledNetwork& C, const VerifyOptions& opts = {});

}  // namespace netgeom

#endif
