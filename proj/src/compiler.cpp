#include "netgeom/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <random>
#include <thread>

namespace netgeom {

Selection CompiledNetwork::all_regions() const {
    Selection s{arrangement.size(), {}};
    for (const auto& r : regions) s.selected.insert(r.label);
    return s;
}

CompiledNetwork compile(const StepNetwork& N, const EnumerationOptions& opts) {
    Arrangement A = first_layer_arrangement(N);
    std::vector<Region> regions = enumerate_regions(A, opts);
    const std::size_t k = A.size();
    const auto& layers = N.layers();

    std::vector<std::vector<Selection>> hidden(layers.size() - 1);
    for (std::size_t l = 0; l + 1 < layers.size(); ++l)
        hidden[l].assign(static_cast<std::size_t>(layers[l].nodes()), Selection{k, {}});
    std::vector<Selection> outputs(static_cast<std::size_t>(N.outputs()), Selection{k, {}});

    for (const auto& r : regions) {
        const ForwardTrace trace = forward(N, r.witness);
        for (std::size_t l = 0; l < hidden.size(); ++l)
            for (std::size_t j = 0; j < hidden[l].size(); ++j)
                if (trace.activations[l][j]) hidden[l][j].selected.insert(r.label);
        for (std::size_t o = 0; o < outputs.size(); ++o)
            if (trace.output()[o]) outputs[o].selected.insert(r.label);
    }
    return CompiledNetwork{std::move(A), std::move(regions), std::move(outputs), std::move(hidden)};
}

std::vector<std::vector<Bits>> symbolic_activations(const StepNetwork& N, const std::vector<Region>& regions) {
    const auto& layers = N.layers();
    const auto k = static_cast<std::size_t>(layers.front().nodes());
    std::vector<std::vector<Bits>> acts(layers.size());

    // Hyperplane layer: node i is 1 exactly on labels containing i.
    acts[0].assign(k, Bits(regions.size(), 0));
    for (std::size_t r = 0; r < regions.size(); ++r) {
        if (k < 64 && (regions[r].label.bits >> k) != 0)
            throw Error(ErrorKind::DimensionMismatch, "region label " + regions[r].label.to_string() +
                                                          " exceeds the first layer width");
        for (std::size_t i = 0; i < k; ++i) acts[0][i][r] = regions[r].label.contains(i) ? 1 : 0;
    }

    // Every later node is the weighted union of the previous layer's sets.
    for (std::size_t l = 1; l < layers.size(); ++l) {
        const Layer& L = layers[l];
        const auto nodes = static_cast<std::size_t>(L.nodes());
        acts[l].assign(nodes, Bits(regions.size(), 0));
        for (std::size_t j = 0; j < nodes; ++j) {
            WeightedUnion w;
            w.weights.resize(static_cast<std::size_t>(L.inputs()));
            for (Eigen::Index c = 0; c < L.inputs(); ++c)
                w.weights[static_cast<std::size_t>(c)] = L.weights(static_cast<Eigen::Index>(j), c);
            w.offset = -L.offsets(static_cast<Eigen::Index>(j));
            Bits membership(w.weights.size());
            for (std::size_t r = 0; r < regions.size(); ++r) {
                for (std::size_t i = 0; i < membership.size(); ++i) membership[i] = acts[l - 1][i][r];
                acts[l][j][r] = eval_weighted_union(w, membership);
            }
        }
    }
    return acts;
}

std::vector<Selection> compile_symbolic(const StepNetwork& N, const std::vector<Region>& regions) {
    const auto acts = symbolic_activations(N, regions);
    const auto k = static_cast<std::size_t>(N.layers().front().nodes());
    std::vector<Selection> out;
    for (const Bits& node : acts.back()) {
        Selection s{k, {}};
        for (std::size_t r = 0; r < regions.size(); ++r)
            if (node[r]) s.selected.insert(regions[r].label);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::pair<RegionLabel, RegionLabel>> inseparable_pairs(const CompiledNetwork& C) {
    if (C.layer_selections.empty())
        throw Error(ErrorKind::InvalidArgument, "inseparable pairs need a network with at least one hidden layer");
    const auto& last = C.layer_selections.back();

    std::map<Bits, std::vector<RegionLabel>> groups;
    for (const auto& r : C.regions) {
        Bits sig(last.size());
        for (std::size_t j = 0; j < last.size(); ++j) sig[j] = last[j].contains(r.label) ? 1 : 0;
        groups[sig].push_back(r.label);
    }
    std::vector<std::pair<RegionLabel, RegionLabel>> pairs;
    for (const auto& [sig, labels] : groups)
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a + 1; b < labels.size(); ++b) {
                auto p = std::make_pair(labels[a], labels[b]);
                if (lexicographic_less(p.second, p.first)) std::swap(p.first, p.second);
                pairs.push_back(p);
            }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return lexicographic_less(x.first, y.first);
        return lexicographic_less(x.second, y.second);
    });
    return pairs;
}

namespace {

constexpr std::size_t kBatchSize = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct BatchResult {
    std::size_t discarded = 0;
    std::vector<Mismatch> mismatches;
};

}  // namespace

VerifyReport verify(const StepNetwork& N, const CompiledNetwork& C, const VerifyOptions& opts) {
    const Arrangement& A = C.arrangement;
    if (A.dimension() != N.input_dim())
        throw Error(ErrorKind::DimensionMismatch, "compiled arrangement does not match the network input");
    if (C.selections.size() != static_cast<std::size_t>(N.outputs()))
        throw Error(ErrorKind::DimensionMismatch, "compiled selections do not match the network outputs");

    const std::size_t batches = (opts.samples + kBatchSize - 1) / kBatchSize;
    const Eigen::Index n = A.dimension();

    auto run_batch = [&](std::size_t b) {
        BatchResult res;
        std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(b)));
        std::uniform_real_distribution<double> coord(-opts.sample_box, opts.sample_box);
        const std::size_t count = std::min(kBatchSize, opts.samples - b * kBatchSize);
        Eigen::VectorXd x(n);
        for (std::size_t s = 0; s < count; ++s) {
            for (Eigen::Index c = 0; c < n; ++c) x(c) = coord(rng);
            RegionLabel label;
            bool near = false;
            for (std::size_t i = 0; i < A.size() && !near; ++i) {
                const double d = A[i].signed_distance(x);
                if (std::abs(d) < opts.margin || std::abs(d) <= opts.tol) near = true;
                else if (d > 0) label = label.with(i);
            }
            if (near) {
                ++res.discarded;
                continue;
            }
            Bits got(C.selections.size());
            for (std::size_t o = 0; o < got.size(); ++o) got[o] = C.selections[o].contains(label) ? 1 : 0;
            Bits expected = forward(N, x).output();
            if (expected != got) res.mismatches.push_back(Mismatch{x, std::move(expected), std::move(got)});
        }
        return res;
    };

    std::vector<BatchResult> results(batches);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), batches));
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t b = w; b < batches; b += workers) results[b] = run_batch(b);
        }));
    }
    for (auto& f : pool) f.get();

    VerifyReport report;
    report.samples = opts.samples;
    for (auto& r : results) {
        report.discarded += r.discarded;
        for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
    }
    return report;
}

}  // namespace netgeom
