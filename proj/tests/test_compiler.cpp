#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "netgeom/compiler.hpp"
#include "test_support.hpp"

using namespace netgeom;

namespace {

RegionLabel L(std::initializer_list<std::size_t> one_based) {
    RegionLabel l;
    for (auto i : one_based) l = l.with(i - 1);
    return l;
}

StepNetwork xor_network() {
    Layer l1{Eigen::MatrixXd(2, 2), Eigen::Vector2d(-0.5, -1.5)};
    l1.weights << 1, 1, 1, 1;
    Layer l2{Eigen::MatrixXd(1, 2), Eigen::VectorXd::Constant(1, -0.5)};
    l2.weights << 1, -1;
    return StepNetwork(2, {l1, l2});
}

StepNetwork single_node() {
    Layer l{Eigen::MatrixXd(1, 2), Eigen::VectorXd::Zero(1)};
    l.weights << 1, 0;
    return StepNetwork(2, {l});
}

std::set<RegionLabel> region_labels(const CompiledNetwork& C) {
    std::set<RegionLabel> s;
    for (const auto& r : C.regions) s.insert(r.label);
    return s;
}

// Builds a compiled network over the two axis lines whose single hidden
// layer has the given per-node selections.
CompiledNetwork axis_fixture(std::vector<Selection> last_hidden) {
    const Arrangement A = testing::lines({{1, 0, 0}, {0, 1, 0}});
    std::vector<Region> regions;
    for (auto l : {L({}), L({1}), L({1, 2}), L({2})}) {
        Eigen::Vector2d w(l.contains(0) ? 1 : -1, l.contains(1) ? 1 : -1);
        regions.push_back({l, w});
    }
    return CompiledNetwork{A, regions, {Selection{2, {}}}, {std::move(last_hidden)}};
}

}  // namespace

TEST_CASE("compile the XOR network") {
    const auto N = xor_network();
    const auto C = compile(N);
    CHECK(region_labels(C) == std::set<RegionLabel>{L({}), L({1}), L({1, 2})});
    REQUIRE(C.selections.size() == 1);
    CHECK(C.selections[0] == Selection{2, {L({1})}});

    // Grid oracle over [-3, 3]^2.
    const auto A = first_layer_arrangement(N);
    std::set<RegionLabel> seen, selected;
    for (int i = 0; i <= 600; ++i)
        for (int j = 0; j <= 600; ++j) {
            const Eigen::Vector2d x(-3 + 0.01 * i + 1e-4, -3 + 0.01 * j + 2e-4);
            const auto label = region_signature(A, x);
            seen.insert(label);
            if (forward(N, x).output()[0]) selected.insert(label);
        }
    CHECK(seen == region_labels(C));
    CHECK(selected == C.selections[0].selected);

    // Hyperplane layer selections are the labels containing each index.
    REQUIRE(C.layer_selections.size() == 1);
    CHECK(C.layer_selections[0][0] == Selection{2, {L({1}), L({1, 2})}});
    CHECK(C.layer_selections[0][1] == Selection{2, {L({1, 2})}});
}

TEST_CASE("compile: unreachable threshold selects every region") {
    testing::Rng rng(67);
    auto N = testing::gaussian_network(rng, 2, {5, 1});
    auto layers = N.layers();
    layers[1].weights = layers[1].weights.cwiseAbs();
    layers[1].offsets(0) = 1e6;  // weighted-union offset -1e6
    const StepNetwork M(2, layers);
    const auto C = compile(M);
    CHECK(C.selections[0] == C.all_regions());
}

TEST_CASE("compile: single node is the positive side") {
    const auto C = compile(single_node());
    CHECK(C.selections[0] == Selection{1, {L({1})}});
    CHECK(C.layer_selections.empty());
    CHECK(compile_symbolic(single_node(), C.regions) == C.selections);
}

TEST_CASE("compile and compile_symbolic agree") {
    CHECK(compile_symbolic(xor_network(), compile(xor_network()).regions) == std::vector<Selection>{Selection{2, {L({1})}}});
    testing::Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const auto N = testing::gaussian_network(rng, 2, {4, 3, 3, 1 + trial % 2});
        const auto C = compile(N);
        CHECK(compile_symbolic(N, C.regions) == C.selections);
        const auto acts = symbolic_activations(N, C.regions);
        for (std::size_t l = 0; l < C.layer_selections.size(); ++l)
            for (std::size_t j = 0; j < C.layer_selections[l].size(); ++j)
                for (std::size_t r = 0; r < C.regions.size(); ++r)
                    CHECK((acts[l][j][r] == 1) == C.layer_selections[l][j].contains(C.regions[r].label));
    }
}

TEST_CASE("inseparable pairs: fixtures") {
    SUBCASE("signatures (0,0),(1,0),(0,0),(1,1)") {
        const auto C = axis_fixture({Selection{2, {L({1}), L({1, 2})}}, Selection{2, {L({1, 2})}}});
        const auto pairs = inseparable_pairs(C);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == std::make_pair(L({}), L({2})));
    }
    SUBCASE("one node selecting everything") {
        const auto C = axis_fixture({Selection{2, {L({}), L({1}), L({2}), L({1, 2})}}});
        CHECK(inseparable_pairs(C).size() == 6);
    }
    SUBCASE("distinct signatures") {
        const auto C = axis_fixture({Selection{2, {L({1}), L({1, 2})}}, Selection{2, {L({2}), L({1, 2})}}});
        CHECK(inseparable_pairs(C).empty());
    }
    SUBCASE("no hidden layer") {
        CHECK_THROWS_AS(inseparable_pairs(compile(single_node())), Error);
    }
}

TEST_CASE("inseparable pairs survive any replacement output layer") {
    testing::Rng rng(73);
    for (int trial = 0; trial < 5; ++trial) {
        const auto N = testing::gaussian_network(rng, 2, {5, 2, 1});
        const auto C = compile(N);
        const auto pairs = inseparable_pairs(C);
        std::map<RegionLabel, Eigen::VectorXd> witness;
        for (const auto& r : C.regions) witness[r.label] = r.witness;
        for (int s = 0; s < 50; ++s) {
            auto layers = N.layers();
            layers.back() = testing::gaussian_layer(rng, 1, layers.back().inputs());
            const StepNetwork M(2, layers);
            for (const auto& [a, b] : pairs) CHECK(forward(M, witness[a]).output() == forward(M, witness[b]).output());
        }
    }
}

TEST_CASE("lowering a monotone output offset never shrinks the selection") {
    testing::Rng rng(79);
    auto layers = testing::gaussian_network(rng, 2, {6, 3, 1}).layers();
    layers.back().weights = layers.back().weights.cwiseAbs();
    Selection previous{6, {}};
    for (double threshold : {3.0, 2.0, 1.0, 0.5, 0.0, -0.5, -5.0}) {
        layers.back().offsets(0) = -threshold;
        const auto C = compile(StepNetwork(2, layers));
        CHECK(std::includes(C.selections[0].selected.begin(), C.selections[0].selected.end(),
                            previous.selected.begin(), previous.selected.end()));
        previous = C.selections[0];
    }
}

TEST_CASE("verify") {
    SUBCASE("XOR") {
        const auto N = xor_network();
        const auto report = verify(N, compile(N), {100000, 1e-6, 10.0, 7});
        CHECK(report.samples == 100000);
        CHECK(report.mismatches.empty());
    }
    SUBCASE("single node") {
        const auto N = single_node();
        CHECK(verify(N, compile(N), {5000, 1e-8, 10.0, 1}).mismatches.empty());
    }
    SUBCASE("corrupted selection is caught") {
        const auto N = xor_network();
        auto C = compile(N);
        C.selections[0].selected.insert(L({}));
        const auto report = verify(N, C, {20000, 1e-6, 10.0, 3});
        CHECK(report.mismatches.size() > 0);
        for (const auto& m : report.mismatches) {
            CHECK(m.expected == Bits{0});
            CHECK(m.got == Bits{1});
        }
    }
    SUBCASE("reproducible and margin-aware") {
        testing::Rng rng(83);
        const auto N = testing::gaussian_network(rng, 3, {6, 4, 2});
        const auto C = compile(N);
        const auto a = verify(N, C, {30000, 0.05, 5.0, 99});
        const auto b = verify(N, C, {30000, 0.05, 5.0, 99});
        CHECK(a.discarded == b.discarded);
        CHECK(a.discarded > 0);
        CHECK(a.mismatches.empty());
    }
}
