#include <doctest.h>

#include "netgeom/selection.hpp"
#include "test_support.hpp"

using namespace netgeom;
using netgeom::testing::pattern_bits;

namespace {

RegionLabel L(std::initializer_list<std::size_t> one_based) {
    RegionLabel l;
    for (auto i : one_based) l = l.with(i - 1);
    return l;
}

Selection S(std::size_t k, std::initializer_list<RegionLabel> labels) { return Selection{k, {labels}}; }

// Oracle: the labels whose membership pattern the weighted union accepts,
// found by evaluating every pattern directly.
Selection brute_force_selection(const WeightedUnion& w) {
    Selection s{w.weights.size(), {}};
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << w.weights.size()); ++p)
        if (eval_weighted_union(w, pattern_bits(p, w.weights.size()))) s.selected.insert(RegionLabel{p});
    return s;
}

}  // namespace

TEST_CASE("eval weighted union: constructors from set algebra") {
    CHECK(eval_weighted_union({{1, 1}, 0.5}, Bits{1, 0}) == 1);
    CHECK(eval_weighted_union({{1, 1}, 1.5}, Bits{1, 0}) == 0);
    CHECK(eval_weighted_union({{1, 1}, 1.5}, Bits{1, 1}) == 1);
    CHECK(eval_weighted_union({{-1}, -0.5}, Bits{0}) == 1);
    CHECK_THROWS_AS(eval_weighted_union({{1, 1}, 0.5}, Bits{1}), Error);
}

TEST_CASE("normalize") {
    SUBCASE("mixed signs") {
        const WeightedUnion w{{2, -3}, 1};
        const auto nw = normalize(w);
        CHECK(nw.weights == std::vector<double>{2, 3});
        CHECK(nw.adjusted_offset == 4.0);
        CHECK_FALSE(nw.polarity.is_negative(0));
        CHECK(nw.polarity.is_negative(1));
        // Exhaustive equivalence on all four patterns with flipped inputs.
        for (std::uint64_t p = 0; p < 4; ++p) {
            const Bits m = pattern_bits(p, 2);
            const Bits flipped{m[0], static_cast<std::uint8_t>(1 - m[1])};
            CHECK(eval_weighted_union(w, m) == eval_weighted_union({nw.weights, nw.adjusted_offset}, flipped));
        }
    }
    SUBCASE("nonnegative weights are untouched") {
        const auto nw = normalize({{1, 2}, 0});
        CHECK(nw.weights == std::vector<double>{1, 2});
        CHECK(nw.adjusted_offset == 0.0);
        CHECK(nw.polarity.negative == 0);
    }
    SUBCASE("complement") {
        const auto nw = normalize(make_complement());
        CHECK(nw.weights == std::vector<double>{1});
        CHECK(nw.adjusted_offset == 0.5);
        CHECK(nw.polarity.is_negative(0));
        CHECK(eval_weighted_union({nw.weights, nw.adjusted_offset}, Bits{1}) ==
              eval_weighted_union(make_complement(), Bits{0}));
        CHECK(eval_weighted_union({nw.weights, nw.adjusted_offset}, Bits{0}) ==
              eval_weighted_union(make_complement(), Bits{1}));
    }
    SUBCASE("zero weights keep positive polarity") {
        const auto nw = normalize({{0, -1}, 0});
        CHECK_FALSE(nw.polarity.is_negative(0));
    }
}

TEST_CASE("normalize preserves semantics exhaustively") {
    testing::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto w = testing::random_weighted_union(rng, n);
        const auto nw = normalize(w);
        for (double a : nw.weights) CHECK(a >= 0.0);
        const WeightedUnion flat{nw.weights, nw.adjusted_offset};
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
            const RegionLabel flipped = repolarize(nw.polarity, RegionLabel{p});
            REQUIRE(eval_weighted_union(w, pattern_bits(p, n)) == eval_weighted_union(flat, pattern_bits(flipped.bits, n)));
        }
    }
}

TEST_CASE("sigma") {
    const NormalizedWeightedUnion nw{{2, 3}, 0, {2, 0}};
    CHECK(sigma(nw, L({1, 2})) == 5.0);
    CHECK(sigma(nw, L({})) == 0.0);
    CHECK(sigma(nw, L({1})) <= sigma(nw, L({1, 2})));
    CHECK(sigma(nw, L({2})) <= sigma(nw, L({1, 2})));
    CHECK_THROWS_AS(sigma(nw, L({3})), Error);
}

TEST_CASE("selected indices") {
    CHECK(selected_indices({{1, 1}, 0.5}) == S(2, {L({1}), L({2}), L({1, 2})}));
    CHECK(selected_indices({{1, 1}, 1.5}) == S(2, {L({1, 2})}));
    CHECK(selected_indices(make_complement()) == S(1, {L({})}));
    for (const WeightedUnion& w : {WeightedUnion{{1, 1}, 0.5}, WeightedUnion{{1, 1}, 1.5}, make_complement()})
        CHECK(selected_indices(w) == brute_force_selection(w));

    CHECK_THROWS_AS(selected_indices({std::vector<double>(21, 1.0), 0.5}), Error);
    CHECK_NOTHROW(selected_indices({std::vector<double>(20, 1.0), 19.5}));
}

TEST_CASE("selected indices: exact ties are excluded") {
    // sigma({1}) = 1 equals the offset exactly.
    CHECK(selected_indices({{1, 2}, 1}) == S(2, {L({2}), L({1, 2})}));
    CHECK(eval_weighted_union({{1, 2}, 1}, Bits{1, 0}) == 0);
    // Negative weight: adjusted offset 1 - (-1) = 2 = sigma({1,2}) after flip.
    CHECK(selected_indices({{1, -1}, 0}) == brute_force_selection({{1, -1}, 0}));
    CHECK_FALSE(selected_indices({{1, -1}, 0}).contains(L({1, 2})));
}

TEST_CASE("selected indices match evaluation on random unions") {
    testing::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto w = testing::random_weighted_union(rng, n);
        CHECK(selected_indices(w) == brute_force_selection(w));
    }
}

TEST_CASE("sigma preimage is an up-set") {
    testing::Rng rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 10;
        const auto nw = normalize(testing::random_weighted_union(rng, n));
        const auto up = sigma_preimage(nw);
        const std::set<RegionLabel> in(up.begin(), up.end());
        for (auto J : up)
            for (std::size_t i = 0; i < n; ++i) CHECK(in.count(J.with(i)) == 1);
    }
}

TEST_CASE("repolarize") {
    const Polarity p{2, 0b10};
    CHECK(repolarize(p, L({1, 2})) == L({1}));
    CHECK(repolarize(p, L({})) == L({2}));
    testing::Rng rng(61);
    std::uniform_int_distribution<std::uint64_t> bits(0, (1U << 20) - 1);
    for (int i = 0; i < 200; ++i) {
        const Polarity q{20, bits(rng)};
        const RegionLabel J{bits(rng)};
        CHECK(repolarize(q, repolarize(q, J)) == J);
    }
}

TEST_CASE("set-algebra constructors") {
    CHECK(eval_weighted_union(make_union(3), Bits{0, 0, 1}) == 1);
    CHECK(eval_weighted_union(make_intersection(3), Bits{1, 1, 0}) == 0);
    CHECK(eval_weighted_union(make_complement(), Bits{1}) == 0);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
            const Bits m = pattern_bits(p, n);
            const bool any = p != 0, all = p == (std::uint64_t{1} << n) - 1;
            CHECK(eval_weighted_union(make_union(n), m) == any);
            CHECK(eval_weighted_union(make_intersection(n), m) == all);
        }
    }
    CHECK_THROWS_AS(make_union(0), Error);
}

TEST_CASE("selection algebra") {
    CHECK(selection_union(S(2, {L({1})}), S(2, {L({2})})) == S(2, {L({1}), L({2})}));
    CHECK(selection_intersection(S(2, {L({1}), L({1, 2})}), S(2, {L({1, 2})})) == S(2, {L({1, 2})}));
    CHECK(selection_complement(S(2, {L({1})}), S(2, {L({}), L({1}), L({1, 2})})) == S(2, {L({}), L({1, 2})}));
    try {
        selection_union(S(2, {}), S(3, {}));
        FAIL("universe mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UniverseMismatch);
    }
    CHECK(S(3, {L({2}), L({}), L({1, 3}), L({1})}).sorted() == std::vector<RegionLabel>{L({}), L({1}), L({1, 3}), L({2})});
}
