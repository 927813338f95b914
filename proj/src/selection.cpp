#include "netgeom/selection.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace netgeom {

std::vector<RegionLabel> Selection::sorted() const {
    std::vector<RegionLabel> out(selected.begin(), selected.end());
    std::sort(out.begin(), out.end(), lexicographic_less);
    return out;
}

std::uint8_t eval_weighted_union(const WeightedUnion& w, const Bits& membership) {
    if (membership.size() != w.weights.size()) {
        throw Error(ErrorKind::DimensionMismatch, "membership has " + std::to_string(membership.size()) +
                                                      " entries, weighted union has " +
                                                      std::to_string(w.weights.size()));
    }
    double t = -w.offset;
    for (std::size_t i = 0; i < membership.size(); ++i)
        if (membership[i]) t += w.weights[i];
    return step(t);
}

NormalizedWeightedUnion normalize(const WeightedUnion& w) {
    if (w.weights.size() > 64) throw Error(ErrorKind::TooLarge, "weighted union has more than 64 inputs");
    NormalizedWeightedUnion nw;
    nw.weights.reserve(w.weights.size());
    nw.adjusted_offset = w.offset;
    nw.polarity.size = w.weights.size();
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
        const double a = w.weights[i];
        if (a < 0.0) {
            nw.weights.push_back(-a);
            nw.adjusted_offset -= a;
            nw.polarity.negative |= std::uint64_t{1} << i;
        } else {
            nw.weights.push_back(a);
        }
    }
    return nw;
}

double sigma(const NormalizedWeightedUnion& nw, RegionLabel J) {
    double s = 0.0;
    for (auto j : J.indices()) {
        if (j >= nw.weights.size())
            throw Error(ErrorKind::InvalidArgument, "label " + J.to_string() + " exceeds the index set");
        s += nw.weights[j];
    }
    return s;
}

RegionLabel repolarize(const Polarity& p, RegionLabel J) { return {J.bits ^ p.negative}; }

std::vector<RegionLabel> sigma_preimage(const NormalizedWeightedUnion& nw) {
    const std::size_t n = nw.weights.size();
    if (n > kMaxWeightedUnionSize) {
        throw Error(ErrorKind::TooLarge, "power-set enumeration limited to " +
                                             std::to_string(kMaxWeightedUnionSize) + " indices, got " +
                                             std::to_string(n));
    }
    std::vector<RegionLabel> out;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        const RegionLabel J{bits};
        if (sigma(nw, J) > nw.adjusted_offset) out.push_back(J);
    }
    return out;
}

Selection selected_indices(const WeightedUnion& w) {
    const auto nw = normalize(w);
    Selection s;
    s.universe_size = w.weights.size();
    for (auto J : sigma_preimage(nw)) s.selected.insert(repolarize(nw.polarity, J));
    return s;
}

WeightedUnion make_complement() { return {{-1.0}, -0.5}; }

WeightedUnion make_union(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "union needs at least one set");
    return {std::vector<double>(n, 1.0), 0.5};
}

WeightedUnion make_intersection(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "intersection needs at least one set");
    return {std::vector<double>(n, 1.0), static_cast<double>(n) - 0.5};
}

namespace {

void require_same_universe(const Selection& s, const Selection& t) {
    if (s.universe_size != t.universe_size) {
        throw Error(ErrorKind::UniverseMismatch, "selections over " + std::to_string(s.universe_size) +
                                                     " and " + std::to_string(t.universe_size) +
                                                     " indices cannot be combined");
    }
}

}  // namespace

Selection selection_union(const Selection& s, const Selection& t) {
    require_same_universe(s, t);
    Selection out = s;
    out.selected.insert(t.selected.begin(), t.selected.end());
    return out;
}

Selection selection_intersection(const Selection& s, const Selection& t) {
    require_same_universe(s, t);
    Selection out{s.universe_size, {}};
    std::set_intersection(s.selected.begin(), s.selected.end(), t.selected.begin(), t.selected.end(),
                          std::inserter(out.selected, out.selected.end()));
    return out;
}

Selection selection_complement(const Selection& s, const Selection& universe) {
    require_same_universe(s, universe);
    Selection out{s.universe_size, {}};
    std::set_difference(universe.selected.begin(), universe.selected.end(), s.selected.begin(),
                        s.selected.end(), std::inserter(out.selected, out.selected.end()));
    return out;
}

}  // namespace netgeom
