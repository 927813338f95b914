/**
 * Weighted unions over an indexed family of sets {U_i}, i in I, and
 * selections of the regions U_J they generate.
 *
 * A weighted union with weights a_i and offset b is the set of points x with
 * sum_i a_i [x in U_i] - b > 0. Membership of x in the family is a bit per
 * index; a label J (bitmask) names the region where exactly the indices in J
 * are members.
 */

#ifndef NETGEOM_SELECTION_HPP
#define NETGEOM_SELECTION_HPP

#include <set>
#include <vector>

#include "netgeom/geometry.hpp"
#include "netgeom/network.hpp"

namespace netgeom {

inline constexpr std::size_t kMaxWeightedUnionSize = 20;

struct WeightedUnion {
    std::vector<double> weights;
    double offset = 0.0;
};

/// Bit i set means index i has negative polarity.
struct Polarity {
    std::size_t size = 0;
    std::uint64_t negative = 0;

    bool is_negative(std::size_t i) const { return (negative >> i) & 1U; }
};

struct NormalizedWeightedUnion {
    std::vector<double> weights;  // all >= 0
    double adjusted_offset = 0.0;
    Polarity polarity;
};

/// A set of region labels over a universe of `universe_size` indices.
struct Selection {
    std::size_t universe_size = 0;
    std::set<RegionLabel> selected;

    bool contains(RegionLabel J) const { return selected.count(J) != 0; }
    std::size_t size() const { return selected.size(); }
    /// Labels ordered by lexicographic_less.
    std::vector<RegionLabel> sorted() const;

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// 1 iff sum a_i m_i - b > 0. Throws DimensionMismatch on length mismatch.
std::uint8_t eval_weighted_union(const WeightedUnion& w, const Bits& membership);

/// Flips negative weights onto complemented sets: weights become |a_i|, the
/// offset becomes b - sum_{a_i < 0} a_i and polarity(i) = - iff a_i < 0.
NormalizedWeightedUnion normalize(const WeightedUnion& w);

/// Sum of normalized weights over J.
double sigma(const NormalizedWeightedUnion& nw, RegionLabel J);

/// Flips membership of every index with negative polarity.
RegionLabel repolarize(const Polarity& p, RegionLabel J);

/// Labels J (standard indexing) of the regions making up the weighted union:
/// r_p({ J' : sigma(J') > adjusted_offset }). Throws TooLarge for |I| > 20.
Selection selected_indices(const WeightedUnion& w);

/// The labels { J' : sigma(J') > adjusted_offset } before repolarization.
std::vector<RegionLabel> sigma_preimage(const NormalizedWeightedUnion& nw);

WeightedUnion make_complement();
WeightedUnion make_union(std::size_t n);
WeightedUnion make_intersection(std::size_t n);

Selection selection_union(const Selection& s, const Selection& t);
Selection selection_intersection(const Selection& s, const Selection& t);
/// Labels of `universe` not in s.
Selection selection_complement(const Selection& s, const Selection& universe);

}  // namespace netgeom

#endif
