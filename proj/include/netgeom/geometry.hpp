/**
 * Polarized hyperplane arrangements: side tests, region enumeration with
 * witness points, the intersection poset and its cover relation, general
 * position and the maximal region count.
 *
 * Hyperplanes are indexed 0..k-1 in code. Text and JSON output render them
 * 1-based.
 */

#ifndef NETGEOM_GEOMETRY_HPP
#define NETGEOM_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netgeom/error.hpp"

namespace netgeom {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultEpsilon = 1e-7;
inline constexpr double kDefaultBox = 1e6;
inline constexpr std::size_t kMaxHyperplanes = 63;

/// Oriented affine hyperplane { x : normal . x + offset = 0 }. The positive
/// side is where normal . x + offset > 0.
class Hyperplane {
public:
    Hyperplane(Eigen::VectorXd normal, double offset, double tol = kDefaultTol);

    const Eigen::VectorXd& normal() const { return normal_; }
    double offset() const { return offset_; }
    Eigen::Index dimension() const { return normal_.size(); }

    /// Signed Euclidean distance of x from the plane (positive on the positive side).
    double signed_distance(const Eigen::VectorXd& x) const;

private:
    Eigen::VectorXd normal_;
    double offset_;
    double norm_;
};

class Arrangement {
public:
    explicit Arrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes = {});

    Eigen::Index dimension() const { return dimension_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

private:
    Eigen::Index dimension_;
    std::vector<Hyperplane> hyperplanes_;
};

/// Subset J of hyperplane indices, stored as a bitmask (bit i = index i).
struct RegionLabel {
    std::uint64_t bits = 0;

    static RegionLabel from_indices(const std::vector<std::size_t>& zero_based);

    bool contains(std::size_t i) const { return (bits >> i) & 1U; }
    RegionLabel with(std::size_t i) const { return {bits | (std::uint64_t{1} << i)}; }
    bool subset_of(RegionLabel other) const { return (bits & ~other.bits) == 0; }
    int cardinality() const;
    /// Sorted 0-based member indices.
    std::vector<std::size_t> indices() const;
    /// "{1,3}" style, 1-based.
    std::string to_string() const;

    friend auto operator<=>(const RegionLabel&, const RegionLabel&) = default;
};

/// Orders labels by their sorted 1-based index lists, lexicographically.
bool lexicographic_less(RegionLabel a, RegionLabel b);

struct Region {
    RegionLabel label;
    Eigen::VectorXd witness;
};

enum class Side { Positive, Negative, Boundary };

struct EnumerationOptions {
    double tol = kDefaultTol;
    double epsilon = kDefaultEpsilon;  // minimal witness distance to every plane
    double box = kDefaultBox;          // witnesses satisfy |x_c| <= box
};

struct IntersectionPoset {
    std::size_t universe = 0;  // k
    std::vector<RegionLabel> elements;  // sorted by (cardinality, lexicographic)

    bool contains(RegionLabel x) const;
};

struct CoverPair {
    RegionLabel lower;
    RegionLabel upper;

    friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

/// Side of x relative to h, using signed distance against tol.
Side side(const Hyperplane& h, const Eigen::VectorXd& x, double tol = kDefaultTol);

/// Label of the region containing x. Throws BoundaryPoint (with the plane
/// index) if x lies within tol of some hyperplane.
RegionLabel region_signature(const Arrangement& A, const Eigen::VectorXd& x, double tol = kDefaultTol);

/**
 * All nonempty regions meeting the box [-box, box]^n, each with a witness at
 * distance >= epsilon from every hyperplane. Regions are built by inserting
 * hyperplanes one at a time and testing both sign extensions of each current
 * region with a max-margin linear program. Output is sorted by
 * lexicographic_less on labels.
 */
std::vector<Region> enumerate_regions(const Arrangement& A, const EnumerationOptions& opts = {});

/// 1 + k + C(k,2) + ... + C(k,n). Throws TooLarge on 64-bit overflow.
std::uint64_t max_region_count(std::size_t k, std::size_t n);

bool is_general_position(const Arrangement& A, double tol = kDefaultTol);

/// Whether the planes indexed by `subset` share a common point.
bool intersection_nonempty(const Arrangement& A, RegionLabel subset, double tol = kDefaultTol);

IntersectionPoset intersection_poset(const Arrangement& A, double tol = kDefaultTol);

/// Cover relation of the element set under inclusion. Sorted by (lower, upper)
/// in element order.
std::vector<CoverPair> hasse_edges(const IntersectionPoset& P);

}  // namespace netgeom

#endif
