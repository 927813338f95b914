#include "netgeom/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "netgeom/lp.hpp"

namespace netgeom {

// ----------------------------------------------------------------------------
// Hyperplane / Arrangement
// ----------------------------------------------------------------------------

Hyperplane::Hyperplane(Eigen::VectorXd normal, double offset, double tol)
    : normal_(std::move(normal)), offset_(offset), norm_(normal_.norm()) {
    if (normal_.size() == 0)
        throw Error(ErrorKind::DegenerateHyperplane, "hyperplane normal has dimension 0");
    if (!normal_.allFinite() || !std::isfinite(offset_))
        throw Error(ErrorKind::NonFinite, "hyperplane coefficients must be finite");
    if (!(norm_ > tol))
        throw Error(ErrorKind::DegenerateHyperplane, "hyperplane normal is the zero vector");
}

double Hyperplane::signed_distance(const Eigen::VectorXd& x) const {
    if (x.size() != normal_.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "point has dimension " + std::to_string(x.size()) + ", hyperplane has dimension " +
                        std::to_string(normal_.size()));
    }
    return (normal_.dot(x) + offset_) / norm_;
}

Arrangement::Arrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes)
    : dimension_(dimension), hyperplanes_(std::move(hyperplanes)) {
    if (dimension_ < 1) throw Error(ErrorKind::InvalidArgument, "arrangement dimension must be positive");
    if (hyperplanes_.size() > kMaxHyperplanes) {
        throw Error(ErrorKind::TooManyHyperplanes,
                    "arrangement has " + std::to_string(hyperplanes_.size()) + " hyperplanes; at most " +
                        std::to_string(kMaxHyperplanes) + " are supported");
    }
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        if (hyperplanes_[i].dimension() != dimension_) {
            throw Error(ErrorKind::DimensionMismatch,
                        "hyperplane " + std::to_string(i + 1) + " has dimension " +
                            std::to_string(hyperplanes_[i].dimension()) + ", expected " +
                            std::to_string(dimension_),
                        i);
        }
    }
}

// ----------------------------------------------------------------------------
// Labels
// ----------------------------------------------------------------------------

RegionLabel RegionLabel::from_indices(const std::vector<std::size_t>& zero_based) {
    RegionLabel l;
    for (auto i : zero_based) {
        if (i >= 64) throw Error(ErrorKind::TooManyHyperplanes, "label index out of range");
        l = l.with(i);
    }
    return l;
}

int RegionLabel::cardinality() const { return std::popcount(bits); }

std::vector<std::size_t> RegionLabel::indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string RegionLabel::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto i : indices()) {
        if (!first) os << ',';
        os << i + 1;
        first = false;
    }
    os << '}';
    return os.str();
}

bool lexicographic_less(RegionLabel a, RegionLabel b) {
    // The first differing index decides; a set that runs out first is smaller.
    std::uint64_t x = a.bits, y = b.bits;
    while (x != 0 && y != 0) {
        const int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

bool IntersectionPoset::contains(RegionLabel x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
}

// ----------------------------------------------------------------------------
// Side tests
// ----------------------------------------------------------------------------

Side side(const Hyperplane& h, const Eigen::VectorXd& x, double tol) {
    const double d = h.signed_distance(x);
    if (d > tol) return Side::Positive;
    if (d < -tol) return Side::Negative;
    return Side::Boundary;
}

RegionLabel region_signature(const Arrangement& A, const Eigen::VectorXd& x, double tol) {
    if (x.size() != A.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "point has dimension " + std::to_string(x.size()) +
                                                      ", arrangement has dimension " +
                                                      std::to_string(A.dimension()));
    }
    RegionLabel label;
    for (std::size_t i = 0; i < A.size(); ++i) {
        switch (side(A[i], x, tol)) {
        case Side::Positive: label = label.with(i); break;
        case Side::Negative: break;
        case Side::Boundary:
            throw Error(ErrorKind::BoundaryPoint, "point lies on hyperplane " + std::to_string(i + 1), i);
        }
    }
    return label;
}

// ----------------------------------------------------------------------------
// Region enumeration
// ----------------------------------------------------------------------------

namespace {

// Smallest signed distance sigma_j * d_j(x) over the first `count` planes.
double label_margin(const Arrangement& A, std::size_t count, RegionLabel label, const Eigen::VectorXd& x) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < count; ++j) {
        const double d = A[j].signed_distance(x);
        m = std::min(m, label.contains(j) ? d : -d);
    }
    return m;
}

// Rows  -sigma_j u_j . y  <= sigma_j (c_j - box * sum(u_j)) - extra_j  for the
// shifted variable y = x + box, where u_j, c_j are the unit-normalized plane.
void fill_side_rows(const Arrangement& A, std::size_t count, RegionLabel label, double box,
                    Eigen::MatrixXd& M, Eigen::VectorXd& rhs) {
    for (std::size_t j = 0; j < count; ++j) {
        const auto& h = A[j];
        const double norm = h.normal().norm();
        const Eigen::VectorXd u = h.normal() / norm;
        const double c = h.offset() / norm;
        const double sigma = label.contains(j) ? 1.0 : -1.0;
        const auto row = static_cast<Eigen::Index>(j);
        M.row(row).head(A.dimension()) = -sigma * u.transpose();
        rhs(row) = sigma * (c - box * u.sum());
    }
}

struct Witness {
    Eigen::VectorXd point;
    double best_margin;
};

// Stage one maximizes the margin m (capped at 1). Stage two recentres the
// witness by minimizing |x|_1 subject to a margin comfortably above epsilon.
std::optional<Witness> find_witness(const Arrangement& A, std::size_t count, RegionLabel label,
                                    const EnumerationOptions& opts) {
    const Eigen::Index n = A.dimension();
    const auto k = static_cast<Eigen::Index>(count);
    const double box = opts.box;
    constexpr double kMarginCap = 1.0;

    // Stage one: variables [y (n), m].
    Eigen::MatrixXd M1 = Eigen::MatrixXd::Zero(k + n + 1, n + 1);
    Eigen::VectorXd r1 = Eigen::VectorXd::Zero(k + n + 1);
    fill_side_rows(A, count, label, box, M1, r1);
    M1.col(n).head(k).setOnes();
    for (Eigen::Index c = 0; c < n; ++c) {
        M1(k + c, c) = 1.0;
        r1(k + c) = 2.0 * box;
    }
    M1(k + n, n) = 1.0;
    r1(k + n) = kMarginCap;
    Eigen::VectorXd obj1 = Eigen::VectorXd::Zero(n + 1);
    obj1(n) = 1.0;

    const auto s1 = lp::maximize(obj1, M1, r1);
    if (s1.status == lp::Status::Infeasible) return std::nullopt;
    if (s1.status != lp::Status::Optimal) {
        throw Error(ErrorKind::IllConditioned,
                    "margin program for region " + label.to_string() + " did not converge");
    }
    const double mstar = s1.objective;
    if (mstar < opts.epsilon) return std::nullopt;

    const Eigen::VectorXd x1 = s1.solution.head(n).array() - box;
    const double target = std::min(kMarginCap, std::max(mstar / 2.0, std::min(mstar, 2.0 * opts.epsilon)));

    // Stage two: variables [y (n), w (n)], w_c >= |x_c|.
    Eigen::MatrixXd M2 = Eigen::MatrixXd::Zero(k + 3 * n, 2 * n);
    Eigen::VectorXd r2 = Eigen::VectorXd::Zero(k + 3 * n);
    fill_side_rows(A, count, label, box, M2, r2);
    r2.head(k).array() -= target;
    for (Eigen::Index c = 0; c < n; ++c) {
        M2(k + c, c) = 1.0;
        r2(k + c) = 2.0 * box;
        M2(k + n + c, c) = 1.0;
        M2(k + n + c, n + c) = -1.0;
        r2(k + n + c) = box;
        M2(k + 2 * n + c, c) = -1.0;
        M2(k + 2 * n + c, n + c) = -1.0;
        r2(k + 2 * n + c) = -box;
    }
    Eigen::VectorXd obj2 = Eigen::VectorXd::Zero(2 * n);
    obj2.tail(n).setConstant(-1.0);

    const auto s2 = lp::maximize(obj2, M2, r2);
    if (s2.status == lp::Status::Optimal) {
        Eigen::VectorXd x2 = s2.solution.head(n).array() - box;
        if (label_margin(A, count, label, x2) >= opts.epsilon) return Witness{std::move(x2), mstar};
    }
    if (label_margin(A, count, label, x1) >= opts.epsilon) return Witness{x1, mstar};

    // A margin this close to epsilon cannot be certified in double precision.
    if (mstar < opts.epsilon * (1.0 + 1e-6)) return std::nullopt;
    throw Error(ErrorKind::IllConditioned,
                "no witness with margin " + std::to_string(opts.epsilon) + " found for region " +
                    label.to_string() + " (optimal margin " + std::to_string(mstar) + ")");
}

}  // namespace

std::vector<Region> enumerate_regions(const Arrangement& A, const EnumerationOptions& opts) {
    if (!(opts.box > 0.0)) throw Error(ErrorKind::InvalidArgument, "box must be positive");
    if (!(opts.epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");

    std::vector<Region> regions{Region{RegionLabel{}, Eigen::VectorXd::Zero(A.dimension())}};
    for (std::size_t i = 0; i < A.size(); ++i) {
        std::vector<Region> next;
        next.reserve(2 * regions.size());
        for (const auto& r : regions) {
            for (RegionLabel ext : {r.label, r.label.with(i)}) {
                if (auto w = find_witness(A, i + 1, ext, opts)) next.push_back(Region{ext, std::move(w->point)});
            }
        }
        regions = std::move(next);
    }
    std::sort(regions.begin(), regions.end(),
              [](const Region& a, const Region& b) { return lexicographic_less(a.label, b.label); });
    return regions;
}

std::uint64_t max_region_count(std::size_t k, std::size_t n) {
    // Row k of Pascal's triangle, truncated at column n.
    const std::size_t cols = std::min(k, n) + 1;
    std::vector<std::uint64_t> row(cols, 0);
    row[0] = 1;
    for (std::size_t r = 1; r <= k; ++r) {
        for (std::size_t c = std::min(r, cols - 1); c >= 1; --c) {
            if (__builtin_add_overflow(row[c], row[c - 1], &row[c]))
                throw Error(ErrorKind::TooLarge, "region count overflows 64 bits");
        }
    }
    std::uint64_t total = 0;
    for (auto v : row)
        if (__builtin_add_overflow(total, v, &total))
            throw Error(ErrorKind::TooLarge, "region count overflows 64 bits");
    return total;
}

// ----------------------------------------------------------------------------
// Intersections
// ----------------------------------------------------------------------------

namespace {

void unit_system(const Arrangement& A, RegionLabel subset, Eigen::MatrixXd& M, Eigen::VectorXd& rhs) {
    const auto idx = subset.indices();
    M.resize(static_cast<Eigen::Index>(idx.size()), A.dimension());
    rhs.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const auto& h = A[idx[r]];
        const double norm = h.normal().norm();
        M.row(static_cast<Eigen::Index>(r)) = h.normal().transpose() / norm;
        rhs(static_cast<Eigen::Index>(r)) = -h.offset() / norm;
    }
}

void check_subset(const Arrangement& A, RegionLabel subset) {
    if (A.size() < 64 && (subset.bits >> A.size()) != 0)
        throw Error(ErrorKind::InvalidArgument, "subset " + subset.to_string() + " exceeds the arrangement");
}

// Calls f on every subset of {0..k-1} with exactly p members.
void for_each_combination(std::size_t k, std::size_t p, const std::function<void(RegionLabel)>& f) {
    std::vector<std::size_t> idx(p);
    for (std::size_t i = 0; i < p; ++i) idx[i] = i;
    if (p > k) return;
    while (true) {
        f(RegionLabel::from_indices(idx));
        std::size_t i = p;
        while (i > 0 && idx[i - 1] == k - p + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool intersection_nonempty(const Arrangement& A, RegionLabel subset, double tol) {
    check_subset(A, subset);
    if (subset.bits == 0) return true;
    Eigen::MatrixXd M;
    Eigen::VectorXd rhs;
    unit_system(A, subset, M, rhs);
    const Eigen::VectorXd p = M.completeOrthogonalDecomposition().solve(rhs);
    return (M * p - rhs).norm() < tol;
}

bool is_general_position(const Arrangement& A, double tol) {
    const std::size_t k = A.size();
    const auto n = static_cast<std::size_t>(A.dimension());
    bool ok = true;
    for (std::size_t p = 1; p <= std::min(k, n) && ok; ++p) {
        for_each_combination(k, p, [&](RegionLabel s) {
            if (!ok) return;
            Eigen::MatrixXd M;
            Eigen::VectorXd rhs;
            unit_system(A, s, M, rhs);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
            if (svd.singularValues().minCoeff() <= tol) ok = false;
        });
    }
    if (ok && k > n) {
        for_each_combination(k, n + 1, [&](RegionLabel s) {
            if (ok && intersection_nonempty(A, s, tol)) ok = false;
        });
    }
    return ok;
}

IntersectionPoset intersection_poset(const Arrangement& A, double tol) {
    IntersectionPoset P;
    P.universe = A.size();
    // Feasible subsets are closed under taking subsets, so growing feasible
    // sets by larger indices reaches every feasible subset exactly once.
    std::function<void(RegionLabel, std::size_t)> grow = [&](RegionLabel x, std::size_t from) {
        P.elements.push_back(x);
        for (std::size_t i = from; i < A.size(); ++i) {
            const RegionLabel y = x.with(i);
            if (intersection_nonempty(A, y, tol)) grow(y, i + 1);
        }
    };
    grow(RegionLabel{}, 0);
    std::sort(P.elements.begin(), P.elements.end(), [](RegionLabel a, RegionLabel b) {
        if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
        return lexicographic_less(a, b);
    });
    return P;
}

std::vector<CoverPair> hasse_edges(const IntersectionPoset& P) {
    const auto& e = P.elements;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t y = 0; y < e.size(); ++y) {
        std::vector<std::size_t> below;
        for (std::size_t x = 0; x < e.size(); ++x)
            if (e[x] != e[y] && e[x].subset_of(e[y])) below.push_back(x);
        for (auto x : below) {
            const bool covered = std::none_of(below.begin(), below.end(), [&](std::size_t z) {
                return e[z] != e[x] && e[x].subset_of(e[z]);
            });
            if (covered) edges.emplace_back(x, y);
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<CoverPair> out;
    out.reserve(edges.size());
    for (auto [x, y] : edges) out.push_back({e[x], e[y]});
    return out;
}

}  // namespace netgeom
