#pragma once

// Normalized storage/bandwidth tradeoff for centralized multi-node repair:
// the functional-repair converse, the MSMR and MBCR extreme points, the
// points reached by layered codes, and the corner points of the region
// obtained by space-sharing among them.

#include "regen/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regen {

struct PointLabel {
    enum class Kind { msmr, mbcr, construction1, construction2, steiner };
    Kind kind = Kind::construction1;
    int r = 0;
    int m = 0;
    int t = 0;

    static PointLabel msmr_point() { return {Kind::msmr, 0, 0, 0}; }
    static PointLabel mbcr_point() { return {Kind::mbcr, 0, 0, 0}; }
    static PointLabel construction1(int r) { return {Kind::construction1, r, 0, 0}; }
    static PointLabel construction2(int m, int r) { return {Kind::construction2, r, m, 0}; }
    static PointLabel steiner(int t, int r) { return {Kind::steiner, r, 0, t}; }

    friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

std::string to_string(const PointLabel& label);

struct TradeoffPoint {
    Rational alpha_bar;
    Rational beta_bar;
    PointLabel label;

    bool same_coordinates(const TradeoffPoint& o) const {
        return alpha_bar == o.alpha_bar && beta_bar == o.beta_bar;
    }
};

struct BoundParams {
    int k = 0;
    int d = 0;
    int e = 0;
    int q_bound = 0;  // ceil(k / e) - 1
    int t_rem = 0;    // k - q_bound * e, in [1, e]
};

/// Requires 1 <= e < k <= d.
BoundParams make_bound_params(int k, int d, int e);

struct BoundCheck {
    bool feasible = false;
    std::vector<Rational> slack;  // LHS - 1 of the p-th linear inequality, p = 0 .. q_bound - 1
};

/// Evaluates (t_rem + p e) a + sum_{i=p}^{q-1} (d - t_rem - i e) b >= 1 for every p.
BoundCheck functional_bound_check(const TradeoffPoint& point, const BoundParams& bound);

struct ExtremePoints {
    TradeoffPoint msmr;
    TradeoffPoint mbcr;
};

/// Requires 1 <= e < k <= d.
ExtremePoints extreme_points(int k, int d, int e);

struct C1Point {
    int r = 0;
    BigInt F;
    BigInt alpha;
    BigInt beta;
    TradeoffPoint point;
};

/// Layered-code points of the (k+e, k, k, e) system for r = e+1 .. k+e.
std::vector<C1Point> achievable_points_c1(int k, int e);

/// Slope between the points r and r+1, -r (r - 2e + 1) / (e (k + e - 1)),
/// for e+1 <= r < k+e.
Rational slope_c1(int r, int k, int e);

/// Largest p with p (p + 1) < 2 e (e - 1), via integer square root. Requires e >= 2.
int p_max(int e);

/// Smallest k at or beyond which the point r = 2e + p is removed by
/// space-sharing with MBCR. Requires e >= 2 and 0 <= p <= p_max(e).
BigInt k_th(int e, int p);

/// Index of the first surviving point r = 2e + p*, from the quadratic root.
/// e = 1 gives 1. Requires 1 <= e < k.
int p_star(int k, int e);

/// The same index from the threshold characterization,
/// 1 + max{p <= p_max : k >= k_th(p)}. Requires 2 <= e < k.
int p_star_thresholds(int k, int e);

/// N2(p) = (k+e-1) p^2 + p (2e^2 + k - e - 1) + 2e (e - 1)(e + 1 - k): the sign
/// of the gap between the space-shared point and point r = 2e + p.
BigInt n2(int k, int e, int p);

/// beta'_r - beta_r: bandwidth of the MBCR / point r+1 space-sharing at the
/// storage of point r, minus point r's bandwidth. Positive iff point r
/// survives that space-sharing. Requires e+1 <= r < k+e.
Rational space_sharing_gap(int k, int e, int r);

struct Region {
    std::vector<TradeoffPoint> corner_points;  // decreasing alpha_bar, MBCR first
    int p_star = 0;
    int n_corners = 0;
};

/// Closed-form corners: MBCR plus r = 2e + p for p* <= p <= k - e.
Region corner_points(int k, int e);

/// Lower-left convex hull under exact arithmetic. Returns the corner points
/// in decreasing alpha_bar. Points dominated in both coordinates, duplicates
/// and points lying exactly on a hull segment are dropped.
std::vector<TradeoffPoint> hull_oracle(const std::vector<TradeoffPoint>& points);

struct GeneralPoint {
    int m = 0;
    int r = 0;
    BigInt F;      // rho(n, k, m, r)
    BigInt alpha;  // N r / n
    Rational beta;
    bool group_local_repair = true;  // false when d < n - m
    TradeoffPoint point;
};

/// Points of the precoded construction for e <= m <= n - k, m + 1 <= r <= n.
/// When m_only is set only that m is swept. Beta is the per-helper sum,
/// evaluated literally when d < n - m (see beta_formula_unrestricted). Values
/// of m with m + d + e <= n have no defined bandwidth and are skipped, or
/// rejected when requested through m_only.
std::vector<GeneralPoint> achievable_points_general(int n, int k, int d, int e, std::optional<int> m_only = {});

}  // namespace regen
