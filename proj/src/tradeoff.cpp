#include "regen/tradeoff.hpp"
#include "regen/combinatorics.hpp"
#include "regen/precoded_code.hpp"
#include "regen/repair_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace regen {

std::string to_string(const PointLabel& label) {
    switch (label.kind) {
        case PointLabel::Kind::msmr:
            return "MSMR";
        case PointLabel::Kind::mbcr:
            return "MBCR";
        case PointLabel::Kind::construction1:
            return "construction1(r=" + std::to_string(label.r) + ")";
        case PointLabel::Kind::construction2:
            return "construction2(m=" + std::to_string(label.m) + ",r=" + std::to_string(label.r) + ")";
        case PointLabel::Kind::steiner:
            return "steiner(t=" + std::to_string(label.t) + ",r=" + std::to_string(label.r) + ")";
    }
    return "unknown";
}

namespace {

void require_system(int k, int d, int e) {
    if (!(1 <= e && e < k && k <= d)) {
        throw ParameterError("tradeoff requires 1 <= e < k <= d");
    }
}

}  // namespace

BoundParams make_bound_params(int k, int d, int e) {
    if (e >= k) {
        throw ParameterError("tradeoff degenerates to a single point when e >= k");
    }
    require_system(k, d, e);
    BoundParams b;
    b.k = k;
    b.d = d;
    b.e = e;
    b.q_bound = (k + e - 1) / e - 1;
    b.t_rem = k - b.q_bound * e;
    return b;
}

BoundCheck functional_bound_check(const TradeoffPoint& point, const BoundParams& bound) {
    BoundCheck out;
    out.feasible = true;
    const int q = bound.q_bound;
    for (int p = 0; p < q; ++p) {
        Rational lhs = Rational(bound.t_rem + p * bound.e) * point.alpha_bar;
        for (int i = p; i < q; ++i) {
            lhs += Rational(bound.d - bound.t_rem - i * bound.e) * point.beta_bar;
        }
        out.slack.push_back(lhs - 1);
        if (lhs < 1) {
            out.feasible = false;
        }
    }
    return out;
}

ExtremePoints extreme_points(int k, int d, int e) {
    require_system(k, d, e);
    ExtremePoints out;
    out.msmr = {Rational(1, k), Rational(e, BigInt(k) * (d - k + e)), PointLabel::msmr_point()};
    const BigInt den = BigInt(k) * (2 * d - k + e);
    out.mbcr = {Rational(2 * d + e - 1, den), Rational(2 * e, den), PointLabel::mbcr_point()};
    return out;
}

std::vector<C1Point> achievable_points_c1(int k, int e) {
    require_system(k, k, e);
    const int n = k + e;
    std::vector<C1Point> out;
    for (int r = e + 1; r <= n; ++r) {
        C1Point c;
        c.r = r;
        c.F = binomial(n, r) * (r - e);
        c.alpha = binomial(n - 1, r - 1);
        c.beta = beta_closed_form_d_eq_k(k, e, r);
        c.point.alpha_bar = Rational(r, BigInt(n) * (r - e));
        c.point.beta_bar = Rational(BigInt(r) * (r - 1), BigInt(n) * (n - 1) * (r - e));
        c.point.label = PointLabel::construction1(r);
        out.push_back(std::move(c));
    }
    return out;
}

Rational slope_c1(int r, int k, int e) {
    require_system(k, k, e);
    if (r < e + 1 || r >= k + e) {
        throw ParameterError("slope requires e + 1 <= r < k + e");
    }
    return Rational(-BigInt(r) * (r - 2 * e + 1), BigInt(e) * (k + e - 1));
}

int p_max(int e) {
    if (e < 2) {
        throw ParameterError("p_max requires e >= 2");
    }
    const BigInt radicand = BigInt(8) * e * (e - 1) - 1;
    const BigInt s = isqrt(radicand);
    // floor((sqrt(R) - 1) / 2) == floor((isqrt(R) - 1) / 2) for every R >= 1.
    return floor_div(s - 1, 2).convert_to<int>();
}

BigInt k_th(int e, int p) {
    if (e < 2 || p < 0 || p > p_max(e)) {
        throw ParameterError("k_th requires e >= 2 and 0 <= p <= p_max(e)");
    }
    const BigInt num = BigInt(1 - e) * (binomial(p + 1, 2) + 2 * binomial(e + 1, 2) + BigInt(e) * p);
    const BigInt den = binomial(p + 1, 2) - 2 * binomial(e, 2);
    if (den == 0) {
        throw std::logic_error("k_th denominator vanished");
    }
    return ceil_div(num, den);
}

int p_star(int k, int e) {
    require_system(k, k, e);
    if (e == 1) {
        return 1;
    }
    const BigInt a = BigInt(2) * e * e - e + k - 1;
    const BigInt delta = a * a + BigInt(8) * (k + e - 1) * e * (e - 1) * (k - e - 1);
    const BigInt s = isqrt(delta);
    const BigInt shift = BigInt(e) - k - 2 * BigInt(e) * e + 1;
    const BigInt den = BigInt(2) * (e + k - 1);
    // shift + s <= shift + sqrt(delta) < shift + s + 1, and both sides are
    // integers over a positive integer denominator, so the floors agree.
    const int p = floor_div(shift + s, den).convert_to<int>() + 1;
    if (p < 1 || p > k - e) {
        throw std::logic_error("p* outside [1, k - e]");
    }
    return p;
}

int p_star_thresholds(int k, int e) {
    require_system(k, k, e);
    if (e < 2) {
        throw ParameterError("threshold form requires e >= 2");
    }
    int best = -1;
    for (int p = 0; p <= p_max(e); ++p) {
        if (BigInt(k) >= k_th(e, p)) {
            best = p;
        }
    }
    return best + 1;
}

BigInt n2(int k, int e, int p) {
    return BigInt(k + e - 1) * p * p + BigInt(p) * (2 * BigInt(e) * e + k - e - 1) +
           BigInt(2) * e * (e - 1) * (e + 1 - k);
}

Rational space_sharing_gap(int k, int e, int r) {
    require_system(k, k, e);
    if (r < e + 1 || r >= k + e) {
        throw ParameterError("space-sharing gap requires e + 1 <= r < k + e");
    }
    const auto pts = achievable_points_c1(k, e);
    const TradeoffPoint& at_r = pts[static_cast<std::size_t>(r - e - 1)].point;
    const TradeoffPoint& next = pts[static_cast<std::size_t>(r - e)].point;
    const TradeoffPoint mbcr = extreme_points(k, k, e).mbcr;
    // Line from `next` to MBCR, evaluated at alpha_r.
    const Rational slope = (mbcr.beta_bar - next.beta_bar) / (mbcr.alpha_bar - next.alpha_bar);
    const Rational shared = next.beta_bar + slope * (at_r.alpha_bar - next.alpha_bar);
    return shared - at_r.beta_bar;
}

Region corner_points(int k, int e) {
    require_system(k, k, e);
    Region region;
    region.p_star = p_star(k, e);
    region.corner_points.push_back(extreme_points(k, k, e).mbcr);
    const auto pts = achievable_points_c1(k, e);
    for (const C1Point& c : pts) {
        if (c.r >= 2 * e + region.p_star) {
            region.corner_points.push_back(c.point);
        }
    }
    region.n_corners = k - e + 2 - region.p_star;
    if (region.n_corners != static_cast<int>(region.corner_points.size())) {
        throw std::logic_error("corner count disagrees with k - e + 2 - p*");
    }
    return region;
}

std::vector<TradeoffPoint> hull_oracle(const std::vector<TradeoffPoint>& points) {
    std::vector<TradeoffPoint> front;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const TradeoffPoint& p = points[i];
        bool drop = false;
        for (std::size_t j = 0; j < points.size() && !drop; ++j) {
            if (i == j) {
                continue;
            }
            const TradeoffPoint& q = points[j];
            if (q.same_coordinates(p)) {
                drop = j < i;  // keep the first copy
            } else {
                drop = q.alpha_bar <= p.alpha_bar && q.beta_bar <= p.beta_bar;
            }
        }
        if (!drop) {
            front.push_back(p);
        }
    }
    std::sort(front.begin(), front.end(),
              [](const TradeoffPoint& a, const TradeoffPoint& b) { return a.alpha_bar < b.alpha_bar; });
    // On the Pareto front beta_bar strictly decreases as alpha_bar grows; the
    // lower hull keeps only strict left turns.
    auto cross = [](const TradeoffPoint& o, const TradeoffPoint& a, const TradeoffPoint& b) {
        return (a.alpha_bar - o.alpha_bar) * (b.beta_bar - o.beta_bar) -
               (a.beta_bar - o.beta_bar) * (b.alpha_bar - o.alpha_bar);
    };
    std::vector<TradeoffPoint> hull;
    for (const TradeoffPoint& p : front) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    std::reverse(hull.begin(), hull.end());
    return hull;
}

std::vector<GeneralPoint> achievable_points_general(int n, int k, int d, int e, std::optional<int> m_only) {
    if (!(1 <= e && e < k && k <= d && d <= n - e)) {
        throw ParameterError("general points require 1 <= e < k <= d <= n - e");
    }
    if (n - k < e) {
        throw ParameterError("general points require e <= n - k");
    }
    int m_lo = e;
    int m_hi = n - k;
    if (m_only) {
        if (*m_only < e || *m_only > n - k) {
            throw ParameterError("m must satisfy e <= m <= n - k");
        }
        m_lo = m_hi = *m_only;
    }
    std::vector<GeneralPoint> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (m + d + e <= n) {
            if (m_only) {
                throw ParameterError("no bandwidth value when m + d + e <= n");
            }
            continue;
        }
        for (int r = m + 1; r <= n; ++r) {
            GeneralPoint g;
            g.m = m;
            g.r = r;
            g.F = rho(n, k, m, r);
            g.alpha = binomial(n - 1, r - 1);
            g.group_local_repair = d >= n - m;
            g.beta = g.group_local_repair ? beta_formula(n, e, m, r, d) : beta_formula_unrestricted(n, e, m, r, d);
            g.point.alpha_bar = Rational(g.alpha, g.F);
            g.point.beta_bar = g.beta / Rational(g.F);
            g.point.label = PointLabel::construction2(m, r);
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace regen
