#include "regen/repair_analysis.hpp"
#include "regen/combinatorics.hpp"

#include <algorithm>

namespace regen {

std::string to_string(Accounting a) {
    switch (a) {
        case Accounting::naive:
            return "naive";
        case Accounting::msmr:
            return "msmr";
        case Accounting::layered_naive:
            return "layered-naive";
    }
    return "unknown";
}

bool BandwidthReport::symmetric() const {
    if (per_helper.empty()) {
        return true;
    }
    const Rational& first = per_helper.begin()->second;
    return std::all_of(per_helper.begin(), per_helper.end(), [&](const auto& kv) { return kv.second == first; });
}

Rational BandwidthReport::max_per_helper() const {
    Rational best = 0;
    for (const auto& [id, v] : per_helper) {
        best = std::max(best, v);
    }
    return best;
}

const BandwidthReport& BandwidthAccounting::get(Accounting a) const {
    switch (a) {
        case Accounting::naive:
            return naive;
        case Accounting::msmr:
            return msmr;
        case Accounting::layered_naive:
            return layered_naive;
    }
    throw ParameterError("unknown accounting");
}

namespace {

Rational eq7_sum(int n, int e, int m, int r, int d) {
    Rational total = 0;
    for (int s = 1; s <= e; ++s) {
        const int p_lo = std::max(s, r - d);
        const int p_hi = std::min(n - d - e + s, r - 1);
        Rational inner = 0;
        for (int p = p_lo; p <= p_hi; ++p) {
            const BigInt ways = binomial(d - 1, r - p - 1) * binomial(n - d - e, p - s);
            if (ways == 0) {
                continue;
            }
            inner += Rational(ways * s, BigInt(m - p + s));
        }
        total += Rational(binomial(e, s)) * inner;
    }
    return total;
}

void check_common(int n, int e, int m, int r, int d) {
    if (!(1 <= e && e <= m && m < r && r <= n)) {
        throw ParameterError("beta requires 1 <= e <= m < r <= n");
    }
    if (d < 1 || d > n - e) {
        throw ParameterError("beta requires 1 <= d <= n - e");
    }
}

}  // namespace

Rational beta_formula(int n, int e, int m, int r, int d) {
    check_common(n, e, m, r, d);
    if (d < n - m) {
        throw ParameterError("beta requires n - m <= d");
    }
    return eq7_sum(n, e, m, r, d);
}

Rational beta_formula_unrestricted(int n, int e, int m, int r, int d) {
    check_common(n, e, m, r, d);
    if (m + d + e <= n) {
        throw ParameterError("beta sum has a non-positive denominator (needs m + d + e > n)");
    }
    return eq7_sum(n, e, m, r, d);
}

BigInt beta_closed_form_d_eq_k(int k, int e, int r) {
    if (k < 1 || e < 1 || r < e + 1 || r > k + e) {
        throw ParameterError("closed form requires k >= 1, e >= 1, e + 1 <= r <= k + e");
    }
    return binomial(k + e - 2, r - 2);
}

SteinerE2Point beta_steiner_e2(int n, int r, int t) {
    if (!(2 <= t && t <= r && r <= n && r >= 3)) {
        throw ParameterError("e = 2 Steiner point requires 2 <= t <= r <= n and r >= 3");
    }
    const DesignStats stats = design_stats(n, r, t);
    SteinerE2Point out;
    out.F = stats.num_blocks * (r - 2);
    out.alpha = stats.alpha_sym;
    out.beta = stats.lambda2;
    out.alpha_bar = Rational(out.alpha, out.F);
    out.beta_bar = Rational(out.beta, out.F);
    return out;
}

BandwidthAccounting beta_oracle(const BlockDesign& design, int m, const std::set<int>& failed,
                                const std::set<int>& helpers) {
    const int n = design.n();
    const int r = design.r();
    const int dim = r - m;
    if (m < 0 || dim < 1) {
        throw ParameterError("oracle requires 0 <= m < r");
    }
    for (int x : failed) {
        if (x < 1 || x > n) {
            throw ParameterError("failed node " + std::to_string(x) + " outside [1, n]");
        }
        if (helpers.count(x) != 0) {
            throw ParameterError("node " + std::to_string(x) + " is both failed and helper");
        }
    }
    for (int x : helpers) {
        if (x < 1 || x > n) {
            throw ParameterError("helper " + std::to_string(x) + " outside [1, n]");
        }
    }

    BandwidthAccounting acc;
    acc.naive.accounting = Accounting::naive;
    acc.msmr.accounting = Accounting::msmr;
    acc.layered_naive.accounting = Accounting::layered_naive;
    for (int h : helpers) {
        acc.naive.per_helper[h] = 0;
        acc.msmr.per_helper[h] = 0;
        acc.layered_naive.per_helper[h] = 0;
    }

    for (std::size_t j = 0; j < design.size(); ++j) {
        const Block& block = design.block(j);
        int s = 0;
        std::vector<int> group_helpers;
        for (int x : block) {
            if (failed.count(x) != 0) {
                ++s;
            } else if (helpers.count(x) != 0) {
                group_helpers.push_back(x);
            }
        }
        if (s == 0) {
            continue;
        }
        const int h = static_cast<int>(group_helpers.size());
        if (h < dim) {
            throw ParameterError("block " + std::to_string(j + 1) + " has " + std::to_string(h) +
                                 " helpers, fewer than r - m = " + std::to_string(dim));
        }
        std::sort(group_helpers.begin(), group_helpers.end());
        const Rational share(s, h - dim + s);
        for (int x : group_helpers) {
            acc.msmr.per_helper[x] += share;
        }
        for (int i = 0; i < dim; ++i) {
            acc.naive.per_helper[group_helpers[static_cast<std::size_t>(i)]] += 1;
            acc.layered_naive.per_helper[group_helpers[static_cast<std::size_t>(i)]] += s;
        }
    }
    for (BandwidthReport* rep : {&acc.naive, &acc.msmr, &acc.layered_naive}) {
        for (const auto& [id, v] : rep->per_helper) {
            rep->total += v;
        }
    }
    return acc;
}

BandwidthAccounting beta_oracle(const BlockDesign& design, int m, int e, int d, const std::set<int>& failed,
                                const std::set<int>& helpers) {
    if (static_cast<int>(failed.size()) != e) {
        throw ParameterError("expected " + std::to_string(e) + " failed nodes");
    }
    if (static_cast<int>(helpers.size()) != d) {
        throw ParameterError("expected " + std::to_string(d) + " helpers");
    }
    if (e > 0 && d < design.n() - m) {
        throw ParameterError("oracle requires d >= n - m");
    }
    return beta_oracle(design, m, failed, helpers);
}

}  // namespace regen
