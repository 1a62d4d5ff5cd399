#pragma once

// Repair-bandwidth accounting for layered codes: the closed-form per-helper
// download for t = r designs, its d = k binomial collapse, the e = 2 Steiner
// case, and a direct enumeration over repair groups that checks them.

#include "regen/design.hpp"
#include "regen/rational.hpp"

#include <map>
#include <set>
#include <string>

namespace regen {

enum class Accounting {
    naive,          // r - m whole symbols per affected group
    msmr,           // s / (h - (r - m) + s) from each of the h group helpers
    layered_naive,  // r - m whole symbols per missing symbol, no sharing
};

std::string to_string(Accounting a);

struct BandwidthReport {
    Accounting accounting = Accounting::msmr;
    std::map<int, Rational> per_helper;  // every helper appears, possibly with 0
    Rational total = 0;

    /// Common per-helper value, if all helpers contribute the same amount.
    bool symmetric() const;
    Rational max_per_helper() const;
};

struct BandwidthAccounting {
    BandwidthReport naive;
    BandwidthReport msmr;
    BandwidthReport layered_naive;

    const BandwidthReport& get(Accounting a) const;
};

class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Per-helper download when repairing e of n nodes with d helpers, for the
/// t = r layered code with inner dimension r - m. Requires
/// 1 <= e <= m < r <= n and n - m <= d <= n - e.
Rational beta_formula(int n, int e, int m, int r, int d);

/// The same double sum evaluated without the helper-count range check, for
/// sweeps where d < n - m. Only requires every denominator to be positive
/// (m + d + e > n). Groups may then hold fewer than r - m helpers, so the
/// value is not backed by a group-local repair.
Rational beta_formula_unrestricted(int n, int e, int m, int r, int d);

/// C(k + e - 2, r - 2): beta_formula at d = k, n = k + e, m = e.
BigInt beta_closed_form_d_eq_k(int k, int e, int r);

struct SteinerE2Point {
    BigInt F;
    BigInt alpha;
    BigInt beta;
    Rational alpha_bar;
    Rational beta_bar;
};

/// (F, alpha, beta) of a layered code on S(t, r, n) with m = e = 2, d = n - 2.
SteinerE2Point beta_steiner_e2(int n, int r, int t);

/// Enumerates the repair groups and accounts every helper's download under
/// all three accountings. Naive downloads come from the r - m lowest-id
/// helpers of each affected group. Throws ParameterError when some affected
/// group has fewer than r - m helpers, or on malformed sets.
BandwidthAccounting beta_oracle(const BlockDesign& design, int m, const std::set<int>& failed,
                                const std::set<int>& helpers);

/// Checked form: also requires |failed| = e, |helpers| = d and d >= n - m.
BandwidthAccounting beta_oracle(const BlockDesign& design, int m, int e, int d, const std::set<int>& failed,
                                const std::set<int>& helpers);

}  // namespace regen
