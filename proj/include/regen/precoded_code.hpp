#pragma once

// Precoded layered code for general (n, k, d, e): F data symbols over the
// extension field are mapped by a linearized polynomial onto the
// F_c = (r - m) N inputs of a t = r layered code with k' = n - m, which is then
// encoded coordinate-wise over the base field. Any k nodes expose rank
// rho(n, k, m, r) = F, enough to recover the data.

#include "regen/extension_field.hpp"
#include "regen/layered_code.hpp"
#include "regen/rational.hpp"

#include <memory>
#include <span>
#include <vector>

namespace regen {

/// sum_{p=max(1, r-(n-k))}^{min(k, r)} C(k, p) C(n-k, r-p) min(p, r - m).
/// Requires 0 <= m < r <= n and 1 <= k <= n.
BigInt rho(int n, int k, int m, int r);

/// Rank over `field` of the generator columns stored by `node_subset` in the
/// t = r layered code with (r, r - m) MDS groups.
std::size_t rank_oracle(int n, int k, int m, int r, const std::vector<int>& node_subset,
                        std::shared_ptr<const GaloisField> field = std::make_shared<GaloisField>());

using ExtElement = ExtensionField::Element;

/// f(theta_i) for f(x) = sum_j data[j] x^(q^j). Throws ParameterError when
/// data.size() > points.size() or points.size() > degree, CodingError when
/// the points are dependent over the base field.
std::vector<ExtElement> linearized_precode(const ExtensionField& ext, std::span<const ExtElement> data,
                                           std::span<const ExtElement> points);

struct PrecodedParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int e = 0;
    int m = 0;
    int r = 0;

    /// Requires 1 <= e <= m <= n - k, m < r <= n, k <= d <= n - e and
    /// d >= n - m so every affected group has enough helpers.
    void validate() const;

    friend bool operator==(const PrecodedParams&, const PrecodedParams&) = default;
};

struct ExtStoredSymbol {
    std::size_t block = 0;
    ExtElement value;

    friend bool operator==(const ExtStoredSymbol&, const ExtStoredSymbol&) = default;
};

struct PrecodedNodeContents {
    int node = 0;
    std::vector<ExtStoredSymbol> symbols;

    friend bool operator==(const PrecodedNodeContents&, const PrecodedNodeContents&) = default;
};

class PrecodedCode {
  public:
    static constexpr std::size_t kMaxDegree = 256;

    /// Throws ParameterError when F_c exceeds kMaxDegree.
    PrecodedCode(PrecodedParams params, std::shared_ptr<const GaloisField> base = std::make_shared<GaloisField>(),
                 std::uint64_t seed = 0x5eed);

    const PrecodedParams& params() const { return params_; }
    const LayeredCode& layered() const { return layered_; }
    const ExtensionField& ext() const { return *ext_; }

    std::size_t info_size() const { return info_size_; }                  // F = rho
    std::size_t intermediate_size() const { return layered_.info_size(); }  // F_c
    std::size_t kappa() const { return ext_->degree(); }
    std::size_t alpha() const { return layered_.alpha(); }
    /// m = n - k: rho = F_c and the precode is the identity.
    bool bypassed() const { return params_.m == params_.n - params_.k; }
    const std::vector<ExtElement>& points() const { return points_; }

  private:
    PrecodedParams params_;
    LayeredCode layered_;
    std::shared_ptr<const ExtensionField> ext_;
    std::size_t info_size_ = 0;
    std::vector<ExtElement> points_;
};

std::vector<PrecodedNodeContents> encode2(const PrecodedCode& code, std::span<const ExtElement> data);

/// Recovers the F data symbols from at least k distinct nodes. Every supplied
/// symbol is checked against the solution; a mismatch throws CodingError.
std::vector<ExtElement> reconstruct2(const PrecodedCode& code, std::span<const PrecodedNodeContents> nodes);

struct PrecodedRepairResult {
    std::vector<PrecodedNodeContents> repaired;
    BandwidthAccounting bandwidth;  // in extension-field symbols
};

/// Coordinate-wise layered repair of up to m failed nodes.
PrecodedRepairResult repair2(const PrecodedCode& code, std::span<const PrecodedNodeContents> state,
                             const std::vector<int>& failed, const std::vector<int>& helpers);

}  // namespace regen
