#pragma once

// Layered regenerating code over a block design. Every block J carries an
// (r, r - m) MDS codeword; node x stores the symbol at its position in J for
// every block J that contains x, in ascending block order.

#include "regen/design.hpp"
#include "regen/gf.hpp"
#include "regen/mds.hpp"
#include "regen/repair_analysis.hpp"

#include <memory>
#include <span>
#include <vector>

namespace regen {

/// (n, k, d, e) system plus construction parameters (m, r, t).
struct SystemParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int e = 0;
    int m = 0;
    int r = 0;
    int t = 0;

    /// Throws ParameterError unless 1 <= e <= m < r <= n, 1 <= t <= r,
    /// k = n - m and k <= d <= n - e.
    void validate() const;

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct StoredSymbol {
    std::size_t block = 0;  // 0-based block index
    Symbol value = 0;

    friend bool operator==(const StoredSymbol&, const StoredSymbol&) = default;
};

struct NodeContents {
    int node = 0;
    std::vector<StoredSymbol> symbols;

    friend bool operator==(const NodeContents&, const NodeContents&) = default;
};

class LayeredCode {
  public:
    LayeredCode(SystemParams params, BlockDesign design,
                std::shared_ptr<const GaloisField> field = std::make_shared<GaloisField>());

    const SystemParams& params() const { return params_; }
    const BlockDesign& design() const { return design_; }
    const GaloisField& field() const { return *field_; }
    const std::shared_ptr<const GaloisField>& field_ptr() const { return field_; }
    const MdsCodec& codec(std::size_t block) const { return *codecs_.at(block); }

    std::size_t num_blocks() const { return design_.size(); }
    std::size_t group_dimension() const { return static_cast<std::size_t>(params_.r - params_.m); }
    /// Information symbols F = N (r - m).
    std::size_t info_size() const { return num_blocks() * group_dimension(); }
    /// Symbols per node, alpha = N r / n.
    std::size_t alpha() const { return alpha_; }
    /// Blocks containing `node`, ascending; the node's slot order.
    const std::vector<std::size_t>& slots(int node) const { return slots_.at(static_cast<std::size_t>(node - 1)); }

  private:
    SystemParams params_;
    BlockDesign design_;
    std::shared_ptr<const GaloisField> field_;
    std::vector<std::shared_ptr<const MdsCodec>> codecs_;
    std::vector<std::vector<std::size_t>> slots_;
    std::size_t alpha_ = 0;
};

/// Validates params against the design (n, r, t match; every node in the
/// same number of blocks) and builds the code.
LayeredCode build_code(const SystemParams& params, const BlockDesign& design);

/// Block j encodes data[j (r - m) .. (j + 1)(r - m)). Returns n contents,
/// node i at index i - 1.
std::vector<NodeContents> encode(const LayeredCode& code, std::span<const Symbol> data);

/// Recovers the data from at least k distinct nodes. Surplus symbols of a
/// group are checked for consistency; mismatches throw CodingError.
std::vector<Symbol> reconstruct(const LayeredCode& code, std::span<const NodeContents> nodes);

struct RepairResult {
    std::vector<NodeContents> repaired;  // in ascending node order
    BandwidthAccounting bandwidth;       // naive matches the symbols actually read
};

/// Regenerates the failed nodes from the helpers' contents only. `state` must
/// contain every helper's contents (other entries are ignored).
RepairResult repair(const LayeredCode& code, std::span<const NodeContents> state, const std::vector<int>& failed,
                    const std::vector<int>& helpers);

/// Per-group repair without the system-level checks on |failed| and |helpers|;
/// still requires r - m helpers in every affected group.
RepairResult repair_groups(const LayeredCode& code, std::span<const NodeContents> state,
                           const std::vector<int>& failed, const std::vector<int>& helpers);

/// Grows a (k+e, k, k, e) code with t = r = k+e-1, m = e into the
/// (k+e+1, k, k, e+1) code: node k+e+1 joins every old block and a new block
/// {1, ..., k+e} is appended.
LayeredCode extend(const LayeredCode& code);

/// Node contents of the extended code. Old symbols are kept in place; the new
/// block encodes `new_block_data` (k - 1 symbols) and node k+e+1 receives one
/// freshly generated symbol per old group.
std::vector<NodeContents> extend_contents(const LayeredCode& old_code, const LayeredCode& new_code,
                                          std::span<const NodeContents> old_contents,
                                          std::span<const Symbol> new_block_data);

}  // namespace regen
