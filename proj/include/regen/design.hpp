#pragma once

// Combinatorial block designs that index the repair groups of a layered code.
//
// Node labels are 1-based. A block stores its elements in the order given at
// construction; the position of a node inside a block is its codeword position
// in that block's repair group.

#include "regen/rational.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace regen {

using Block = std::vector<int>;

class DesignError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BlockDesign {
  public:
    /// Checks the shape invariants (block sizes, labels in [1, n], distinct
    /// elements). The Steiner property is NOT checked here; see verify_steiner().
    BlockDesign(int n, int r, int t, std::vector<Block> blocks);

    int n() const { return n_; }
    int r() const { return r_; }
    int t() const { return t_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t j) const { return blocks_.at(j); }

    bool contains(std::size_t j, int node) const;
    /// Codeword position of `node` inside block j, or -1.
    int position(std::size_t j, int node) const;
    /// Indices of the blocks containing `node`, ascending.
    std::vector<std::size_t> blocks_of(int node) const;

    friend bool operator==(const BlockDesign&, const BlockDesign&) = default;

  private:
    int n_;
    int r_;
    int t_;
    std::vector<Block> blocks_;
};

struct DesignStats {
    BigInt num_blocks;  // N
    BigInt alpha_sym;   // N r / n, blocks per node
    BigInt lambda2;     // blocks through a fixed pair (0 when t < 2)
    BigInt lambda3;     // blocks through a fixed triple (0 when t < 3)
};

/// The t = r design: all r-subsets of [n] in lexicographic order.
BlockDesign complete_design(int n, int r);

/// Parses the text format: a header `n r t` then one block per line.
/// Shape errors throw DesignError; the Steiner property is not checked.
BlockDesign load_design(std::istream& in);
BlockDesign load_design_string(const std::string& text);
BlockDesign load_design_file(const std::string& path);

void write_design(std::ostream& out, const BlockDesign& design);
std::string serialize_design(const BlockDesign& design);

/// True iff every t-subset of [n] lies in exactly one block.
bool verify_steiner(const BlockDesign& design);

/// Counting statistics from the design parameters. Throws DesignError when a
/// ratio is not integral, which signals parameters with no Steiner system.
DesignStats design_stats(int n, int r, int t);
DesignStats design_stats(const BlockDesign& design);

}  // namespace regen
