#pragma once

// Systematic Reed-Solomon style MDS codec used as the inner code of each
// repair group. A codeword is the evaluation of the unique polynomial of
// degree < dimension that takes the message values on the first `dimension`
// evaluation points, so the first `dimension` positions are the message.

#include "regen/gf.hpp"

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace regen {

class CodingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MdsCodec {
  public:
    /// Evaluation points default to the field elements 0, 1, ..., length-1.
    MdsCodec(std::shared_ptr<const GaloisField> field, std::size_t length, std::size_t dimension);
    MdsCodec(std::shared_ptr<const GaloisField> field, std::vector<Symbol> points, std::size_t dimension);

    std::size_t length() const { return points_.size(); }
    std::size_t dimension() const { return dimension_; }
    const std::vector<Symbol>& points() const { return points_; }
    const GaloisField& field() const { return *field_; }
    const std::shared_ptr<const GaloisField>& field_ptr() const { return field_; }

    /// Coefficient of message symbol i in codeword position j.
    Symbol generator(std::size_t i, std::size_t j) const { return generator_[i * length() + j]; }

    std::vector<Symbol> encode(std::span<const Symbol> message) const;

    /// Recovers the full codeword from at least `dimension` known positions.
    /// Extra positions are checked for consistency; a mismatch throws CodingError.
    std::vector<Symbol> decode(const std::map<std::size_t, Symbol>& available) const;

    /// Same code with extra evaluation points appended; existing positions of
    /// every codeword are unchanged.
    MdsCodec extended(std::size_t new_length) const;

  private:
    Symbol interpolate_at(const std::vector<std::size_t>& basis, const std::vector<Symbol>& values,
                          Symbol x) const;

    std::shared_ptr<const GaloisField> field_;
    std::vector<Symbol> points_;
    std::size_t dimension_;
    std::vector<Symbol> generator_;  // dimension x length
};

}  // namespace regen
