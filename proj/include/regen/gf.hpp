#pragma once

// Binary extension fields GF(2^w), 2 <= w <= 16, with log/antilog tables.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace regen {

using Symbol = std::uint32_t;

class FieldError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class GaloisField {
  public:
    static constexpr unsigned kDefaultWidth = 8;

    /// Uses the fixed primitive polynomial for `width` (e.g. 0x11d for w = 8).
    explicit GaloisField(unsigned width = kDefaultWidth);

    unsigned width() const { return width_; }
    Symbol order() const { return order_; }  // 2^w
    Symbol polynomial() const { return poly_; }

    bool contains(Symbol a) const { return a < order_; }

    static Symbol add(Symbol a, Symbol b) { return a ^ b; }
    static Symbol sub(Symbol a, Symbol b) { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }

    Symbol inv(Symbol a) const {
        if (a == 0) {
            throw FieldError("inverse of zero");
        }
        return exp_[order_ - 1 - log_[a]];
    }

    Symbol div(Symbol a, Symbol b) const {
        if (b == 0) {
            throw FieldError("division by zero");
        }
        if (a == 0) {
            return 0;
        }
        return exp_[log_[a] + (order_ - 1) - log_[b]];
    }

    Symbol pow(Symbol a, std::uint64_t e) const;

    /// Primitive element raised to i.
    Symbol exp(std::uint64_t i) const { return exp_[i % (order_ - 1)]; }

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.width_ == b.width_ && a.poly_ == b.poly_;
    }

  private:
    unsigned width_;
    Symbol order_;
    Symbol poly_;
    std::vector<Symbol> exp_;  // doubled so exp_[log a + log b] needs no reduction
    std::vector<Symbol> log_;
};

enum class FieldOp { add, mul, inv, div };

/// Dispatching form of the four field operations; `b` is ignored for inv.
Symbol field_arith(const GaloisField& field, Symbol a, Symbol b, FieldOp op);

/// Dense matrix over a GaloisField, row-major.
class GfMatrix {
  public:
    GfMatrix() = default;
    GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Symbol& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Symbol operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

/// Rank by Gaussian elimination (the matrix is taken by value and reduced).
std::size_t rank(const GaloisField& field, GfMatrix m);

/// Solves A x = b for square nonsingular A; throws FieldError if singular.
std::vector<Symbol> solve(const GaloisField& field, GfMatrix a, std::vector<Symbol> b);

}  // namespace regen
