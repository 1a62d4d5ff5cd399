#pragma once

// Degree-kappa extension F_q[x]/(g) of a binary base field F_q, with g monic
// irreducible over F_q. Elements are coordinate vectors over F_q in the
// polynomial basis 1, x, ..., x^(kappa-1).

#include "regen/gf.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace regen {

using Poly = std::vector<Symbol>;  // coefficients, lowest degree first

class ExtensionField {
  public:
    using Element = std::vector<Symbol>;  // exactly degree() coordinates

    /// Finds a monic irreducible modulus by a seeded deterministic search.
    ExtensionField(std::shared_ptr<const GaloisField> base, std::size_t degree, std::uint64_t seed = 0x5eed);

    /// Uses the given monic modulus; throws FieldError if it is reducible.
    ExtensionField(std::shared_ptr<const GaloisField> base, Poly modulus);

    const GaloisField& base() const { return *base_; }
    const std::shared_ptr<const GaloisField>& base_ptr() const { return base_; }
    std::size_t degree() const { return degree_; }
    const Poly& modulus() const { return modulus_; }

    Element zero() const { return Element(degree_, 0); }
    Element one() const;
    /// x^i for i < degree: the i-th polynomial basis element.
    Element basis(std::size_t i) const;
    /// Embeds a base-field scalar.
    Element scalar(Symbol c) const;

    bool is_zero(const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(Symbol c, const Element& a) const;
    Element inv(const Element& a) const;
    /// a^q, the Frobenius map over the base field.
    Element frobenius(const Element& a) const;

    bool valid(const Element& a) const;

  private:
    void build_frobenius();

    std::shared_ptr<const GaloisField> base_;
    std::size_t degree_;
    Poly modulus_;
    std::vector<Symbol> frobenius_;  // column j holds the coordinates of (x^j)^q
};

/// Ben-Or test: a monic g of degree kappa is irreducible over F_q iff
/// gcd(g, x^(q^i) - x) = 1 for i = 1 .. kappa / 2.
bool is_irreducible(const GaloisField& base, const Poly& monic);

}  // namespace regen
