#pragma once

#include <map>
#include <vector>

#include "sl2op/numeric.hpp"

namespace sl2op {

// An element of the character ring Z[q + q^-1]: a Laurent polynomial in q
// with integer coefficients, symmetric under q <-> q^-1. Only nonzero
// coefficients are stored.
class SymLaurent {
  public:
    SymLaurent() = default;
    explicit SymLaurent(std::map<int, Int> coeffs);

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool symmetric() const;
    // All exponents with nonzero coefficient share one parity.
    bool parity_pure() const;

    SymLaurent operator+(const SymLaurent& other) const;
    SymLaurent operator*(const SymLaurent& other) const;
    bool operator==(const SymLaurent& other) const = default;

  private:
    std::map<int, Int> coeffs_;
};

// k -> number of copies of rho_k; only nonzero entries stored.
class MultiplicityMap {
  public:
    MultiplicityMap() = default;
    explicit MultiplicityMap(std::map<int, Int> entries);

    const std::map<int, Int>& entries() const { return entries_; }
    Int at(int k) const;
    // sum over k of at(k) * (k+1)
    Int total_dimension() const;
    bool operator==(const MultiplicityMap& other) const = default;

  private:
    std::map<int, Int> entries_;
};

// Character of the irreducible rho_k: q^k + q^{k-2} + ... + q^{-k}.
SymLaurent irr_char(int k);

// Product of characters; the character of the tensor product.
SymLaurent char_product(const std::vector<SymLaurent>& chars);

// Write a symmetric parity-pure Laurent polynomial in the basis of
// irreducible characters: multiplicity of rho_k is C_k - C_{k+2}.
// Throws std::domain_error if some multiplicity comes out negative.
MultiplicityMap decompose_char(const SymLaurent& c);

// Multiplicity of rho_k in rho_{d_1} x ... x rho_{d_m}, via the character
// product coefficients.
Int multiplicity(const std::vector<int>& degrees, int k);

// Same value computed by the Clebsch-Gordan recursion collapsing the last
// two degrees; independent second route for cross-checking.
Int multiplicity_by_recursion(const std::vector<int>& degrees, int k);

// n-th Catalan number, exact.
Int catalan(int n);

} // namespace sl2op
