#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sl2op/numeric.hpp"
#include "sl2op/opgraph.hpp"

namespace sl2op {

// The space S^{d_1}V x ... x S^{d_m}V, identified by its degree tuple.
class TensorSpace {
  public:
    TensorSpace() = default;
    explicit TensorSpace(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    int factors() const { return static_cast<int>(degrees_.size()); }
    Int dimension() const;

    bool operator==(const TensorSpace&) const = default;

  private:
    std::vector<int> degrees_;
};

// Index of one monomial tensor of the standard basis: e_k is the
// y-exponent of factor k (the factor monomial is x^{d_k-e_k} y^{e_k}).
// Ordered lexicographically with factor 1 most significant and smaller
// e earlier, so x-heavy monomials come first.
struct BasisIndex {
    std::vector<int> e;
    auto operator<=>(const BasisIndex&) const = default;
};

// -1, 0, +1; rejects indices of different lengths.
int lex_compare(const BasisIndex& a, const BasisIndex& b);

// Finite map BasisIndex -> exact rational; no zero entries stored.
class SparseTensor {
  public:
    explicit SparseTensor(TensorSpace space) : space_(std::move(space)) {}
    static SparseTensor monomial(TensorSpace space, BasisIndex index, Rat coeff = Rat(1));

    const TensorSpace& space() const { return space_; }
    const std::map<BasisIndex, Rat>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Rat coeff(const BasisIndex& e) const;
    void add_term(const BasisIndex& e, const Rat& c);

    // Lexicographically minimal index with its coefficient; rejects the
    // zero tensor.
    std::pair<BasisIndex, Rat> leading_entry() const;

    SparseTensor& operator+=(const SparseTensor& other);
    SparseTensor& operator-=(const SparseTensor& other);
    SparseTensor& operator*=(const Rat& s);
    friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
    friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
    friend SparseTensor operator*(const Rat& s, SparseTensor t) { return t *= s; }
    bool operator==(const SparseTensor&) const = default;

  private:
    TensorSpace space_;
    std::map<BasisIndex, Rat> entries_;
};

// Bilinear extension of per-factor monomial multiplication; the result
// lives in the space whose degrees are the sums of the operand degrees.
SparseTensor componentwise_product(const SparseTensor& s, const SparseTensor& t);

// The invariant tensor t_G of an unrooted graph: the signed sum of b_g
// over all orientations.
SparseTensor build_t_G(const OuterplanarGraph& g);

// The isotypic basis tensor t_{G,i} of a rooted graph: the signed sum
// over orientations with in-degree i at the root. The result lives in
// the space of the non-root degrees (vertex 0 contributes no factor).
SparseTensor build_t_G_i(const OuterplanarGraph& g, int i);

// Image of the monomial x^i y^{d_0-i} under the intertwiner s_G, i.e.
// (-1)^i / binomial(d_0, i) times t_{G,i}.
SparseTensor s_G_image(const OuterplanarGraph& g, int i);

// All basis indices of the space in lexicographic order.
std::vector<BasisIndex> all_indices(const TensorSpace& space);

} // namespace sl2op
