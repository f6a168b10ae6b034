#pragma once

#include "sl2op/numeric.hpp"
#include "sl2op/tensorspace.hpp"

namespace sl2op {

// An element of SL(2) over the rationals.
struct GroupElement {
    Rat a, b, c, d;
    GroupElement(Rat a_, Rat b_, Rat c_, Rat d_);
    static GroupElement identity() { return {1, 0, 0, 1}; }
    static GroupElement diagonal(const Rat& q);
};

enum class LieGenerator { E, F, H };

// Standard substitution action extended to symmetric powers and tensor
// products: per factor x^{d-e} y^e -> (ax+cy)^{d-e} (bx+dy)^e, expanded
// binomially.
SparseTensor act_group(const GroupElement& g, const SparseTensor& t);

// Infinitesimal action. On a single-factor monomial x^p y^r:
// E -> r x^{p+1} y^{r-1}, F -> p x^{p-1} y^{r+1}, H -> (p-r) x^p y^r,
// extended across factors by the Leibniz rule.
SparseTensor act_lie(LieGenerator x, const SparseTensor& t);

// H-eigenvalue of the monomial tensor: sum of d_k - 2 e_k.
int weight(const TensorSpace& space, const BasisIndex& e);

} // namespace sl2op
