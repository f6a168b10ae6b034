#pragma once

#include <vector>

#include "sl2op/charring.hpp"
#include "sl2op/tensorspace.hpp"

namespace sl2op {

// Independent brute-force verifiers. These never consult the graph
// enumeration or the tensor constructors; they share only the monomial
// basis and the Lie action.

// Exact basis of { t : E t = 0 and F t = 0 }, computed by stacking the
// matrices of E and F on the full monomial basis and eliminating.
// Throws SizeGuardError beyond the dense-solve guard.
std::vector<SparseTensor> invariant_subspace_bruteforce(const std::vector<int>& degrees);

// Multiplicity of rho_k as dim(weight-k subspace) - dim(weight-(k+2)
// subspace), with weight-space dimensions counted combinatorially.
MultiplicityMap isotypic_dims_by_weights(const std::vector<int>& degrees);

// True iff the two rational spans coincide.
bool span_equals(const std::vector<SparseTensor>& a, const std::vector<SparseTensor>& b);

} // namespace sl2op
