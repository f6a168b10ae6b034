#pragma once

#include <vector>

#include "sl2op/numeric.hpp"
#include "sl2op/opgraph.hpp"
#include "sl2op/ratlin.hpp"
#include "sl2op/tensorspace.hpp"

namespace sl2op {

struct VerificationFlags {
    bool rank = false;
    bool invariance = false;
    bool intertwining = false;
    bool all() const { return rank && invariance && intertwining; }
};

// One rooted graph with its basis (t_{G,0}, ..., t_{G,d0}).
struct GraphTensors {
    OuterplanarGraph graph;
    std::vector<SparseTensor> tensors;
};

// All graphs contributing copies of rho_{d0}.
struct IsotypicComponent {
    int d0 = 0;
    std::vector<GraphTensors> graphs;
};

struct DecompositionReport {
    std::vector<int> degrees;
    Int dimension;                            // product of (d_i + 1)
    std::vector<IsotypicComponent> components; // descending d0
    VerificationFlags verified;

    // total number of basis tensors, = dimension when the theorem holds
    Int basis_count() const;
};

struct DecomposeOptions {
    bool verify = true;
};

// Assemble the full basis {t_{G,i}} of S^{d_1}V x ... x S^{d_m}V and,
// unless disabled, verify rank, invariance and intertwining exactly.
// Throws SizeGuardError beyond the construction guard (or, when
// verifying, beyond the dense-solve guard).
DecompositionReport decompose(const std::vector<int>& degrees, const DecomposeOptions& opt = {});

// Rows = all t_{G,i} stacked in report order; columns = the monomial
// basis in lexicographic order. Square of size dimension.
ratlin::Mat full_basis_matrix(const DecompositionReport& report);

// Exact coordinates of t in the {t_{G,i}} basis, aligned with the
// stacked row order of full_basis_matrix.
std::vector<Rat> project(const DecompositionReport& report, const SparseTensor& t);

} // namespace sl2op
