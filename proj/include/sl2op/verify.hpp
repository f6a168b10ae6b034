#pragma once

#include <string>
#include <vector>

namespace sl2op {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_sum = 8;    // property checks cover all degree tuples with |d| <= max_sum
    unsigned seed = 42; // drives the random partition checks only
};

// The full property suite: oracle equivalence, invariance, intertwining,
// rank, residue identity, product identities, JSON round trips.
// Deterministic given the seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

// Product identities for randomly partitioned graphs (t_G as a product
// of part tensors, the star/rest split, and the convolution identity for
// t_{G,i}). Used by the suite and callable with a pinned seed.
bool check_product_identities(unsigned seed, int cases, int max_total_degree, std::string* detail = nullptr);

// Degree-tuple universes used by the suite.
std::vector<std::vector<int>> positive_compositions(int max_sum);
std::vector<std::vector<int>> weak_degree_tuples(int max_sum);

} // namespace sl2op
