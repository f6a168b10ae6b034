#include "sl2op/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sl2op/ratlin.hpp"
#include "sl2op/sl2act.hpp"

namespace sl2op {

namespace {

void check_degrees(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("degree tuple must be non-empty");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
}

} // namespace

std::vector<SparseTensor> invariant_subspace_bruteforce(const std::vector<int>& degrees) {
    check_degrees(degrees);
    const TensorSpace space{degrees};
    if (space.dimension() > kDenseSolveGuard)
        throw SizeGuardError("invariant_subspace_bruteforce: dimension " + to_string(space.dimension()) +
                             " exceeds the dense-solve guard " + std::to_string(kDenseSolveGuard));
    const std::vector<BasisIndex> basis = all_indices(space);
    const size_t n = basis.size();
    std::map<BasisIndex, size_t> pos;
    for (size_t j = 0; j < n; ++j) pos.emplace(basis[j], j);

    // rows 0..n-1: coefficients of E b_j; rows n..2n-1: of F b_j
    ratlin::Mat m(2 * n, ratlin::Vec(n, Rat(0)));
    for (size_t j = 0; j < n; ++j) {
        const SparseTensor unit = SparseTensor::monomial(space, basis[j]);
        for (const auto& [e, c] : act_lie(LieGenerator::E, unit).entries()) m[pos.at(e)][j] = c;
        for (const auto& [e, c] : act_lie(LieGenerator::F, unit).entries()) m[n + pos.at(e)][j] = c;
    }
    std::vector<SparseTensor> kernel;
    for (const ratlin::Vec& v : ratlin::nullspace(m)) {
        SparseTensor t(space);
        for (size_t j = 0; j < n; ++j) t.add_term(basis[j], v[j]);
        kernel.push_back(std::move(t));
    }
    return kernel;
}

MultiplicityMap isotypic_dims_by_weights(const std::vector<int>& degrees) {
    check_degrees(degrees);
    // weight-space dimensions, one factor at a time
    std::map<int, Int> counts{{0, Int(1)}};
    for (int d : degrees) {
        std::map<int, Int> next;
        for (const auto& [w, c] : counts)
            for (int e = 0; e <= d; ++e) next[w + d - 2 * e] += c;
        counts = std::move(next);
    }
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    auto dim_of = [&](int w) {
        auto it = counts.find(w);
        return it == counts.end() ? Int(0) : it->second;
    };
    std::map<int, Int> entries;
    for (int k = total % 2; k <= total; k += 2) {
        const Int m = dim_of(k) - dim_of(k + 2);
        if (m != 0) entries[k] = m;
    }
    return MultiplicityMap(std::move(entries));
}

bool span_equals(const std::vector<SparseTensor>& a, const std::vector<SparseTensor>& b) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i].space() != a[0].space()) throw std::invalid_argument("span_equals: mixed spaces");
    for (const SparseTensor& t : b)
        if (!a.empty() && t.space() != a[0].space()) throw std::invalid_argument("span_equals: mixed spaces");

    // columns: union of supports
    std::map<BasisIndex, size_t> pos;
    for (const SparseTensor& t : a)
        for (const auto& [e, c] : t.entries()) pos.emplace(e, 0);
    for (const SparseTensor& t : b)
        for (const auto& [e, c] : t.entries()) pos.emplace(e, 0);
    size_t ncols = 0;
    for (auto& [e, p] : pos) p = ncols++;
    if (ncols == 0) return true; // both spans are {0}

    auto rows_of = [&](const std::vector<SparseTensor>& ts) {
        ratlin::Mat m(ts.size(), ratlin::Vec(ncols, Rat(0)));
        for (size_t i = 0; i < ts.size(); ++i)
            for (const auto& [e, c] : ts[i].entries()) m[i][pos.at(e)] = c;
        return m;
    };
    ratlin::Mat ma = rows_of(a);
    ratlin::Mat mb = rows_of(b);
    ratlin::Mat stacked = ma;
    stacked.insert(stacked.end(), mb.begin(), mb.end());
    const int ra = ratlin::rank(std::move(ma));
    const int rb = ratlin::rank(std::move(mb));
    if (ra != rb) return false;
    return ratlin::rank(std::move(stacked)) == ra;
}

} // namespace sl2op
