#include "sl2op/decomp.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "sl2op/charring.hpp"
#include "sl2op/sl2act.hpp"

namespace sl2op {

namespace {

bool check_invariance(const DecompositionReport& report) {
    for (const IsotypicComponent& comp : report.components)
        for (const GraphTensors& gt : comp.graphs)
            for (int i = 0; i <= comp.d0; ++i) {
                const SparseTensor& t = gt.tensors[i];
                // weight law: H t_{G,i} = (2i - d0) t_{G,i}
                if (act_lie(LieGenerator::H, t) != Rat(2 * i - comp.d0) * t) return false;
                if (comp.d0 == 0) {
                    if (!act_lie(LieGenerator::E, t).is_zero()) return false;
                    if (!act_lie(LieGenerator::F, t).is_zero()) return false;
                }
            }
    return true;
}

// s_G intertwines the actions: applying E/F/H after s_G must agree with
// applying the single-factor monomial rule before it.
bool check_intertwining(const DecompositionReport& report) {
    for (const IsotypicComponent& comp : report.components) {
        const int d0 = comp.d0;
        for (const GraphTensors& gt : comp.graphs) {
            std::vector<SparseTensor> s;
            s.reserve(d0 + 1);
            for (int i = 0; i <= d0; ++i) {
                SparseTensor si = gt.tensors[i];
                si *= make_rat(i % 2 ? -1 : 1, binomial(d0, i));
                s.push_back(std::move(si));
            }
            for (int i = 0; i <= d0; ++i) {
                // E x^i y^{d0-i} = (d0-i) x^{i+1} y^{d0-i-1}
                SparseTensor e_target(s[i].space());
                if (i < d0) e_target = Rat(d0 - i) * s[i + 1];
                if (act_lie(LieGenerator::E, s[i]) != e_target) return false;
                // F x^i y^{d0-i} = i x^{i-1} y^{d0-i+1}
                SparseTensor f_target(s[i].space());
                if (i > 0) f_target = Rat(i) * s[i - 1];
                if (act_lie(LieGenerator::F, s[i]) != f_target) return false;
                if (act_lie(LieGenerator::H, s[i]) != Rat(2 * i - d0) * s[i]) return false;
            }
        }
    }
    return true;
}

// The basis matrix is block-diagonal once rows and columns are grouped
// by weight (each t_{G,i} is weight-homogeneous of weight 2i - d0, which
// check_invariance established). Rank over Q is then the sum of block
// ranks; each block is eliminated exactly.
bool check_rank_by_weight_blocks(const DecompositionReport& report) {
    const TensorSpace space{report.degrees};
    std::map<int, std::vector<const SparseTensor*>> rows_by_weight;
    for (const IsotypicComponent& comp : report.components)
        for (const GraphTensors& gt : comp.graphs)
            for (int i = 0; i <= comp.d0; ++i) {
                const SparseTensor& t = gt.tensors[i];
                for (const auto& [e, c] : t.entries())
                    if (weight(space, e) != 2 * i - comp.d0) return false;
                rows_by_weight[2 * i - comp.d0].push_back(&t);
            }

    std::map<int, std::vector<BasisIndex>> cols_by_weight;
    for (BasisIndex& e : all_indices(space)) {
        const int w = weight(space, e);
        cols_by_weight[w].push_back(std::move(e));
    }
    if (rows_by_weight.size() != cols_by_weight.size()) return false;

    for (const auto& [w, rows] : rows_by_weight) {
        auto it = cols_by_weight.find(w);
        if (it == cols_by_weight.end() || it->second.size() != rows.size()) return false;
        std::map<BasisIndex, size_t> pos;
        for (size_t j = 0; j < it->second.size(); ++j) pos.emplace(it->second[j], j);
        ratlin::Mat block(rows.size(), ratlin::Vec(rows.size(), Rat(0)));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [e, c] : rows[r]->entries()) block[r][pos.at(e)] = c;
        if (!ratlin::is_invertible(block)) return false;
    }
    return true;
}

} // namespace

Int DecompositionReport::basis_count() const {
    Int n = 0;
    for (const IsotypicComponent& comp : components) n += Int(comp.graphs.size()) * (comp.d0 + 1);
    return n;
}

DecompositionReport decompose(const std::vector<int>& degrees, const DecomposeOptions& opt) {
    if (degrees.empty()) throw std::invalid_argument("degree tuple must be non-empty");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");

    DecompositionReport report;
    report.degrees = degrees;
    report.dimension = TensorSpace{degrees}.dimension();
    if (report.dimension > kConstructionGuard)
        throw SizeGuardError("decompose: dimension " + to_string(report.dimension) +
                             " exceeds the construction guard " + std::to_string(kConstructionGuard));

    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    for (int d0 = total; d0 >= 0; --d0) {
        if ((total - d0) % 2 != 0) continue;
        if (multiplicity(degrees, d0) == 0) continue;
        std::vector<int> rooted_degrees;
        rooted_degrees.reserve(degrees.size() + 1);
        rooted_degrees.push_back(d0);
        rooted_degrees.insert(rooted_degrees.end(), degrees.begin(), degrees.end());

        IsotypicComponent comp;
        comp.d0 = d0;
        for (OuterplanarGraph& g : enumerate_graphs(rooted_degrees, true)) {
            GraphTensors gt{std::move(g), {}};
            gt.tensors.reserve(d0 + 1);
            for (int i = 0; i <= d0; ++i) gt.tensors.push_back(build_t_G_i(gt.graph, i));
            comp.graphs.push_back(std::move(gt));
        }
        report.components.push_back(std::move(comp));
    }

    if (opt.verify) {
        if (report.dimension > kDenseSolveGuard)
            throw SizeGuardError("decompose: dimension " + to_string(report.dimension) +
                                 " exceeds the dense-solve guard " + std::to_string(kDenseSolveGuard) +
                                 "; rerun without verification");
        report.verified.invariance = check_invariance(report);
        report.verified.intertwining = check_intertwining(report);
        report.verified.rank = check_rank_by_weight_blocks(report);
    }
    return report;
}

ratlin::Mat full_basis_matrix(const DecompositionReport& report) {
    const TensorSpace space{report.degrees};
    if (space.dimension() > kDenseSolveGuard)
        throw SizeGuardError("full_basis_matrix: dimension " + to_string(space.dimension()) +
                             " exceeds the dense-solve guard " + std::to_string(kDenseSolveGuard));
    const std::vector<BasisIndex> basis = all_indices(space);
    std::map<BasisIndex, size_t> pos;
    for (size_t j = 0; j < basis.size(); ++j) pos.emplace(basis[j], j);
    ratlin::Mat m;
    m.reserve(basis.size());
    for (const IsotypicComponent& comp : report.components)
        for (const GraphTensors& gt : comp.graphs)
            for (const SparseTensor& t : gt.tensors) {
                ratlin::Vec row(basis.size(), Rat(0));
                for (const auto& [e, c] : t.entries()) row[pos.at(e)] = c;
                m.push_back(std::move(row));
            }
    return m;
}

std::vector<Rat> project(const DecompositionReport& report, const SparseTensor& t) {
    if (t.space() != TensorSpace{report.degrees})
        throw std::invalid_argument("project: tensor lives in a different space");
    const TensorSpace& space = t.space();

    // row order and per-weight grouping
    struct RowRef {
        const SparseTensor* tensor;
        size_t index;
    };
    std::map<int, std::vector<RowRef>> rows_by_weight;
    size_t nrows = 0;
    for (const IsotypicComponent& comp : report.components)
        for (const GraphTensors& gt : comp.graphs)
            for (int i = 0; i <= comp.d0; ++i)
                rows_by_weight[2 * i - comp.d0].push_back({&gt.tensors[i], nrows++});

    std::map<int, std::vector<BasisIndex>> cols_by_weight;
    for (BasisIndex& e : all_indices(space)) {
        const int w = weight(space, e);
        cols_by_weight[w].push_back(std::move(e));
    }

    std::vector<Rat> coords(nrows, Rat(0));
    // solve per weight block; weights where t has no component get zeros
    std::map<int, bool> weight_needed;
    for (const auto& [e, c] : t.entries()) weight_needed[weight(space, e)] = true;

    for (const auto& [w, needed] : weight_needed) {
        auto rit = rows_by_weight.find(w);
        auto cit = cols_by_weight.find(w);
        if (rit == rows_by_weight.end() || cit == cols_by_weight.end() ||
            rit->second.size() != cit->second.size())
            throw std::invalid_argument("project: basis does not span the tensor's weight components");
        const auto& rows = rit->second;
        const auto& cols = cit->second;
        std::map<BasisIndex, size_t> pos;
        for (size_t j = 0; j < cols.size(); ++j) pos.emplace(cols[j], j);
        // solve (block^T) x = rhs so that sum_r x_r t_r = t on this block
        ratlin::Mat bt(cols.size(), ratlin::Vec(rows.size(), Rat(0)));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [e, c] : rows[r].tensor->entries()) bt[pos.at(e)][r] = c;
        ratlin::Vec rhs(cols.size(), Rat(0));
        for (const auto& [e, c] : t.entries())
            if (weight(space, e) == w) rhs[pos.at(e)] = c;
        auto x = ratlin::solve_square(bt, rhs);
        if (!x) throw std::invalid_argument("project: singular basis block");
        for (size_t r = 0; r < rows.size(); ++r) coords[rows[r].index] = (*x)[r];
    }
    return coords;
}

} // namespace sl2op
