#include "sl2op/opgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sl2op {

namespace {

void check_degree_tuple(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("degree tuple must be non-empty");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
}

// Match the bracket word ")"^in "("^out per vertex, nearest-first. Each
// vertex pushes at most one stack entry, so arcs between a fixed pair
// come out merged into one class.
std::vector<Arc> arcs_from_brackets(const std::vector<std::pair<int, int>>& out_in, int base) {
    std::vector<std::pair<int, int>> stack; // (vertex label, open ends)
    std::vector<Arc> arcs;
    for (size_t pos = 0; pos < out_in.size(); ++pos) {
        const auto [out, in] = out_in[pos];
        if (out < 0 || in < 0) throw std::invalid_argument("bracket counts must be nonnegative");
        const int v = base + static_cast<int>(pos);
        int need = in;
        while (need > 0) {
            if (stack.empty()) throw std::invalid_argument("unbalanced bracket word");
            auto& [u, open] = stack.back();
            const int take = std::min(open, need);
            arcs.push_back({u, v, take});
            open -= take;
            need -= take;
            if (open == 0) stack.pop_back();
        }
        if (out > 0) stack.push_back({v, out});
    }
    if (!stack.empty()) throw std::invalid_argument("unbalanced bracket word");
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return arcs;
}

} // namespace

OuterplanarGraph::OuterplanarGraph(int vertex_base, int m, std::vector<Arc> arcs)
    : vertex_base_(vertex_base), m_(m), arcs_(std::move(arcs)) {
    if (vertex_base_ != 0 && vertex_base_ != 1)
        throw std::invalid_argument("vertex_base must be 0 (rooted) or 1 (unrooted)");
    if (m_ < (rooted() ? 0 : 1)) throw std::invalid_argument("graph needs at least one vertex");
    const int lo = vertex_base_;
    const int hi = m_; // highest vertex label in both conventions
    for (size_t c = 0; c < arcs_.size(); ++c) {
        const Arc& a = arcs_[c];
        if (a.from >= a.to) throw std::invalid_argument("arc endpoints must satisfy from < to (no loops)");
        if (a.from < lo || a.to > hi) throw std::invalid_argument("arc endpoint out of range");
        if (a.mult < 1) throw std::invalid_argument("arc multiplicity must be positive");
        if (c > 0) {
            const Arc& p = arcs_[c - 1];
            if (std::tie(p.from, p.to) >= std::tie(a.from, a.to))
                throw std::invalid_argument("arcs must be sorted with distinct endpoint pairs");
        }
    }
    for (size_t c = 0; c < arcs_.size(); ++c)
        for (size_t d = c + 1; d < arcs_.size(); ++d) {
            const Arc &a = arcs_[c], &b = arcs_[d];
            if (a.from < b.from && b.from < a.to && a.to < b.to)
                throw std::invalid_argument("arcs cross: (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                            ") and (" + std::to_string(b.from) + "," + std::to_string(b.to) + ")");
        }
}

int OuterplanarGraph::degree(int v) const {
    if (v < vertex_base_ || v > m_) throw std::invalid_argument("vertex label out of range");
    int d = 0;
    for (const Arc& a : arcs_) {
        if (a.from == v) d += a.mult;
        if (a.to == v) d += a.mult;
    }
    return d;
}

std::vector<int> OuterplanarGraph::degrees() const {
    std::vector<int> d(num_vertices(), 0);
    for (const Arc& a : arcs_) {
        d[a.from - vertex_base_] += a.mult;
        d[a.to - vertex_base_] += a.mult;
    }
    return d;
}

int Orientation::inversions() const {
    return std::accumulate(flips.begin(), flips.end(), 0);
}

std::vector<std::pair<int, int>> Orientation::out_in_degrees() const {
    const int base = graph.vertex_base();
    std::vector<std::pair<int, int>> oi(graph.num_vertices(), {0, 0});
    for (size_t c = 0; c < graph.arcs().size(); ++c) {
        const Arc& a = graph.arcs()[c];
        const int u = flips[c];
        oi[a.from - base].first += a.mult - u;
        oi[a.from - base].second += u;
        oi[a.to - base].second += a.mult - u;
        oi[a.to - base].first += u;
    }
    return oi;
}

std::vector<OuterplanarGraph> enumerate_graphs(const std::vector<int>& degrees, bool rooted) {
    check_degree_tuple(degrees);
    const int n = static_cast<int>(degrees.size());
    const int base = rooted ? 0 : 1;
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    std::vector<OuterplanarGraph> out;
    if (total % 2 != 0) return out;

    // suffix[p] = sum of degrees at positions >= p; open ends beyond it
    // can never be closed
    std::vector<int> suffix(n + 1, 0);
    for (int p = n - 1; p >= 0; --p) suffix[p] = suffix[p + 1] + degrees[p];

    std::vector<int> r(n, 0);
    auto dfs = [&](auto&& self, int p, int opens) -> void {
        if (p == n) {
            if (opens == 0) {
                std::vector<std::pair<int, int>> word(n);
                for (int v = 0; v < n; ++v) word[v] = {degrees[v] - r[v], r[v]};
                out.emplace_back(base, rooted ? n - 1 : n, arcs_from_brackets(word, base));
            }
            return;
        }
        const int d = degrees[p];
        for (int rv = 0; rv <= std::min(d, opens); ++rv) {
            const int next_opens = opens - rv + (d - rv);
            if (next_opens > suffix[p + 1]) continue;
            r[p] = rv;
            self(self, p + 1, next_opens);
        }
        r[p] = 0;
    };
    dfs(dfs, 0, 0);
    return out;
}

Int count_graphs(const std::vector<int>& degrees, bool /*rooted*/) {
    check_degree_tuple(degrees);
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (total % 2 != 0) return 0;
    std::map<std::vector<int>, Int> memo;
    std::function<Int(std::vector<int>)> rec = [&](std::vector<int> d) -> Int {
        if (d.size() == 1) return d[0] == 0 ? 1 : 0;
        if (auto it = memo.find(d); it != memo.end()) return it->second;
        const int a = d[d.size() - 2];
        const int b = d[d.size() - 1];
        std::vector<int> head(d.begin(), d.end() - 2);
        head.push_back(0);
        Int sum = 0;
        for (int t = std::abs(a - b); t <= a + b; t += 2) {
            head.back() = t;
            sum += rec(head);
        }
        memo.emplace(std::move(d), sum);
        return sum;
    };
    return rec(degrees);
}

Orientation canonical_orientation(const OuterplanarGraph& g) {
    return Orientation{g, std::vector<int>(g.arcs().size(), 0)};
}

void for_each_orientation(const OuterplanarGraph& g, std::optional<int> root_in_degree,
                          const std::function<void(const OrientationView&)>& fn) {
    if (root_in_degree && !g.rooted())
        throw std::invalid_argument("root_in_degree is only valid for rooted graphs");
    if (root_in_degree && (*root_in_degree < 0 || *root_in_degree > g.root_degree()))
        return; // empty
    const auto& arcs = g.arcs();
    const int nclasses = static_cast<int>(arcs.size());
    const int base = g.vertex_base();

    // remaining flip capacity on root-incident classes, for pruning
    std::vector<int> root_suffix(nclasses + 1, 0);
    for (int c = nclasses - 1; c >= 0; --c)
        root_suffix[c] = root_suffix[c + 1] + (g.rooted() && arcs[c].from == 0 ? arcs[c].mult : 0);

    std::vector<int> flips(nclasses, 0);
    std::vector<std::pair<int, int>> oi = leading_basis_exponents(g);

    auto dfs = [&](auto&& self, int c, int sign, const Int& mult, int root_in) -> void {
        if (c == nclasses) {
            fn(OrientationView{g, flips, sign, mult, oi});
            return;
        }
        const Arc& a = arcs[c];
        const bool at_root = g.rooted() && a.from == 0;
        auto& from_oi = oi[a.from - base];
        auto& to_oi = oi[a.to - base];
        for (int u = 0; u <= a.mult; ++u) {
            const int next_root_in = root_in + (at_root ? u : 0);
            if (root_in_degree) {
                if (next_root_in > *root_in_degree) break;
                if (*root_in_degree - next_root_in > root_suffix[c + 1]) continue;
            }
            flips[c] = u;
            from_oi.first -= u;
            from_oi.second += u;
            to_oi.second -= u;
            to_oi.first += u;
            self(self, c + 1, (u % 2 ? -sign : sign), mult * binomial(a.mult, u), next_root_in);
            from_oi.first += u;
            from_oi.second -= u;
            to_oi.second += u;
            to_oi.first -= u;
        }
        flips[c] = 0;
    };
    dfs(dfs, 0, 1, Int(1), 0);
}

std::vector<OrientationTerm> orientations(const OuterplanarGraph& g, std::optional<int> root_in_degree) {
    std::vector<OrientationTerm> out;
    for_each_orientation(g, root_in_degree, [&](const OrientationView& v) {
        out.push_back({Orientation{g, v.flips}, v.sign, v.multiplicity});
    });
    return out;
}

std::vector<std::pair<int, int>> leading_basis_exponents(const OuterplanarGraph& g) {
    const int base = g.vertex_base();
    std::vector<std::pair<int, int>> oi(g.num_vertices(), {0, 0});
    for (const Arc& a : g.arcs()) {
        oi[a.from - base].first += a.mult;
        oi[a.to - base].second += a.mult;
    }
    return oi;
}

OuterplanarGraph graph_from_leading(const std::vector<std::pair<int, int>>& out_in, bool rooted) {
    if (out_in.empty()) throw std::invalid_argument("empty exponent list");
    const int base = rooted ? 0 : 1;
    const int n = static_cast<int>(out_in.size());
    return OuterplanarGraph(base, rooted ? n - 1 : n, arcs_from_brackets(out_in, base));
}

} // namespace sl2op
