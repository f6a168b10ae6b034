#include "sl2op/tensorspace.hpp"

#include <stdexcept>
#include <string>

namespace sl2op {

TensorSpace::TensorSpace(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
}

Int TensorSpace::dimension() const {
    Int dim = 1;
    for (int d : degrees_) dim *= d + 1;
    return dim;
}

int lex_compare(const BasisIndex& a, const BasisIndex& b) {
    if (a.e.size() != b.e.size())
        throw std::invalid_argument("lex_compare: indices from different spaces");
    if (a.e < b.e) return -1;
    if (b.e < a.e) return 1;
    return 0;
}

namespace {

void check_index(const TensorSpace& space, const BasisIndex& e) {
    if (static_cast<int>(e.e.size()) != space.factors())
        throw std::invalid_argument("basis index has wrong number of factors");
    for (int k = 0; k < space.factors(); ++k)
        if (e.e[k] < 0 || e.e[k] > space.degrees()[k])
            throw std::invalid_argument("basis index exponent out of range");
}

} // namespace

SparseTensor SparseTensor::monomial(TensorSpace space, BasisIndex index, Rat coeff) {
    SparseTensor t(std::move(space));
    t.add_term(index, coeff);
    return t;
}

Rat SparseTensor::coeff(const BasisIndex& e) const {
    auto it = entries_.find(e);
    return it == entries_.end() ? Rat(0) : it->second;
}

void SparseTensor::add_term(const BasisIndex& e, const Rat& c) {
    check_index(space_, e);
    if (c == 0) return;
    auto [it, inserted] = entries_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

std::pair<BasisIndex, Rat> SparseTensor::leading_entry() const {
    if (entries_.empty()) throw std::invalid_argument("leading_entry: zero tensor");
    return *entries_.begin();
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
    if (space_ != other.space_) throw std::invalid_argument("tensor spaces differ");
    for (const auto& [e, c] : other.entries_) add_term(e, c);
    return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& other) {
    if (space_ != other.space_) throw std::invalid_argument("tensor spaces differ");
    for (const auto& [e, c] : other.entries_) add_term(e, -c);
    return *this;
}

SparseTensor& SparseTensor::operator*=(const Rat& s) {
    if (s == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [e, c] : entries_) c *= s;
    return *this;
}

SparseTensor componentwise_product(const SparseTensor& s, const SparseTensor& t) {
    if (s.space().factors() != t.space().factors())
        throw std::invalid_argument("componentwise_product: factor counts differ");
    std::vector<int> degrees(s.space().degrees());
    for (int k = 0; k < t.space().factors(); ++k) degrees[k] += t.space().degrees()[k];
    SparseTensor out{TensorSpace(std::move(degrees))};
    for (const auto& [ea, ca] : s.entries())
        for (const auto& [eb, cb] : t.entries()) {
            BasisIndex e = ea;
            for (size_t k = 0; k < e.e.size(); ++k) e.e[k] += eb.e[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

namespace {

// Signed collapsed-orientation sum shared by t_G and t_{G,i}. skip_root
// drops the root factor from the index, per the rooted definition.
SparseTensor orientation_sum(const OuterplanarGraph& g, std::optional<int> root_in_degree) {
    const bool skip_root = g.rooted();
    std::vector<int> degrees = g.degrees();
    if (skip_root) degrees.erase(degrees.begin());
    SparseTensor t{TensorSpace(std::move(degrees))};
    const int first = skip_root ? 1 : 0;
    for_each_orientation(g, root_in_degree, [&](const OrientationView& o) {
        BasisIndex e;
        e.e.reserve(o.out_in.size() - first);
        for (size_t v = first; v < o.out_in.size(); ++v) e.e.push_back(o.out_in[v].second);
        Int c = o.sign < 0 ? -o.multiplicity : o.multiplicity;
        t.add_term(e, Rat(c));
    });
    return t;
}

} // namespace

SparseTensor build_t_G(const OuterplanarGraph& g) {
    if (g.rooted()) throw std::invalid_argument("build_t_G: expected an unrooted graph");
    return orientation_sum(g, std::nullopt);
}

SparseTensor build_t_G_i(const OuterplanarGraph& g, int i) {
    if (!g.rooted()) throw std::invalid_argument("build_t_G_i: expected a rooted graph");
    if (i < 0 || i > g.root_degree())
        throw std::invalid_argument("build_t_G_i: i out of range 0.." + std::to_string(g.root_degree()));
    return orientation_sum(g, i);
}

SparseTensor s_G_image(const OuterplanarGraph& g, int i) {
    SparseTensor t = build_t_G_i(g, i);
    Rat scale = make_rat(i % 2 ? -1 : 1, binomial(g.root_degree(), i));
    t *= scale;
    return t;
}

std::vector<BasisIndex> all_indices(const TensorSpace& space) {
    std::vector<BasisIndex> out;
    BasisIndex e{std::vector<int>(space.factors(), 0)};
    while (true) {
        out.push_back(e);
        int k = space.factors() - 1;
        while (k >= 0 && e.e[k] == space.degrees()[k]) e.e[k--] = 0;
        if (k < 0) break;
        ++e.e[k];
    }
    return out;
}

} // namespace sl2op
