#include "sl2op/charring.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sl2op {

namespace {

void check_degrees(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("degree tuple must be non-empty");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
}

} // namespace

SymLaurent::SymLaurent(std::map<int, Int> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

Int SymLaurent::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
}

bool SymLaurent::symmetric() const {
    for (const auto& [k, c] : coeffs_)
        if (coeff(-k) != c) return false;
    return true;
}

bool SymLaurent::parity_pure() const {
    if (coeffs_.empty()) return true;
    const int parity = std::abs(coeffs_.begin()->first) % 2;
    for (const auto& [k, c] : coeffs_)
        if (std::abs(k) % 2 != parity) return false;
    return true;
}

SymLaurent SymLaurent::operator+(const SymLaurent& other) const {
    std::map<int, Int> sum = coeffs_;
    for (const auto& [k, c] : other.coeffs_) sum[k] += c;
    return SymLaurent(std::move(sum));
}

SymLaurent SymLaurent::operator*(const SymLaurent& other) const {
    std::map<int, Int> prod;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : other.coeffs_) prod[k1 + k2] += c1 * c2;
    return SymLaurent(std::move(prod));
}

MultiplicityMap::MultiplicityMap(std::map<int, Int> entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->first < 0 || it->second < 0)
            throw std::invalid_argument("multiplicity map entries must be nonnegative");
        it = (it->second == 0) ? entries_.erase(it) : std::next(it);
    }
}

Int MultiplicityMap::at(int k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Int(0) : it->second;
}

Int MultiplicityMap::total_dimension() const {
    Int dim = 0;
    for (const auto& [k, c] : entries_) dim += c * (k + 1);
    return dim;
}

SymLaurent irr_char(int k) {
    if (k < 0) throw std::invalid_argument("irr_char: k must be nonnegative");
    std::map<int, Int> coeffs;
    for (int e = -k; e <= k; e += 2) coeffs[e] = 1;
    return SymLaurent(std::move(coeffs));
}

SymLaurent char_product(const std::vector<SymLaurent>& chars) {
    if (chars.empty()) throw std::invalid_argument("char_product: empty list");
    SymLaurent prod = chars.front();
    for (size_t i = 1; i < chars.size(); ++i) prod = prod * chars[i];
    return prod;
}

MultiplicityMap decompose_char(const SymLaurent& c) {
    if (!c.symmetric()) throw std::invalid_argument("decompose_char: input is not symmetric");
    if (!c.parity_pure()) throw std::invalid_argument("decompose_char: input is not parity-pure");
    std::map<int, Int> entries;
    for (const auto& [k, _] : c.coeffs()) {
        if (k < 0) continue;
        Int m = c.coeff(k) - c.coeff(k + 2);
        if (m < 0) throw std::domain_error("decompose_char: not a character (negative multiplicity at k=" + std::to_string(k) + ")");
        if (m != 0) entries[k] = m;
    }
    return MultiplicityMap(std::move(entries));
}

Int multiplicity(const std::vector<int>& degrees, int k) {
    check_degrees(degrees);
    if (k < 0) throw std::invalid_argument("multiplicity: k must be nonnegative");
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (k > total || (total - k) % 2 != 0) return 0;
    std::vector<SymLaurent> chars;
    chars.reserve(degrees.size());
    for (int d : degrees) chars.push_back(irr_char(d));
    const SymLaurent prod = char_product(chars);
    return prod.coeff(k) - prod.coeff(k + 2);
}

Int multiplicity_by_recursion(const std::vector<int>& degrees, int k) {
    check_degrees(degrees);
    if (k < 0) throw std::invalid_argument("multiplicity: k must be nonnegative");
    // Memoized on the exact remaining tuple; k is fixed through the recursion.
    std::map<std::vector<int>, Int> memo;
    std::function<Int(std::vector<int>)> rec = [&](std::vector<int> d) -> Int {
        if (d.size() == 1) return d[0] == k ? 1 : 0;
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

Int catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
    return binomial(2L * n, n) - binomial(2L * n, n - 1);
}

} // namespace sl2op
