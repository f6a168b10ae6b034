#include "sl2op/sl2act.hpp"

#include <stdexcept>
#include <vector>

namespace sl2op {

GroupElement::GroupElement(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw std::invalid_argument("matrix must have determinant 1");
}

GroupElement GroupElement::diagonal(const Rat& q) {
    if (q == 0) throw std::invalid_argument("diagonal entry must be nonzero");
    return {q, 0, 0, Rat(1) / q};
}

namespace {

Rat rat_pow(const Rat& base, int exp) {
    Rat r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Image of the single-factor monomial x^{d-e} y^e as coefficients over
// the new y-exponent e'.
std::vector<std::pair<int, Rat>> factor_image(int d, int e, const GroupElement& g) {
    const int p = d - e, r = e;
    // (ax+cy)^p (bx+dy)^r collected by the x-exponent
    std::vector<Rat> conv(d + 1, Rat(0));
    for (int s = 0; s <= p; ++s) {
        const Rat as = Rat(binomial(p, s)) * rat_pow(g.a, s) * rat_pow(g.c, p - s);
        if (as == 0) continue;
        for (int u = 0; u <= r; ++u) {
            const Rat bu = Rat(binomial(r, u)) * rat_pow(g.b, u) * rat_pow(g.d, r - u);
            if (bu == 0) continue;
            conv[s + u] += as * bu;
        }
    }
    std::vector<std::pair<int, Rat>> out;
    for (int x = 0; x <= d; ++x)
        if (conv[x] != 0) out.emplace_back(d - x, conv[x]);
    return out;
}

} // namespace

SparseTensor act_group(const GroupElement& g, const SparseTensor& t) {
    if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("matrix must have determinant 1");
    const TensorSpace& space = t.space();
    SparseTensor result(space);
    for (const auto& [e, c] : t.entries()) {
        std::vector<std::pair<std::vector<int>, Rat>> acc{{{}, c}};
        for (int k = 0; k < space.factors(); ++k) {
            const auto img = factor_image(space.degrees()[k], e.e[k], g);
            std::vector<std::pair<std::vector<int>, Rat>> next;
            next.reserve(acc.size() * img.size());
            for (const auto& [prefix, c0] : acc)
                for (const auto& [ek, c1] : img) {
                    auto idx = prefix;
                    idx.push_back(ek);
                    next.emplace_back(std::move(idx), c0 * c1);
                }
            acc = std::move(next);
        }
        for (auto& [idx, cc] : acc) result.add_term(BasisIndex{std::move(idx)}, cc);
    }
    return result;
}

SparseTensor act_lie(LieGenerator x, const SparseTensor& t) {
    const TensorSpace& space = t.space();
    SparseTensor result(space);
    for (const auto& [e, c] : t.entries()) {
        for (int k = 0; k < space.factors(); ++k) {
            const int r = e.e[k];
            const int p = space.degrees()[k] - r;
            switch (x) {
            case LieGenerator::E:
                if (r > 0) {
                    BasisIndex e2 = e;
                    --e2.e[k];
                    result.add_term(e2, c * r);
                }
                break;
            case LieGenerator::F:
                if (p > 0) {
                    BasisIndex e2 = e;
                    ++e2.e[k];
                    result.add_term(e2, c * p);
                }
                break;
            case LieGenerator::H:
                if (p != r) result.add_term(e, c * (p - r));
                break;
            }
        }
    }
    return result;
}

int weight(const TensorSpace& space, const BasisIndex& e) {
    if (static_cast<int>(e.e.size()) != space.factors())
        throw std::invalid_argument("basis index has wrong number of factors");
    int w = 0;
    for (int k = 0; k < space.factors(); ++k) {
        if (e.e[k] < 0 || e.e[k] > space.degrees()[k])
            throw std::invalid_argument("basis index exponent out of range");
        w += space.degrees()[k] - 2 * e.e[k];
    }
    return w;
}

} // namespace sl2op
