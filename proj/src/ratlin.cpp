#include "sl2op/ratlin.hpp"

#include <stdexcept>

namespace sl2op::ratlin {

namespace {

size_t cols_of(const Mat& a) {
    if (a.empty()) return 0;
    const size_t c = a.front().size();
    for (const Vec& row : a)
        if (row.size() != c) throw std::invalid_argument("ragged matrix");
    return c;
}

// row_i -= f * row_p, starting at column `from`; skips zero entries of
// the pivot row.
void eliminate(Vec& row_i, const Vec& row_p, const Rat& f, size_t from) {
    for (size_t j = from; j < row_i.size(); ++j)
        if (row_p[j] != 0) row_i[j] -= f * row_p[j];
}

} // namespace

int rank(Mat a) {
    const size_t rows = a.size();
    const size_t cols = cols_of(a);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Rat f = a[i][col] / a[r][col];
            a[i][col] = 0;
            eliminate(a[i], a[r], f, col + 1);
        }
        ++r;
    }
    return static_cast<int>(r);
}

bool is_invertible(const Mat& a) {
    if (a.empty()) return true;
    if (a.size() != cols_of(a)) return false;
    return rank(a) == static_cast<int>(a.size());
}

Mat rref(Mat a, std::vector<int>* pivot_cols) {
    const size_t rows = a.size();
    const size_t cols = cols_of(a);
    if (pivot_cols) pivot_cols->clear();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Rat inv = Rat(1) / a[r][col];
        for (size_t j = col; j < cols; ++j)
            if (a[r][j] != 0) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            a[i][col] = 0;
            eliminate(a[i], a[r], f, col + 1);
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(col));
        ++r;
    }
    return a;
}

std::vector<Vec> nullspace(const Mat& a) {
    const size_t cols = cols_of(a);
    std::vector<int> pivots;
    const Mat r = rref(a, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Rat(0));
        v[f] = 1;
        for (size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r[row][f];
        basis.push_back(std::move(v));
    }
    // already echelon up to ordering of free columns; one more pass makes
    // the output literally reduced-echelon
    if (!basis.empty()) basis = rref(std::move(basis));
    return basis;
}

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
    const size_t n = a.size();
    if (cols_of(a) != n || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
    Mat aug(n, Vec(n + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    std::vector<int> pivots;
    const Mat r = rref(std::move(aug), &pivots);
    if (pivots.size() != n || pivots.back() >= static_cast<int>(n)) return std::nullopt;
    Vec x(n, Rat(0));
    for (size_t row = 0; row < n; ++row) x[pivots[row]] = r[row][n];
    return x;
}

} // namespace sl2op::ratlin
