#pragma once

#include <optional>
#include <vector>

#include "sl2op/numeric.hpp"

namespace sl2op::ratlin {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row-major, rectangular

int rank(Mat a);
bool is_invertible(const Mat& a);

// Reduced row echelon form; pivot_cols receives the pivot column of each
// nonzero row.
Mat rref(Mat a, std::vector<int>* pivot_cols = nullptr);

// Canonical (reduced-echelon) basis of { v : a v = 0 }.
std::vector<Vec> nullspace(const Mat& a);

// Unique solution of a x = b for square a; nullopt if singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

} // namespace sl2op::ratlin
