#pragma once
#include <vector>

#include "fogq/rational.hpp"

namespace fogq {

// row-style Hermite echelon of an integer generating set: pivots positive,
// entries above a pivot reduced, zero rows dropped. Rows may be dependent.
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows, int cols);

// Lenstra-Lenstra-Lovasz reduction with delta = 3/4 over exact rationals.
// Input rows must be linearly independent (run hnf_rows first).
std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>> rows);

} // namespace fogq
