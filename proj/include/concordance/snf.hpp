#pragma once

#include "concordance/matrix.hpp"

#include <vector>

namespace concordance {

/// U * A * W = D with U, W unimodular and D diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
    IntMatrix U, D, W;
    std::vector<Integer> diagonal() const;
};

/// Deterministic pivot rule: the entry of least nonzero absolute value in the
/// remaining block, first in row-major order.
SmithForm smith_normal_form(const IntMatrix& A);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace concordance
