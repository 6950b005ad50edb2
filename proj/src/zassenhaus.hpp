#pragma once

#include "concordance/upoly.hpp"

#include <vector>

namespace concordance::detail {

using FpPoly = std::vector<long>;  // little-endian, trimmed

FpPoly fp_reduce(const ZPoly& f, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p);
/// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<FpPoly> berlekamp(const FpPoly& f, long p);

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial with nonzero constant term.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/// Squarefree decomposition over Q: f = c * prod(parts[i]^(i+1)), parts primitive.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& f);

}  // namespace concordance::detail
