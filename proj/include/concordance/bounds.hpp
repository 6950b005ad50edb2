#pragma once

#include "concordance/laurent.hpp"
#include "concordance/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concordance::bounds {

/// Half the total degree of the symmetric irreducible factors of odd multiplicity.
int gc_polynomial_bound(const laurent::NormalizedAlexander& delta);

/// How Milnor signatures at several roots of one factor are combined.
enum class MilnorMode {
    max_per_factor,  ///< each factor contributes once, at its largest |sigma_theta|
    strict,          ///< every root angle contributes with the factor's degree
};

/// 1/2 sum |k_i| deg(p_i), where sigma_theta = 2k.
int gc_milnor_bound(const seifert::SeifertMatrix& v, MilnorMode mode = MilnorMode::max_per_factor);

/// ceil(|sigma| / 2).
int g4_signature_bound(const seifert::SeifertMatrix& v);
int g4_signature_bound(int signature);

enum class Status { slice, polynomial, concordance, unresolved };
std::string to_string(Status s);

struct BoundInputs {
    explicit BoundInputs(laurent::NormalizedAlexander d) : delta(std::move(d)) {}

    laurent::NormalizedAlexander delta;
    std::optional<seifert::SeifertMatrix> seifert;
    std::optional<int> genus;
    std::optional<int> abs_signature;  ///< used when no Seifert matrix is given
    std::optional<int> g4_upper;
    bool slice = false;
    std::optional<int> concordance_gc;  ///< g_c of a knot this one is known to be concordant to
    MilnorMode milnor = MilnorMode::max_per_factor;
};

struct GenusBounds {
    std::optional<int> genus;
    int g4_lower = 0;
    std::optional<int> g4_upper;
    int gc_lower = 0;
    std::optional<int> gc_upper;
    std::vector<std::string> provenance;  ///< rule tags behind the lower bounds
    Status status = Status::unresolved;

    bool gc_resolved() const { return gc_upper && *gc_upper == gc_lower; }
    /// "2", or "1..2" when only bounds are known.
    std::string g4_text() const;
    std::string gc_text() const;
};

/// Throws IntegrityError when the inputs contradict each other.
GenusBounds combine_bounds(const BoundInputs& in);

}  // namespace concordance::bounds
