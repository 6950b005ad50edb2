#include "concordance/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace concordance::bounds {

int gc_polynomial_bound(const laurent::NormalizedAlexander& delta) {
    if (!delta.is_knot_polynomial()) throw DomainError("not a knot polynomial: |p(1)| != 1");
    int degree = 0;
    for (const auto& f : laurent::factor(delta).factors)
        if (f.multiplicity % 2 == 1 && laurent::is_symmetric(f.poly)) degree += f.poly.degree();
    return degree / 2;
}

int gc_milnor_bound(const seifert::SeifertMatrix& v, MilnorMode mode) {
    std::map<ZPoly, std::vector<int>> by_factor;  // |k| per root angle
    for (const auto& m : seifert::milnor_signatures(v)) by_factor[m.at.factor].push_back(std::abs(m.value) / 2);
    int total = 0;  // sum of |k| deg p
    for (const auto& [p, ks] : by_factor) {
        int k = mode == MilnorMode::strict ? std::accumulate(ks.begin(), ks.end(), 0)
                                           : *std::max_element(ks.begin(), ks.end());
        total += k * p.degree();
    }
    return total / 2;
}

int g4_signature_bound(int signature) { return (std::abs(signature) + 1) / 2; }

int g4_signature_bound(const seifert::SeifertMatrix& v) {
    return g4_signature_bound(seifert::classical_signature(v));
}

std::string to_string(Status s) {
    switch (s) {
        case Status::slice: return "slice";
        case Status::polynomial: return "polynomial";
        case Status::concordance: return "concordance";
        case Status::unresolved: return "unresolved";
    }
    return "?";
}

namespace {

std::string range_text(int lo, const std::optional<int>& hi) {
    if (hi && *hi == lo) return std::to_string(lo);
    return std::to_string(lo) + ".." + (hi ? std::to_string(*hi) : std::string("?"));
}

}  // namespace

std::string GenusBounds::g4_text() const { return range_text(g4_lower, g4_upper); }
std::string GenusBounds::gc_text() const { return range_text(gc_lower, gc_upper); }

GenusBounds combine_bounds(const BoundInputs& in) {
    GenusBounds b;
    b.genus = in.genus;
    if (!b.genus && in.seifert) b.genus = in.seifert->genus_bound();

    const int poly = gc_polynomial_bound(in.delta);
    b.gc_lower = poly;
    b.provenance.push_back("polynomial");
    if (in.seifert) {
        const int milnor = gc_milnor_bound(*in.seifert, in.milnor);
        if (milnor > b.gc_lower) b.gc_lower = milnor;
        b.provenance.push_back("milnor");
        b.g4_lower = g4_signature_bound(*in.seifert);
        b.provenance.push_back("signature");
    } else if (in.abs_signature) {
        b.g4_lower = g4_signature_bound(*in.abs_signature);
        b.provenance.push_back("signature");
    }

    b.g4_upper = in.g4_upper;
    if (in.slice) b.g4_upper = 0;
    if (!b.g4_upper) b.g4_upper = b.genus;
    if (in.slice) b.gc_upper = 0;
    else if (in.concordance_gc) b.gc_upper = in.concordance_gc;
    else b.gc_upper = b.genus;

    const std::string what = "inconsistent genus bounds: ";
    if (b.genus && b.gc_lower > *b.genus)
        throw IntegrityError(what + "g_c lower bound " + std::to_string(b.gc_lower) + " exceeds genus " +
                             std::to_string(*b.genus));
    if (b.gc_upper && b.gc_lower > *b.gc_upper)
        throw IntegrityError(what + "g_c lower bound " + std::to_string(b.gc_lower) + " exceeds known upper bound " +
                             std::to_string(*b.gc_upper));
    if (b.g4_upper && b.g4_lower > *b.g4_upper)
        throw IntegrityError(what + "g_4 lower bound " + std::to_string(b.g4_lower) + " exceeds upper bound " +
                             std::to_string(*b.g4_upper));

    if (in.slice)
        b.status = Status::slice;
    else if (b.genus && b.gc_lower == *b.genus)
        b.status = Status::polynomial;
    else if (in.concordance_gc && *in.concordance_gc == b.gc_lower)
        b.status = Status::concordance;
    else
        b.status = Status::unresolved;
    return b;
}

}  // namespace concordance::bounds
