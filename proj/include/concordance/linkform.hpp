#pragma once

#include "concordance/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concordance::linkform {

/// Coordinates of a group element, entry i taken mod p^{k_i}.
using Vec = std::vector<long>;

/// Nonsingular symmetric pairing on H = (+)_i Z/p^{k_i}, stored as a matrix of
/// fractions in [0, 1). Most operations need the homogeneous case k_i = 1.
class FiniteLinkingForm {
public:
    /// Throws DomainError unless the matrix is symmetric mod 1, compatible with
    /// the summand orders and nonsingular.
    FiniteLinkingForm(long p, std::vector<int> exponents, const RatMatrix& pairing);
    /// Homogeneous (Z/p)^r.
    FiniteLinkingForm(long p, const RatMatrix& pairing);

    long prime() const { return p_; }
    std::size_t rank() const { return exponents_.size(); }
    const std::vector<int>& exponents() const { return exponents_; }
    const RatMatrix& pairing() const { return pairing_; }
    bool homogeneous() const;
    Integer order() const;

    /// p * beta(x, y) mod p, for homogeneous forms.
    long pair(const Vec& x, const Vec& y) const;
    /// p * beta(e_i, e_j) mod p, for homogeneous forms.
    long numerator(std::size_t i, std::size_t j) const { return num_[i][j]; }

    std::string str() const;
    friend bool operator==(const FiniteLinkingForm& a, const FiniteLinkingForm& b) {
        return a.p_ == b.p_ && a.exponents_ == b.exponents_ && a.pairing_ == b.pairing_;
    }

private:
    void require_homogeneous() const;

    long p_;
    std::vector<int> exponents_;
    RatMatrix pairing_;
    std::vector<std::vector<long>> num_;
};

/// p-primary part of the linking form of the double branched cover, in the
/// basis given by the Smith normal form transform of V + V^t.
FiniteLinkingForm from_seifert(const seifert::SeifertMatrix& v, long p);

/// (Z/p)^{2g} with g blocks [[0, 1/p], [1/p, 0]].
FiniteLinkingForm hyperbolic(long p, int g);
FiniteLinkingForm orthogonal_sum(const FiniteLinkingForm& a, const FiniteLinkingForm& b);
FiniteLinkingForm negate(const FiniteLinkingForm& a);

/// Subgroup of a homogeneous (Z/p)^n, held as a reduced row echelon basis, so
/// equal subgroups have equal representations.
class Subgroup {
public:
    Subgroup(long p, std::size_t n, const std::vector<Vec>& generators);

    long prime() const { return p_; }
    std::size_t ambient_rank() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    Integer order() const;

    bool contains(const Vec& x) const;
    bool contains(const Subgroup& s) const;
    /// All p^rank elements in a fixed order (coefficient vectors counted base p).
    std::vector<Vec> elements() const;
    /// "1,0,0,0;0,0,1,0", or "0" for the trivial subgroup.
    std::string str() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.basis_ < b.basis_; }

private:
    long p_;
    std::size_t n_;
    std::vector<Vec> basis_;
};

/// Every subgroup of S, smallest rank first.
std::vector<Subgroup> subgroups_of(const Subgroup& S);

Subgroup whole_group(const FiniteLinkingForm& L);
Subgroup zero_subgroup(const FiniteLinkingForm& L);

/// {x : beta(x, s) = 0 for all s in S}.
Subgroup annihilator(const FiniteLinkingForm& L, const Subgroup& S);
bool is_isotropic(const FiniteLinkingForm& L, const Subgroup& S);
/// M = M^perp.
bool is_metabolizer(const FiniteLinkingForm& L, const Subgroup& M);

/// Every metabolizer, ordered by pivot columns and then by echelon entries.
/// Throws DomainError when none can exist (odd rank or non-homogeneous form).
std::vector<Subgroup> enumerate_metabolizers(const FiniteLinkingForm& L);

/// chi_m(x) = beta(x, m), as the numerator p * beta mod p.
long character(const FiniteLinkingForm& L, const Vec& m, const Vec& x);

/// Basis e_1, f_1, ..., e_g, f_g with beta(e_i, f_i) = 1/p and all other pairings
/// zero, when the form (odd p) is hyperbolic.
std::optional<std::vector<Vec>> hyperbolic_basis(const FiniteLinkingForm& L);
/// The form expressed in a new basis (rows of `basis`).
FiniteLinkingForm change_basis(const FiniteLinkingForm& L, const std::vector<Vec>& basis);

}  // namespace concordance::linkform
