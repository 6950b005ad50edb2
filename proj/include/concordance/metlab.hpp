#pragma once

#include "concordance/linkform.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace concordance::metlab {

using linkform::FiniteLinkingForm;
using linkform::Subgroup;
using linkform::Vec;

/// A metabolizer M# of beta_K (+) -beta_J cut along a metabolizer M_J of beta_J.
struct SplitData {
    FiniteLinkingForm form_k;
    FiniteLinkingForm form_j;
    FiniteLinkingForm ambient;
    Subgroup m_sharp;
    Subgroup m_j;
    Subgroup m_k;   // {m : (m, m') in M# for some m' in M_J}
    Subgroup m_0;   // {m : (m, 0) in M#}
    Subgroup m_j0;  // {m' : (0, m') in M#}
    /// M_{m'} = {m : (m, m') in M#} for every m' in M_J, empty fibers included.
    std::map<Vec, std::set<Vec>> fibers;

    std::string str() const;
};

/// Throws DomainError unless M# is a metabolizer of the ambient form and M_J one of beta_J.
SplitData split(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j, const Subgroup& m_sharp,
                const Subgroup& m_j);

/// Each nonempty M_{m'} is m + M_0 for every one of its members, and M_0 is closed.
bool verify_coset_lemma(const SplitData& s);
/// M_{m'} -> m' is well defined, additive and injective into M_J / (M_J ∩ M_{J,0}).
bool verify_injection_lemma(const SplitData& s);
/// M_K is a metabolizer of beta_K and is the union of the fibers.
bool verify_metabolizer_theorem(const SplitData& s);

/// |M_K / M_0| and |M_J / (M_J ∩ M_{J,0})|.
Integer quotient_order_k(const SplitData& s);
Integer quotient_order_j(const SplitData& s);

/// Largest ambient group order an exhaustive sweep will take on.
inline constexpr long sweep_bound = 59049;  // 3^10

struct SweepReport {
    std::size_t splits = 0;
    std::size_t coset_failures = 0;
    std::size_t injection_failures = 0;
    std::size_t metabolizer_failures = 0;
    std::optional<std::string> first_counterexample;  // canonical order: M# first, then M_J

    bool all_hold() const { return coset_failures + injection_failures + metabolizer_failures == 0; }
};

/// Every lemma on every (M#, M_J) pair, with M# and M_J enumerated exhaustively.
SweepReport sweep_lemmas(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j);

struct NontrivialM0Report {
    bool applicable = false;  // H_K = (Z_p)^{2g} and every M_J has rank < g
    long p = 0;
    int g = 0;
    int metabolizer_rank_j = 0;
    std::size_t sharps = 0;
    std::size_t pairs = 0;
    std::size_t pairs_nontrivial = 0;   // (M#, M_J) with M_0 != 0
    std::size_t sharps_nontrivial = 0;  // M# with M_0 != 0 for every M_J
    std::optional<std::string> first_counterexample;

    bool holds_for_all() const { return applicable && pairs_nontrivial == pairs; }
    bool holds_for_some() const { return applicable && sharps_nontrivial > 0; }
};

/// Runs the rank-counting argument for M_0 != 0 over every M# and every M_J.
NontrivialM0Report verify_nontrivial_m0(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j);

}  // namespace concordance::metlab
