#pragma once

#include "concordance/linkform.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace concordance::cgmodel {

using linkform::Subgroup;
using linkform::Vec;

/// How the companion signatures sigma', sigma''_i, sigma'''_i are chosen.
enum class SchedulePolicy {
    /// sigma_1 = 2B + 1, sigma_{i+1} = 2 (sigma_1 + ... + sigma_i) + B + 1. Large enough that
    /// coefficient differences in {-2, ..., 2} can never cancel.
    separating,
    /// sigma_1 = 2B + 1, sigma_{i+1} = 2 sigma_i + 1.
    doubling,
};

/// One two-component sublink: a_k paired with b_l, or with a_N when l == 0.
struct LinkEntry {
    int k;
    int l;
    std::string label() const;
};

/// The knot K* of genus N: H = (Z/3)^{2N} with basis a_1, b_1, ..., a_N, b_N and
/// beta(a_i, b_i) = 1/3, a base function m -> sigma(K, chi_m) and the schedule of
/// companion signatures in the order sigma', sigma''_1..N, sigma'''_1..N^2-1.
class CGConfiguration {
public:
    /// `base` is indexed by element_code and must be even, vanish at 0 and be bounded by B.
    CGConfiguration(int n, std::vector<Rational> base, Rational bound,
                    SchedulePolicy policy = SchedulePolicy::separating);
    CGConfiguration(int n, std::vector<Rational> base, Rational bound, std::vector<Rational> schedule);
    static CGConfiguration zero_base(int n, SchedulePolicy policy = SchedulePolicy::separating);

    int genus() const { return n_; }
    const Rational& bound() const { return bound_; }
    const linkform::FiniteLinkingForm& form() const { return form_; }
    const std::vector<LinkEntry>& links() const { return links_; }
    const std::vector<Rational>& schedule() const { return schedule_; }
    const Rational& base(const Vec& m) const;

    Vec a(int i) const;  // 1-based
    Vec b(int i) const;
    /// 3^{2N} elements, first coordinate fastest.
    std::vector<Vec> elements() const;

    /// sigma_1 > 2B and every later value more than doubles the previous one.
    bool schedule_doubles() const;
    /// Every value exceeds twice the sum of the earlier ones plus B.
    bool schedule_separates() const;

private:
    int n_;
    Rational bound_;
    linkform::FiniteLinkingForm form_;
    std::vector<LinkEntry> links_;
    std::vector<Rational> base_;
    std::vector<Rational> schedule_;
};

std::size_t element_code(const Vec& m);
/// Even base function with integer values drawn uniformly from [-bound, bound].
std::vector<Rational> random_even_base(int n, long bound, std::mt19937_64& rng);
std::vector<Rational> make_schedule(int n, const Rational& bound, SchedulePolicy policy);

struct Coefficients {
    int c = 0;
    std::vector<int> d;
    std::vector<int> e;  // e_i - e'_i per link entry

    /// C, then D, then E, matching the schedule order.
    std::vector<int> flat() const;
    friend bool operator==(const Coefficients& x, const Coefficients& y) {
        return x.c == y.c && x.d == y.d && x.e == y.e;
    }
};

Coefficients coefficients(const CGConfiguration& cfg, const Vec& m);
Rational cg_value(const CGConfiguration& cfg, const Vec& m);
/// Value on the connected sum at chi_{m1} (+) chi_{m2}, m given in H_1 (+) H_2 coordinates.
Rational cg_value_sum(const CGConfiguration& first, const CGConfiguration& second, const Vec& m);

struct SeparationReport {
    bool distinct_patterns_separate = true;  // coefficients differ => values differ
    bool equal_patterns_agree = true;        // coefficients agree => values agree
    std::optional<std::pair<Vec, Vec>> collision;
    std::optional<std::pair<Vec, Vec>> split_pattern;
    bool holds() const { return distinct_patterns_separate && equal_patterns_agree; }
};

/// Exhaustive over all pairs in H. No precondition on the schedule.
SeparationReport separation(const CGConfiguration& cfg);
/// Both directions over all pairs; throws DomainError if the schedule does not double.
bool separation_property(const CGConfiguration& cfg);

/// Subgroup of H spanned by b_1, ..., b_{N-1}.
Subgroup b_span(const CGConfiguration& cfg);

struct SupportReport {
    std::size_t metabolizers = 0;
    std::size_t candidates = 0;  // (M_K, M_0 != 0) with cg_value constant on the cosets
    std::size_t outside = 0;     // candidates with M_0 not inside b_span
    bool holds() const { return outside == 0; }
};

SupportReport verify_m0_support(const CGConfiguration& cfg);

struct NonconstancyCase {
    Subgroup m_k;
    Subgroup m_0;
    Vec first;   // coset member
    Vec second;  // same coset, different value
    Rational first_value;
    Rational second_value;
    std::string link;         // first coefficient that tells the two apart
    bool proof_witness_ok;    // the pair (m, m - m_0) built as in the hand argument also separates
};

struct NonconstancyReport {
    int n = 0;
    bool applicable = false;
    std::size_t metabolizers = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;  // cases where cg_value is constant on every coset
    std::vector<NonconstancyCase> rows;
    std::optional<std::string> first_failure;  // the first (M_K, M_0) with constant cosets
    bool all_pass() const { return applicable && failures == 0; }
    std::string table() const;
};

/// Every metabolizer M_K and every nontrivial M_0 inside M_K ∩ b_span.
NonconstancyReport verify_nonconstancy(const CGConfiguration& cfg);
NonconstancyReport verify_nonconstancy(int n);

}  // namespace concordance::cgmodel
