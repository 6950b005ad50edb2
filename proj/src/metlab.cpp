#include "concordance/metlab.hpp"

namespace concordance::metlab {

namespace {

Vec add(const Vec& a, const Vec& b, long p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

Vec sub(const Vec& a, const Vec& b, long p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i] - b[i], p);
    return r;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

Subgroup from_elements(long p, std::size_t n, const std::set<Vec>& elems) {
    return Subgroup(p, n, std::vector<Vec>(elems.begin(), elems.end()));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<Vec> common;
    for (const auto& x : a.elements())
        if (b.contains(x)) common.push_back(x);
    return Subgroup(a.prime(), a.ambient_rank(), common);
}

void check_bound(const FiniteLinkingForm& ambient) {
    if (!ambient.homogeneous() || ambient.order() > sweep_bound)
        throw DomainError("ambient group of order " + to_string(ambient.order()) + " exceeds the sweep bound 3^10");
}

}  // namespace

std::string SplitData::str() const {
    return "M#=[" + m_sharp.str() + "] M_J=[" + m_j.str() + "] M_K=[" + m_k.str() + "] M_0=[" + m_0.str() +
           "] M_J0=[" + m_j0.str() + "]";
}

SplitData split(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j, const Subgroup& m_sharp,
                const Subgroup& m_j) {
    FiniteLinkingForm ambient = linkform::orthogonal_sum(form_k, linkform::negate(form_j));
    if (m_sharp.ambient_rank() != ambient.rank() || !linkform::is_metabolizer(ambient, m_sharp))
        throw DomainError("M# is not a metabolizer of beta_K + (-beta_J)");
    if (m_j.ambient_rank() != form_j.rank() || !linkform::is_metabolizer(form_j, m_j))
        throw DomainError("M_J is not a metabolizer of beta_J");
    const long p = ambient.prime();
    const std::size_t nk = form_k.rank(), nj = form_j.rank();

    std::map<Vec, std::set<Vec>> fibers;
    for (const auto& mj : m_j.elements()) fibers[mj];
    std::set<Vec> mk, m0, mj0;
    for (const auto& z : m_sharp.elements()) {
        Vec m(z.begin(), z.begin() + static_cast<long>(nk));
        Vec mp(z.begin() + static_cast<long>(nk), z.end());
        if (auto it = fibers.find(mp); it != fibers.end()) {
            it->second.insert(m);
            mk.insert(m);
        }
        if (is_zero_vec(mp)) m0.insert(m);
        if (is_zero_vec(m)) mj0.insert(mp);
    }
    return SplitData{form_k,
                     form_j,
                     ambient,
                     m_sharp,
                     m_j,
                     from_elements(p, nk, mk),
                     from_elements(p, nk, m0),
                     from_elements(p, nj, mj0),
                     std::move(fibers)};
}

bool verify_coset_lemma(const SplitData& s) {
    const long p = s.ambient.prime();
    const auto m0 = s.fibers.at(Vec(s.form_j.rank(), 0));
    for (const auto& x : m0)
        for (const auto& y : m0)
            if (!m0.count(sub(x, y, p))) return false;
    for (const auto& [mp, fiber] : s.fibers)
        for (const auto& m : fiber) {
            std::set<Vec> coset;
            for (const auto& z : m0) coset.insert(add(m, z, p));
            if (coset != fiber) return false;
        }
    return true;
}

bool verify_injection_lemma(const SplitData& s) {
    const long p = s.ambient.prime();
    const Subgroup kernel = intersect(s.m_j, s.m_j0);
    std::vector<const std::pair<const Vec, std::set<Vec>>*> live;
    for (const auto& entry : s.fibers)
        if (!entry.second.empty()) live.push_back(&entry);
    for (const auto* a : live)
        for (const auto* b : live) {
            const bool same_class = a->second == b->second;
            const bool same_image = kernel.contains(sub(a->first, b->first, p));
            if (same_class != same_image) return false;  // well defined and injective
            // additivity: M_a + M_b lands inside M_{a+b}
            const auto& sum = s.fibers.at(add(a->first, b->first, p));
            if (!sum.count(add(*a->second.begin(), *b->second.begin(), p))) return false;
        }
    return true;
}

bool verify_metabolizer_theorem(const SplitData& s) {
    std::set<Vec> uni;
    for (const auto& [mp, fiber] : s.fibers) uni.insert(fiber.begin(), fiber.end());
    const auto elems = s.m_k.elements();
    return linkform::is_metabolizer(s.form_k, s.m_k) && uni == std::set<Vec>(elems.begin(), elems.end());
}

Integer quotient_order_k(const SplitData& s) { return s.m_k.order() / s.m_0.order(); }

Integer quotient_order_j(const SplitData& s) { return s.m_j.order() / intersect(s.m_j, s.m_j0).order(); }

SweepReport sweep_lemmas(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j) {
    const auto ambient = linkform::orthogonal_sum(form_k, linkform::negate(form_j));
    check_bound(ambient);
    const auto sharps = linkform::enumerate_metabolizers(ambient);
    const auto mjs = linkform::enumerate_metabolizers(form_j);
    SweepReport r;
    for (const auto& ms : sharps)
        for (const auto& mj : mjs) {
            const auto s = split(form_k, form_j, ms, mj);
            ++r.splits;
            bool coset = verify_coset_lemma(s), inj = verify_injection_lemma(s), met = verify_metabolizer_theorem(s);
            r.coset_failures += !coset;
            r.injection_failures += !inj;
            r.metabolizer_failures += !met;
            if (!(coset && inj && met) && !r.first_counterexample) r.first_counterexample = s.str();
        }
    return r;
}

NontrivialM0Report verify_nontrivial_m0(const FiniteLinkingForm& form_k, const FiniteLinkingForm& form_j) {
    NontrivialM0Report r;
    r.p = form_k.prime();
    r.g = static_cast<int>(form_k.rank() / 2);
    r.metabolizer_rank_j = static_cast<int>(form_j.rank() / 2);
    r.applicable = form_k.homogeneous() && form_k.rank() % 2 == 0 && form_j.rank() % 2 == 0 &&
                   r.metabolizer_rank_j < r.g;
    if (!r.applicable) return r;
    const auto ambient = linkform::orthogonal_sum(form_k, linkform::negate(form_j));
    check_bound(ambient);
    const auto sharps = linkform::enumerate_metabolizers(ambient);
    const auto mjs = linkform::enumerate_metabolizers(form_j);
    r.sharps = sharps.size();
    for (const auto& ms : sharps) {
        bool every = true;
        for (const auto& mj : mjs) {
            const auto s = split(form_k, form_j, ms, mj);
            ++r.pairs;
            if (s.m_0.rank() > 0) {
                ++r.pairs_nontrivial;
            } else {
                every = false;
                if (!r.first_counterexample) r.first_counterexample = s.str();
            }
        }
        r.sharps_nontrivial += every;
    }
    return r;
}

}  // namespace concordance::metlab
