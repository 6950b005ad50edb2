#include "concordance/cgmodel.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace concordance::cgmodel {

namespace {

constexpr long p = 3;

std::size_t element_count(int n) {
    std::size_t c = 1;
    for (int i = 0; i < 2 * n; ++i) c *= p;
    return c;
}

Vec sub(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i] - y[i], p);
    return r;
}

Vec negated(const Vec& x) { return sub(Vec(x.size(), 0), x); }

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<LinkEntry> link_entries(int n) {
    std::vector<LinkEntry> out;
    for (int k = 1; k < n; ++k)
        for (int l = 1; l <= n; ++l) out.push_back({k, l});
    for (int k = 1; k < n; ++k) out.push_back({k, 0});
    return out;
}

std::string coefficient_label(const CGConfiguration& cfg, std::size_t idx) {
    const auto n = static_cast<std::size_t>(cfg.genus());
    if (idx == 0) return "L'";
    if (idx <= n) return "L''" + std::to_string(idx);
    return "L'''" + std::to_string(idx - n) + cfg.links()[idx - n - 1].label();
}

std::vector<Rational> values_of(const CGConfiguration& cfg, const std::vector<Vec>& elems) {
    std::vector<Rational> v;
    v.reserve(elems.size());
    for (const auto& m : elems) v.push_back(cg_value(cfg, m));
    return v;
}

}  // namespace

std::string LinkEntry::label() const {
    return "(a" + std::to_string(k) + "," + (l == 0 ? std::string("aN") : "b" + std::to_string(l)) + ")";
}

std::size_t element_code(const Vec& m) {
    std::size_t c = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) c = c * p + static_cast<std::size_t>(mod_floor(*it, p));
    return c;
}

std::vector<Rational> make_schedule(int n, const Rational& bound, SchedulePolicy policy) {
    const std::size_t len = static_cast<std::size_t>(n * n + n);
    std::vector<Rational> s{2 * bound + 1};
    Rational total = s[0];
    while (s.size() < len) {
        Rational next = policy == SchedulePolicy::separating ? Rational(2 * total + bound + 1)
                                                             : Rational(2 * s.back() + 1);
        s.push_back(next);
        total += next;
    }
    return s;
}

CGConfiguration::CGConfiguration(int n, std::vector<Rational> base, Rational bound, SchedulePolicy policy)
    : CGConfiguration(n, std::move(base), bound, make_schedule(n, bound, policy)) {}

CGConfiguration::CGConfiguration(int n, std::vector<Rational> base, Rational bound, std::vector<Rational> schedule)
    : n_(n),
      bound_(std::move(bound)),
      form_(linkform::hyperbolic(p, std::max(n, 1))),
      links_(link_entries(n)),
      base_(std::move(base)),
      schedule_(std::move(schedule)) {
    if (n < 1) throw DomainError("genus parameter must be at least 1");
    if (bound_ < 0) throw DomainError("base bound must be nonnegative");
    if (base_.size() != element_count(n)) throw DomainError("base function needs one value per element of H");
    if (schedule_.size() != static_cast<std::size_t>(n * n + n))
        throw DomainError("schedule needs N^2 + N values");
    for (const auto& s : schedule_)
        if (s <= 0) throw DomainError("schedule values must be positive");
    if (base_[0] != 0) throw DomainError("base function must vanish on the trivial character");
    for (const auto& m : elements()) {
        const Rational& v = base_[element_code(m)];
        if (abs(v) > bound_) throw DomainError("base function exceeds its bound");
        if (v != base_[element_code(negated(m))]) throw DomainError("base function must be even");
    }
}

CGConfiguration CGConfiguration::zero_base(int n, SchedulePolicy policy) {
    return CGConfiguration(n, std::vector<Rational>(element_count(std::max(n, 1)), Rational(0)), Rational(0), policy);
}

std::vector<Rational> random_even_base(int n, long bound, std::mt19937_64& rng) {
    if (n < 1 || bound < 0) throw DomainError("random_even_base needs n >= 1 and bound >= 0");
    const auto elements = CGConfiguration::zero_base(n).elements();
    std::vector<Rational> base(elements.size(), Rational(0));
    std::uniform_int_distribution<long> pick(-bound, bound);
    for (const auto& m : elements) {
        const auto c = element_code(m), cn = element_code(negated(m));
        if (c == 0 || cn < c) continue;
        base[c] = base[cn] = pick(rng);
    }
    return base;
}

const Rational& CGConfiguration::base(const Vec& m) const { return base_[element_code(m)]; }

Vec CGConfiguration::a(int i) const {
    Vec v(2 * n_, 0);
    v[2 * (i - 1)] = 1;
    return v;
}

Vec CGConfiguration::b(int i) const {
    Vec v(2 * n_, 0);
    v[2 * (i - 1) + 1] = 1;
    return v;
}

std::vector<Vec> CGConfiguration::elements() const {
    return linkform::Subgroup(p, 2 * n_, [this] {
               std::vector<Vec> e;
               for (int i = 1; i <= n_; ++i) {
                   e.push_back(a(i));
                   e.push_back(b(i));
               }
               return e;
           }())
        .elements();
}

bool CGConfiguration::schedule_doubles() const {
    if (schedule_[0] <= 2 * bound_) return false;
    for (std::size_t i = 1; i < schedule_.size(); ++i)
        if (schedule_[i] <= 2 * schedule_[i - 1]) return false;
    return true;
}

bool CGConfiguration::schedule_separates() const {
    Rational total = 0;
    for (const auto& s : schedule_) {
        if (s <= 2 * total + bound_) return false;
        total += s;
    }
    return true;
}

std::vector<int> Coefficients::flat() const {
    std::vector<int> out{c};
    out.insert(out.end(), d.begin(), d.end());
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

Coefficients coefficients(const CGConfiguration& cfg, const Vec& m) {
    const auto& L = cfg.form();
    const int n = cfg.genus();
    auto nonzero = [&](const Vec& x) { return L.pair(x, m) != 0 ? 1 : 0; };
    Coefficients c;
    c.c = nonzero(cfg.a(n));
    for (int i = 1; i <= n; ++i) c.d.push_back(nonzero(cfg.b(i)));
    for (const auto& entry : cfg.links()) {
        Vec ak = cfg.a(entry.k);
        Vec x = entry.l == 0 ? cfg.a(n) : cfg.b(entry.l);
        Vec sum(ak.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (ak[i] + x[i]) % p;
        c.e.push_back(nonzero(ak) - nonzero(sum));
    }
    return c;
}

Rational cg_value(const CGConfiguration& cfg, const Vec& m) {
    Rational v = cfg.base(m);
    const auto k = coefficients(cfg, m).flat();
    for (std::size_t i = 0; i < k.size(); ++i) v += 2 * k[i] * cfg.schedule()[i];
    return v;
}

Rational cg_value_sum(const CGConfiguration& first, const CGConfiguration& second, const Vec& m) {
    const auto split = static_cast<long>(first.form().rank());
    if (m.size() != first.form().rank() + second.form().rank()) throw DomainError("element has the wrong length");
    Vec m1(m.begin(), m.begin() + split), m2(m.begin() + split, m.end());
    auto k = coefficients(first, m1).flat();
    const auto k2 = coefficients(second, m2).flat();
    k.insert(k.end(), k2.begin(), k2.end());
    auto sched = first.schedule();
    sched.insert(sched.end(), second.schedule().begin(), second.schedule().end());
    Rational v = first.base(m1) + second.base(m2);
    for (std::size_t i = 0; i < k.size(); ++i) v += 2 * k[i] * sched[i];
    return v;
}

SeparationReport separation(const CGConfiguration& cfg) {
    SeparationReport r;
    std::map<std::vector<int>, std::pair<Vec, Rational>> by_pattern;
    std::map<Rational, std::pair<Vec, std::vector<int>>> by_value;
    for (const auto& m : cfg.elements()) {
        const auto k = coefficients(cfg, m).flat();
        const Rational v = cg_value(cfg, m);
        auto [pit, pnew] = by_pattern.try_emplace(k, m, v);
        if (!pnew && pit->second.second != v) {
            r.equal_patterns_agree = false;
            if (!r.split_pattern) r.split_pattern = {pit->second.first, m};
        }
        auto [vit, vnew] = by_value.try_emplace(v, m, k);
        if (!vnew && vit->second.second != k) {
            r.distinct_patterns_separate = false;
            if (!r.collision) r.collision = {vit->second.first, m};
        }
    }
    return r;
}

bool separation_property(const CGConfiguration& cfg) {
    if (!cfg.schedule_doubles()) throw DomainError("schedule violates the doubling condition");
    return separation(cfg).holds();
}

Subgroup b_span(const CGConfiguration& cfg) {
    std::vector<Vec> gens;
    for (int i = 1; i < cfg.genus(); ++i) gens.push_back(cfg.b(i));
    return Subgroup(p, cfg.form().rank(), gens);
}

SupportReport verify_m0_support(const CGConfiguration& cfg) {
    SupportReport r;
    const Subgroup bs = b_span(cfg);
    const auto values = values_of(cfg, cfg.elements());
    auto value = [&](const Vec& m) { return values[element_code(m)]; };
    for (const auto& mk : linkform::enumerate_metabolizers(cfg.form())) {
        ++r.metabolizers;
        const auto members = mk.elements();
        for (const auto& m0 : linkform::subgroups_of(mk)) {
            if (m0.rank() == 0) continue;
            bool constant = true;
            for (const auto& x : members)
                for (const auto& z : m0.elements())
                    constant = constant && value(x) == value(sub(x, z));
            if (!constant) continue;
            ++r.candidates;
            r.outside += !bs.contains(m0);
        }
    }
    return r;
}

namespace {

// The hand argument: normalize m_0 to have b_k coefficient 1, take m in M_K outside
// b_span with the same b_k coefficient and some a_i or b_N coefficient equal to 1, and
// compare m with m - m_0 on the sublink pairing a_k with that basis element.
bool proof_witness(const CGConfiguration& cfg, const Subgroup& mk, const Subgroup& m0,
                   const std::function<Rational(const Vec&)>& value) {
    const int n = cfg.genus();
    const Subgroup bs = b_span(cfg);
    Vec z;
    for (const auto& x : m0.elements())
        if (element_code(x) != 0) {
            z = x;
            break;
        }
    int k = 1;
    while (z[2 * (k - 1) + 1] == 0) ++k;
    if (z[2 * (k - 1) + 1] == 2) z = negated(z);
    for (const auto& m : mk.elements()) {
        if (bs.contains(m) || m[2 * (k - 1) + 1] != 1) continue;
        int l = -1;
        for (int i = 1; i <= n && l < 0; ++i)
            if (m[2 * (i - 1)] == 1) l = i;
        if (l < 0 && m[2 * (n - 1) + 1] == 1) l = 0;
        if (l < 0) continue;
        std::size_t idx = 0;
        while (!(cfg.links()[idx].k == k && cfg.links()[idx].l == l)) ++idx;
        const Vec other = sub(m, z);
        return coefficients(cfg, m).e[idx] == 0 && coefficients(cfg, other).e[idx] == -1 && value(m) != value(other);
    }
    return false;
}

}  // namespace

NonconstancyReport verify_nonconstancy(const CGConfiguration& cfg) {
    NonconstancyReport r;
    r.n = cfg.genus();
    r.applicable = cfg.genus() >= 2;
    if (!r.applicable) return r;
    const Subgroup bs = b_span(cfg);
    const auto values = values_of(cfg, cfg.elements());
    auto value = [&](const Vec& m) { return values[element_code(m)]; };
    for (const auto& mk : linkform::enumerate_metabolizers(cfg.form())) {
        ++r.metabolizers;
        const auto members = mk.elements();
        std::vector<Vec> common;
        for (const auto& x : members)
            if (bs.contains(x)) common.push_back(x);
        for (const auto& m0 : linkform::subgroups_of(Subgroup(p, cfg.form().rank(), common))) {
            if (m0.rank() == 0) continue;
            ++r.cases;
            std::optional<NonconstancyCase> row;
            for (const auto& x : members) {
                for (const auto& z : m0.elements()) {
                    const Vec y = sub(x, z);
                    if (value(x) == value(y)) continue;
                    const auto kx = coefficients(cfg, x).flat(), ky = coefficients(cfg, y).flat();
                    std::size_t idx = 0;
                    while (idx < kx.size() && kx[idx] == ky[idx]) ++idx;
                    row = NonconstancyCase{mk,       m0,       x, y, value(x), value(y),
                                           idx < kx.size() ? coefficient_label(cfg, idx) : "base",
                                           proof_witness(cfg, mk, m0, value)};
                    break;
                }
                if (row) break;
            }
            if (row) {
                r.rows.push_back(std::move(*row));
            } else {
                if (!r.first_failure) r.first_failure = "M_K=[" + mk.str() + "] M_0=[" + m0.str() + "]";
                ++r.failures;
            }
        }
    }
    return r;
}

NonconstancyReport verify_nonconstancy(int n) {
    if (n > 3) throw DomainError("exhaustive nonconstancy check is limited to N <= 3");
    if (n < 2) {
        NonconstancyReport r;
        r.n = n;
        return r;
    }
    return verify_nonconstancy(CGConfiguration::zero_base(n));
}

std::string NonconstancyReport::table() const {
    std::ostringstream out;
    out << "N=" << n << " metabolizers=" << metabolizers << " cases=" << cases << " failures=" << failures
        << (applicable ? "" : " (inapplicable)") << '\n';
    for (const auto& row : rows)
        out << "M_K=[" << row.m_k.str() << "] M_0=[" << row.m_0.str() << "] m=" << vec_str(row.first)
            << " m'=" << vec_str(row.second) << " link=" << row.link << " values=" << to_string(row.first_value)
            << "/" << to_string(row.second_value) << (row.proof_witness_ok ? " proof-pair" : "") << '\n';
    return out.str();
}

}  // namespace concordance::cgmodel
