#include "concordance/cli.hpp"

#include "concordance/bounds.hpp"
#include "concordance/cgmodel.hpp"
#include "concordance/knotdb.hpp"
#include "concordance/metlab.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace concordance::cli {

namespace {

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CommandResult guarded(const std::function<std::string()>& body) {
    CommandResult r;
    try {
        r.output = body();
    } catch (const VerificationFailure& e) {
        r.exit_code = exit_code::verification;
        r.error = e.what();
    } catch (const IntegrityError& e) {
        r.exit_code = exit_code::integrity;
        r.error = e.what();
    } catch (const DomainError& e) {
        r.exit_code = exit_code::domain;
        r.error = e.what();
    }
    return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

RatMatrix parse_rational_matrix(const std::string& text) {
    const auto rows = split(text, ';');
    if (rows.empty()) throw DomainError("empty pairing matrix");
    RatMatrix m(rows.size(), split(rows[0], ',').size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        if (cells.size() != m.cols()) throw DomainError("ragged pairing matrix");
        for (std::size_t j = 0; j < cells.size(); ++j) {
            Rational q;
            if (cells[j].empty() || q.set_str(cells[j], 10) != 0 || q.get_den() == 0)
                throw DomainError("not a fraction: '" + cells[j] + "'");
            q.canonicalize();
            m(i, j) = q;
        }
    }
    return m;
}

std::vector<knotdb::KnotRecord> load(const Options& opt) {
    return knotdb::load_table(opt.table.empty() ? knotdb::default_table_path() : opt.table);
}

bounds::MilnorMode milnor_mode(const Options& opt) {
    return opt.strict_milnor ? bounds::MilnorMode::strict : bounds::MilnorMode::max_per_factor;
}

std::string factorization_text(const laurent::IrreducibleFactorization& f) {
    std::string s = f.unit < 0 ? "-" : "";
    if (f.content != 1) s += to_string(f.content);
    for (const auto& factor : f.factors) {
        s += "(" + pretty(factor.poly) + ")";
        if (factor.multiplicity > 1) s += "^" + std::to_string(factor.multiplicity);
    }
    return s.empty() || s == "-" ? s + "1" : s;
}

std::string angle_text(double theta) { return fmt::format("{:.6f}pi", theta / M_PI); }

/// Collects key/value lines and renders them in either output format.
class Fields {
public:
    void add(const std::string& key, const std::string& label, const std::string& value) {
        rows_.push_back({key, label, value});
    }
    std::string render(Format format) const {
        std::string out;
        for (const auto& [key, label, value] : rows_)
            out += format == Format::machine ? key + "=" + value + "\n" : fmt::format("{:<28}{}\n", label + ":", value);
        return out;
    }

private:
    struct Row {
        std::string key, label, value;
    };
    std::vector<Row> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "machine") return Format::machine;
    throw DomainError("unknown format '" + name + "' (expected text or machine)");
}

CommandResult invariants(const std::string& input, const Options& opt) {
    return guarded([&] {
        const bool is_matrix = input.find(';') != std::string::npos;
        std::optional<seifert::SeifertMatrix> v;
        if (is_matrix) v = seifert::validate(input);
        const auto delta = v ? seifert::alexander_polynomial(*v) : laurent::normalize(laurent::parse_coefficients(input));
        if (!delta.is_knot_polynomial())
            throw DomainError("not a knot's Alexander polynomial: |Delta(1)| = " + to_string(Integer(abs(delta.at(1)))));

        Fields f;
        f.add("input", "input", is_matrix ? "seifert" : "alexander");
        f.add("alexander", "Alexander polynomial", pretty(delta.poly()));
        f.add("coefficients", "coefficients", laurent::format_coefficients(delta));
        f.add("factorization", "factorization", factorization_text(laurent::factor(delta)));
        f.add("symmetric", "symmetric", yes_no(laurent::is_symmetric(delta.poly())));
        f.add("determinant", "determinant |Delta(-1)|", to_string(Integer(abs(delta.at(-1)))));
        const auto fm = laurent::fox_milnor_test(delta);
        f.add("fox_milnor", "Fox-Milnor", fm ? "passes with f = " + fm->str() : "obstructed");
        const int poly = bounds::gc_polynomial_bound(delta);
        f.add("gc_polynomial", "g_c polynomial bound", std::to_string(poly));
        bool compatible = fm.has_value();

        if (!v) {
            f.add("gc_lower", "gc_lower", std::to_string(poly));
        } else {
            bounds::BoundInputs in(delta);
            in.seifert = v;
            in.milnor = milnor_mode(opt);
            const auto b = bounds::combine_bounds(in);
            const int sigma = seifert::classical_signature(*v);
            f.add("surface_genus", "surface genus", std::to_string(v->genus_bound()));
            f.add("signature", "signature", std::to_string(sigma));
            const auto h1 = seifert::branched_cover_homology(*v);
            f.add("h1", "H1(double branched cover)", h1.str());

            std::vector<std::string> jumps;
            for (const auto& j : seifert::signature_function(*v).jumps)
                jumps.push_back(fmt::format("{}:{:+d}", angle_text(j.at.theta()), j.size));
            f.add("tl_jumps", "Tristram-Levine jumps", jumps.empty() ? "none" : fmt::format("{}", fmt::join(jumps, " ")));

            std::vector<std::string> milnor;
            bool milnor_zero = true;
            for (const auto& m : seifert::milnor_signatures(*v)) {
                milnor.push_back(fmt::format("{}@{}:{:+d}", pretty(m.at.factor), angle_text(m.at.theta()), m.value));
                milnor_zero = milnor_zero && m.value == 0;
            }
            f.add("milnor", "Milnor signatures", milnor.empty() ? "none" : fmt::format("{}", fmt::join(milnor, " ")));
            f.add("gc_milnor", "g_c Milnor bound", std::to_string(bounds::gc_milnor_bound(*v, in.milnor)));
            f.add("g4_lower", "g_4 lower bound", std::to_string(b.g4_lower));
            f.add("gc_lower", "gc_lower", std::to_string(b.gc_lower));
            f.add("gc", "g_c", b.gc_text());
            compatible = compatible && sigma == 0 && milnor_zero;

            Integer rest = h1.order();
            for (long p = 2; rest > 1; ++p) {
                if (!is_prime(p) || rest % p != 0) continue;
                while (rest % p == 0) rest /= p;
                const auto form = linkform::from_seifert(*v, p);
                std::string verdict;
                if (!form.homogeneous() || form.order() > metlab::sweep_bound) {
                    verdict = "not checked";
                } else {
                    const auto n = form.rank() % 2 ? 0 : linkform::enumerate_metabolizers(form).size();
                    verdict = std::to_string(n);
                    compatible = compatible && n > 0;
                }
                f.add("metabolizers_" + std::to_string(p), fmt::format("metabolizers at p={}", p), verdict);
            }
        }
        f.add("verdict", "verdict", compatible ? "slice-compatible" : "not slice");
        return f.render(opt.format);
    });
}

CommandResult enumerate(const Options& opt) {
    return guarded([&] {
        const auto rep = knotdb::classify_all(load(opt), milnor_mode(opt));
        return opt.format == Format::machine ? rep.machine() : rep.text();
    });
}

CommandResult metabolizers(const FormSpec& spec, const Options& opt) {
    return guarded([&] {
        const int chosen = (spec.hyperbolic > 0) + !spec.seifert.empty() + !spec.pairing.empty();
        if (chosen != 1) throw DomainError("give exactly one of --hyperbolic, --seifert, --pairing");
        if (spec.prime < 2 || !is_prime(spec.prime)) throw DomainError("--prime must be a prime");
        const auto form = spec.hyperbolic > 0 ? linkform::hyperbolic(spec.prime, spec.hyperbolic)
                          : !spec.seifert.empty()
                              ? linkform::from_seifert(seifert::validate(spec.seifert), spec.prime)
                              : linkform::FiniteLinkingForm(spec.prime, parse_rational_matrix(spec.pairing));
        if (!form.homogeneous()) throw DomainError("metabolizer enumeration needs a form on (Z/p)^r");
        if (form.order() > metlab::sweep_bound)
            throw DomainError("group order " + to_string(form.order()) + " exceeds the enumeration bound");
        const auto all = form.rank() % 2 ? std::vector<linkform::Subgroup>{} : linkform::enumerate_metabolizers(form);
        std::string out;
        if (opt.format == Format::machine) {
            out = fmt::format("form={}\ncount={}\n", form.str(), all.size());
            for (const auto& m : all) out += "metabolizer=" + m.str() + "\n";
        } else {
            out = fmt::format("form: {}\nmetabolizers: {}\n", form.str(), all.size());
            for (const auto& m : all) out += "  [" + m.str() + "]\n";
        }
        return out;
    });
}

CommandResult verify_metabolizer_lemmas(long prime, int max_genus, const Options& opt) {
    return guarded([&] {
        if (prime < 2 || !is_prime(prime)) throw DomainError("--prime must be a prime");
        if (max_genus < 1) throw DomainError("--max-genus must be at least 1");
        std::string out, failure;
        for (int gk = 1; gk <= max_genus; ++gk) {
            for (int gj = 1; gj <= max_genus; ++gj) {
                const auto k = linkform::hyperbolic(prime, gk), j = linkform::hyperbolic(prime, gj);
                const auto s = metlab::sweep_lemmas(k, j);
                const auto m0 = metlab::verify_nontrivial_m0(k, j);
                const bool m0_ok = !m0.applicable || m0.holds_for_all();
                if (opt.format == Format::machine) {
                    out += fmt::format("{}|{}|{}|{}|{}|{}|{}|{}|{}\n", prime, gk, gj, s.splits, s.coset_failures,
                                       s.injection_failures, s.metabolizer_failures,
                                       m0.applicable ? std::to_string(m0.pairs) : "-",
                                       m0.applicable ? std::to_string(m0.pairs_nontrivial) : "-");
                } else {
                    out += fmt::format("p={} g_K={} g_J={}: splits={} coset={} injection={} metabolizer={}", prime, gk,
                                       gj, s.splits, s.coset_failures, s.injection_failures, s.metabolizer_failures);
                    out += m0.applicable ? fmt::format(" M_0!=0 in {}/{} pairs\n", m0.pairs_nontrivial, m0.pairs)
                                         : " M_0!=0 n/a\n";
                }
                if (failure.empty() && !s.all_hold())
                    failure = fmt::format("lemma failure at p={} g_K={} g_J={}: {}", prime, gk, gj,
                                          s.first_counterexample.value_or("?"));
                if (failure.empty() && !m0_ok)
                    failure = fmt::format("M_0 = 0 at p={} g_K={} g_J={}: {}", prime, gk, gj,
                                          m0.first_counterexample.value_or("?"));
            }
        }
        if (!failure.empty()) throw VerificationFailure(out + failure);
        if (opt.format == Format::text) out += "all lemmas hold\n";
        return out;
    });
}

CommandResult verify_nonconstancy(int n, int trials, long bound, const Options& opt) {
    return guarded([&] {
        if (n < 2) throw DomainError("nonconstancy needs N >= 2");
        if (n > 3) throw DomainError("exhaustive nonconstancy check is limited to N <= 3");
        if (trials < 0 || bound < 0) throw DomainError("--trials and --bound must be nonnegative");
        std::mt19937_64 rng(opt.seed);
        std::string out, failure;
        std::size_t cases = 0;
        for (int t = 0; t <= trials; ++t) {
            const auto cfg = t == 0 ? cgmodel::CGConfiguration::zero_base(n)
                                    : cgmodel::CGConfiguration(n, cgmodel::random_even_base(n, bound, rng), Rational(bound));
            const auto r = cgmodel::verify_nonconstancy(cfg);
            cases += r.cases;
            if (opt.format == Format::machine)
                out += fmt::format("{}|{}|{}|{}|{}\n", n, t, r.metabolizers, r.cases, r.failures);
            else if (t == 0)
                out += r.table();
            if (failure.empty() && !r.all_pass())
                failure = fmt::format("base function {} (0 = zero base): cosets of {} carry constant values", t,
                                      r.first_failure.value_or("?"));
        }
        if (!failure.empty()) throw VerificationFailure(out + failure);
        if (opt.format == Format::text)
            out += fmt::format("all cases pass: {} cases over {} base function{} (seed {})\n", cases, trials + 1,
                               trials ? "s" : "", opt.seed);
        return out;
    });
}

CommandResult report(const Options& opt) {
    return guarded([&] {
        const auto records = load(opt);
        const auto rep = knotdb::classify_all(records, milnor_mode(opt));
        std::string out = rep.text();
        out += "\nconcordance groups:\n";
        for (const auto& g : knotdb::concordance_targets(records))
            out += fmt::format("  {}: {}\n", g.target, fmt::join(g.members, " "));
        const auto c = knotdb::consistency_sweep(records, milnor_mode(opt));
        out += fmt::format("\nconsistency: {} records, {} concordances, {} violations\n", c.records_checked,
                           c.concordances_checked, c.violations.size());
        for (const auto& v : c.violations) out += "  " + v + "\n";

        Options text = opt;
        text.format = Format::text;
        const auto lemmas = verify_metabolizer_lemmas(3, 2, text);
        const auto nonconstancy = verify_nonconstancy(2, 0, 0, text);
        out += "\nmetabolizer lemmas:\n" + lemmas.output + lemmas.error;
        out += "\nnonconstancy:\n" + nonconstancy.output + nonconstancy.error;
        if (!c.ok()) throw VerificationFailure(out + "consistency sweep found violations");
        if (lemmas.exit_code != exit_code::ok) throw VerificationFailure(out);
        if (nonconstancy.exit_code != exit_code::ok) throw VerificationFailure(out);
        return out;
    });
}

}  // namespace concordance::cli
