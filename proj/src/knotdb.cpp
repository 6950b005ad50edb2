#include "concordance/knotdb.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace concordance::knotdb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int parse_int(const std::string& s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError(std::string("bad ") + what + " '" + s + "'");
    return v;
}

bool valid_name(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_record(const KnotRecord& r) {
    const auto fail = [&](const std::string& why) { throw IntegrityError(r.name + ": " + why); };
    if (!r.alexander.is_knot_polynomial()) fail("|Delta(1)| != 1");
    if (!laurent::is_symmetric(r.alexander.poly())) fail("Alexander polynomial is not symmetric");
    if (2 * r.genus != r.alexander.degree()) fail("genus is not half the degree of the Alexander polynomial");
    if (r.abs_signature < 0 || r.abs_signature % 2 != 0) fail("|signature| must be even and nonnegative");
    if (r.slice && (r.abs_signature != 0 || !laurent::fox_milnor_test(r.alexander)))
        fail("slice flag set but the Fox-Milnor condition or sigma = 0 fails");
    if (r.seifert) {
        if (!(seifert::alexander_polynomial(*r.seifert) == r.alexander))
            fail("Seifert matrix gives a different Alexander polynomial");
        if (std::abs(seifert::classical_signature(*r.seifert)) != r.abs_signature)
            fail("Seifert matrix gives a different signature");
    }
    if (r.target && r.slice) fail("slice knots take no concordance target");
}

}  // namespace

std::string KnotRecord::source(const std::string& field) const {
    auto it = sources.find(field);
    return it == sources.end() ? "table" : it->second;
}

std::vector<KnotRecord> parse_table(std::istream& in, const std::string& origin) {
    std::vector<KnotRecord> out;
    std::map<std::string, std::string> sources;
    std::map<std::string, std::size_t> seen;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        const std::string where = origin + ":" + std::to_string(lineno) + ": ";
        if (line.rfind("#@source", 0) == 0) {
            const std::string spec = trim(line.substr(8));
            const auto eq = spec.find('=');
            if (eq == std::string::npos) throw TableError(where + "source directive needs field=tag", lineno);
            for (const auto& f : split(spec.substr(0, eq), ',')) sources[trim(f)] = trim(spec.substr(eq + 1));
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split(line, '|');
        if (fields.size() != 8)
            throw TableError(where + "expected 8 fields, found " + std::to_string(fields.size()), lineno);
        KnotRecord r;
        r.line = lineno;
        r.sources = sources;
        try {
            r.name = trim(fields[0]);
            if (!valid_name(r.name)) throw DomainError("bad knot name '" + r.name + "'");
            r.crossings = parse_int(trim(fields[1]), "crossing number");
            r.alexander = laurent::normalize(laurent::parse_coefficients(trim(fields[2])));
            r.abs_signature = parse_int(trim(fields[3]), "signature");
            r.genus = parse_int(trim(fields[4]), "genus");
            const std::string slice = trim(fields[5]);
            if (slice != "0" && slice != "1") throw DomainError("slice flag must be 0 or 1");
            r.slice = slice == "1";
            const std::string target = trim(fields[6]);
            if (target != "-") r.target = target;
            const std::string sm = trim(fields[7]);
            if (sm != "-") r.seifert = seifert::validate(sm);
        } catch (const DomainError& e) {
            throw TableError(where + (r.name.empty() ? "" : r.name + ": ") + e.what(), lineno);
        }
        try {
            check_record(r);
        } catch (const IntegrityError& e) {
            throw TableError(where + e.what(), lineno);
        }
        if (auto [it, fresh] = seen.emplace(r.name, lineno); !fresh)
            throw TableError(where + r.name + ": duplicate of line " + std::to_string(it->second), lineno);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<KnotRecord> load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IntegrityError("cannot open knot table " + path.string());
    return parse_table(in, path.filename().string());
}

std::filesystem::path default_table_path() { return CONCORDANCE_DEFAULT_TABLE; }

KnotRecord resolve(const std::vector<KnotRecord>& records, const std::string& name) {
    if (const auto hash = name.find('#'); hash != std::string::npos) {
        KnotRecord a = resolve(records, name.substr(0, hash));
        KnotRecord b = resolve(records, name.substr(hash + 1));
        KnotRecord s;
        s.name = name;
        s.crossings = a.crossings + b.crossings;
        s.alexander = laurent::normalize(laurent::LaurentPolynomial(a.alexander.poly() * b.alexander.poly()));
        // same-chirality summands: signatures add
        s.abs_signature = a.abs_signature + b.abs_signature;
        s.genus = a.genus + b.genus;
        if (a.seifert && b.seifert) s.seifert = seifert::block_sum(*a.seifert, *b.seifert);
        return s;
    }
    for (const auto& r : records)
        if (r.name == name) return r;
    throw IntegrityError("unknown knot '" + name + "'");
}

bounds::GenusBounds classify(const std::vector<KnotRecord>& records, const KnotRecord& record,
                             bounds::MilnorMode mode) {
    bounds::BoundInputs in(record.alexander);
    in.seifert = record.seifert;
    in.genus = record.genus;
    in.abs_signature = record.abs_signature;
    in.slice = record.slice;
    in.milnor = mode;
    in.g4_upper = record.genus;
    if (record.target) {
        const KnotRecord t = resolve(records, *record.target);
        if (t.target) throw IntegrityError(record.name + ": concordance target " + t.name + " has a target itself");
        const auto tb = classify(records, t, mode);
        in.concordance_gc = tb.gc_upper.value_or(t.genus);
        in.g4_upper = std::min(record.genus, *in.concordance_gc);
    }
    try {
        return bounds::combine_bounds(in);
    } catch (const IntegrityError& e) {
        throw IntegrityError(record.name + ": " + e.what());
    }
}

std::size_t EnumerationReport::count(bounds::Status s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
}

std::string EnumerationReport::summary() const {
    using bounds::Status;
    return std::to_string(count(Status::slice)) + " / " + std::to_string(count(Status::polynomial)) + " / " +
           std::to_string(count(Status::concordance)) + " / " + std::to_string(count(Status::unresolved));
}

EnumerationReport classify_all(const std::vector<KnotRecord>& records, bounds::MilnorMode mode) {
    EnumerationReport rep;
    for (auto s : {bounds::Status::slice, bounds::Status::polynomial, bounds::Status::concordance,
                   bounds::Status::unresolved})
        rep.counts[s] = 0;
    for (const auto& r : records) {
        Verdict v{r, bounds::gc_polynomial_bound(r.alexander), classify(records, r, mode)};
        ++rep.counts[v.bounds.status];
        if (!r.slice && v.polynomial_bound < r.genus) rep.exceptions.push_back(r.name);
        if (r.target && v.bounds.status != bounds::Status::concordance)
            rep.discrepancies.push_back(r.name + ": concordance target " + *r.target + " leaves g_c at " +
                                        v.bounds.gc_text());
        if (v.bounds.status == bounds::Status::polynomial && v.polynomial_bound < r.genus)
            rep.discrepancies.push_back(r.name + ": genus reached by the Milnor bound, polynomial bound " +
                                        std::to_string(v.polynomial_bound));
        if (v.bounds.status == bounds::Status::unresolved && !r.target && v.polynomial_bound < r.genus)
            rep.discrepancies.push_back(r.name + ": unresolved, g_c in " + v.bounds.gc_text());
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

std::string EnumerationReport::text() const {
    std::ostringstream out;
    out << std::left << std::setw(8) << "knot" << std::setw(4) << "c" << std::setw(7) << "genus" << std::setw(5)
        << "|s|" << std::setw(6) << "poly" << std::setw(6) << "g_c" << std::setw(6) << "g_4" << std::setw(13)
        << "status"
        << "target\n";
    for (const auto& v : verdicts) {
        out << std::setw(8) << v.record.name << std::setw(4) << v.record.crossings << std::setw(7) << v.record.genus
            << std::setw(5) << v.record.abs_signature << std::setw(6) << v.polynomial_bound << std::setw(6)
            << v.bounds.gc_text() << std::setw(6) << v.bounds.g4_text() << std::setw(13)
            << bounds::to_string(v.bounds.status) << v.record.target.value_or("-") << '\n';
    }
    out << "\nslice / polynomial / concordance / unresolved: " << summary() << '\n';
    out << "exceptions (" << exceptions.size() << "):";
    for (const auto& e : exceptions) out << ' ' << e;
    out << '\n';
    for (const auto& d : discrepancies) out << "note: " << d << '\n';
    return out.str();
}

std::string EnumerationReport::machine() const {
    std::ostringstream out;
    for (const auto& v : verdicts) {
        const auto& r = v.record;
        out << r.name << '|' << r.crossings << '|' << laurent::format_coefficients(r.alexander) << '|'
            << r.abs_signature << '|' << r.genus << '|' << (r.slice ? 1 : 0) << '|' << r.target.value_or("-") << '|'
            << (r.seifert ? format_matrix(r.seifert->matrix()) : "-") << '|' << bounds::to_string(v.bounds.status)
            << '|' << v.bounds.gc_text() << '|' << v.bounds.g4_text() << '|' << v.polynomial_bound << '\n';
    }
    return out.str();
}

std::vector<TargetGroup> concordance_targets(const std::vector<KnotRecord>& records) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& r : records)
        if (r.target) {
            resolve(records, *r.target);  // unknown targets are an integrity error
            groups[*r.target].push_back(r.name);
        }
    auto position = [&](const std::string& name) {
        if (name.find('#') != std::string::npos) return records.size();
        for (std::size_t i = 0; i < records.size(); ++i)
            if (records[i].name == name) return i;
        return records.size();
    };
    std::vector<TargetGroup> out;
    for (auto& [t, members] : groups) out.push_back({t, std::move(members)});
    std::stable_sort(out.begin(), out.end(),
                     [&](const TargetGroup& a, const TargetGroup& b) { return position(a.target) < position(b.target); });
    return out;
}

ConsistencyReport consistency_sweep(const std::vector<KnotRecord>& records, bounds::MilnorMode mode) {
    ConsistencyReport rep;
    for (const auto& r : records) {
        ++rep.records_checked;
        try {
            const auto b = classify(records, r, mode);
            if (!(b.g4_lower <= b.gc_lower && b.gc_lower <= r.genus))
                rep.violations.push_back(r.name + ": bounds out of order (g4 " + std::to_string(b.g4_lower) + ", gc " +
                                         std::to_string(b.gc_lower) + ", genus " + std::to_string(r.genus) + ")");
        } catch (const IntegrityError& e) {
            rep.violations.push_back(e.what());
        }
        if (r.seifert) {
            const IntMatrix A = r.seifert->matrix() + r.seifert->matrix().transpose();
            if (abs(r.alexander.at(-1)) != abs(determinant(A)))
                rep.violations.push_back(r.name + ": |Delta(-1)| != |det(V + V^t)|");
        }
        if (!r.target) continue;
        ++rep.concordances_checked;
        const KnotRecord t = resolve(records, *r.target);
        auto product = laurent::normalize(laurent::LaurentPolynomial(r.alexander.poly() * t.alexander.poly()));
        if (!laurent::fox_milnor_test(product))
            rep.violations.push_back(r.name + ": Delta * Delta(" + t.name + ") fails Fox-Milnor");
        if (r.abs_signature != t.abs_signature)
            rep.violations.push_back(r.name + ": |sigma| " + std::to_string(r.abs_signature) + " differs from " +
                                     t.name + " (" + std::to_string(t.abs_signature) + ")");
    }
    return rep;
}

}  // namespace concordance::knotdb
