#pragma once

#include "concordance/bounds.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace concordance::knotdb {

/// A table row that fails to parse or contradicts itself. The message names the
/// file and line, and the knot when the row parsed.
class TableError : public IntegrityError {
public:
    TableError(const std::string& message, std::size_t line) : IntegrityError(message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct KnotRecord {
    std::string name;
    int crossings = 0;
    laurent::NormalizedAlexander alexander = laurent::normalize(laurent::LaurentPolynomial::monomial(1, 0));
    int abs_signature = 0;
    int genus = 0;
    std::optional<seifert::SeifertMatrix> seifert;
    bool slice = false;
    std::optional<std::string> target;  // a table name, or "A#B"
    std::size_t line = 0;
    std::map<std::string, std::string> sources;  // field -> where the value comes from

    std::string source(const std::string& field) const;
};

/// Table format, one record per line ('#' starts a comment):
///   name|crossings|alexander|abs_signature|genus|slice|target|seifert
/// with the Alexander coefficients listed from t^0 up, slice 0/1, and "-" for a missing
/// target or Seifert matrix. A comment "#@source field,field=tag" sets source tags.
std::vector<KnotRecord> parse_table(std::istream& in, const std::string& origin = "table");
std::vector<KnotRecord> load_table(const std::filesystem::path& path);
std::filesystem::path default_table_path();

/// Looks up a name, resolving "A#B" as the connected sum of two records.
/// Throws IntegrityError for unknown names.
KnotRecord resolve(const std::vector<KnotRecord>& records, const std::string& name);

struct Verdict {
    KnotRecord record;
    int polynomial_bound;
    bounds::GenusBounds bounds;
};

struct EnumerationReport {
    std::vector<Verdict> verdicts;  // table order
    std::map<bounds::Status, std::size_t> counts;
    /// Non-slice knots whose Alexander polynomial bound falls short of the genus.
    std::vector<std::string> exceptions;
    /// Rows whose classification disagrees with their annotations.
    std::vector<std::string> discrepancies;

    std::size_t count(bounds::Status s) const;
    /// "21 / 210 / 17 / 2" for slice / polynomial / concordance / unresolved.
    std::string summary() const;
    std::string text() const;
    std::string machine() const;
};

EnumerationReport classify_all(const std::vector<KnotRecord>& records,
                               bounds::MilnorMode mode = bounds::MilnorMode::max_per_factor);
bounds::GenusBounds classify(const std::vector<KnotRecord>& records, const KnotRecord& record,
                             bounds::MilnorMode mode = bounds::MilnorMode::max_per_factor);

struct TargetGroup {
    std::string target;
    std::vector<std::string> members;  // table order
};

/// Knots grouped by concordance target; groups ordered by the target's position in
/// the table, connected-sum targets last.
std::vector<TargetGroup> concordance_targets(const std::vector<KnotRecord>& records);

struct ConsistencyReport {
    std::size_t concordances_checked = 0;
    std::size_t records_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Fox-Milnor on Delta_K * Delta_target and |sigma| equality for every concordance;
/// g4_lower <= gc_lower <= genus and |Delta(-1)| = |det(V + V^t)| for every record.
ConsistencyReport consistency_sweep(const std::vector<KnotRecord>& records,
                                    bounds::MilnorMode mode = bounds::MilnorMode::max_per_factor);

}  // namespace concordance::knotdb
