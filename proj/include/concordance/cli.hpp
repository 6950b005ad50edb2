#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace concordance::cli {

enum class Format { text, machine };
Format parse_format(const std::string& name);

inline constexpr std::uint64_t default_seed = 20021105;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int integrity = 2;
inline constexpr int verification = 3;
}  // namespace exit_code

struct Options {
    std::filesystem::path table;  // empty: the bundled table
    Format format = Format::text;
    std::uint64_t seed = default_seed;
    bool strict_milnor = false;
};

/// What a subcommand prints and returns. Errors go to `error`, results to `output`.
struct CommandResult {
    int exit_code = exit_code::ok;
    std::string output;
    std::string error;
};

/// Input is an Alexander polynomial "1,-3,3,-3,1" or a Seifert matrix "0,1;2,0".
CommandResult invariants(const std::string& input, const Options& opt);
CommandResult enumerate(const Options& opt);

/// Exactly one of hyperbolic > 0, seifert or pairing selects the form.
struct FormSpec {
    long prime = 3;
    int hyperbolic = 0;
    std::string seifert;
    std::string pairing;  // "0,1/3;1/3,0"
};
CommandResult metabolizers(const FormSpec& spec, const Options& opt);

/// Exhaustive lemma sweep over hyperbolic (Z/p)^{2g_K} and (Z/p)^{2g_J}, 1 <= g <= max_genus.
CommandResult verify_metabolizer_lemmas(long prime, int max_genus, const Options& opt);
/// Nonconstancy at genus n for the zero base function and `trials` random ones.
CommandResult verify_nonconstancy(int n, int trials, long bound, const Options& opt);
/// Enumeration, concordance groups, consistency sweep and both verifications at small size.
CommandResult report(const Options& opt);

}  // namespace concordance::cli
