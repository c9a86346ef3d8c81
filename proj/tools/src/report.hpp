#pragma once

/**
 * @file report.hpp
 * @brief Deterministic report assembly and rendering (JSON / CSV / text).
 *
 * A Report is a bag of typed sections filled by the subcommands; the three
 * renderers walk the sections in one fixed order so that two runs with the
 * same inputs and config produce byte-identical output. Wall-clock timing
 * is therefore opt-in (--wall-clock); the default "work" block counts
 * records, estimates and checks instead, which is reproducible.
 *
 * JSON: objects keep the documented key order (nlohmann::ordered_json);
 * every rational is {"num", "den", "approx"} with the approx field a
 * 15-significant-digit decimal for human convenience only. Infinite
 * exponents render as the string "inf".
 *
 * CSV: RFC 4180 quoting, one fixed header for all sections,
 *
 *     section,id,instance,status,a_lo,a_hi,b_lo,b_hi,c_lo,c_hi,note
 *
 * with the generic a/b/c columns documented per section in the README.
 * Cells carry exact "num/den" strings; the JSON form is the one meant for
 * machines that want the decimal convenience fields too.
 */

#include <dio/checks.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dio::cli {

inline constexpr const char* kToolVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

struct ReportConfig {
    long precision_bits = 48;  // oracle starting precision
    long ceiling_bits = 0;     // 0 = derived from the instance
    long burn_in = 3;
    bool wall_clock = false;   // include wall_ms (non-deterministic)
};

struct Report {
    std::string command;
    std::string input;  // the number-spec text as given
    ReportConfig config;

    std::vector<std::string> notes;
    bool rational_target = false;

    std::vector<std::pair<std::string, Rational>> values;  // named exact values
    std::vector<Int> quotients;                            // leading partial quotients
    std::vector<std::pair<Int, Int>> convergents;          // (p, q)
    std::vector<MinimalTriple> triples;
    std::optional<GrowthStats> growth;
    std::optional<RatInterval> value;  // enclosure of the target itself
    std::vector<std::pair<std::string, ExponentEstimate>> estimates;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, MinimalPointSeq>> sequences;

    long wall_ms = -1;  // filled by main() when config.wall_clock

    ordered_json to_json() const;
    std::string render_json() const;  // to_json().dump(2) + '\n'
    std::string render_csv() const;
    std::string render_text() const;
};

// Shared JSON encoders (also used by tests).
ordered_json rational_json(const Rational& r);
ordered_json interval_json(const RatInterval& x);
ordered_json xreal_json(const XReal& x);

std::string csv_escape(const std::string& field);

/// The documented exit-code contract: 2 if any check fails, 3 if nothing
/// holds and at least one check is inconclusive, else 0.
int exit_code_for(const std::vector<CheckResult>& checks);

}  // namespace dio::cli
