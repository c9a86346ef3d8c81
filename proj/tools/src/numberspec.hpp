#pragma once

/**
 * @file numberspec.hpp
 * @brief The CLI's target grammar: one tagged string names one real number.
 *
 * Accepted forms:
 *
 *     rat:<int>/<int>          exact rational, e.g. rat:22/7
 *     sqrt:<positive int>      square root of a non-square integer
 *     cf:<a0;a1,a2,...>        finite expansion, e.g. cf:0;1,2,2
 *     fib:<a>,<b>              extremal number xi_{a,b}, a != b
 *     periodic:<pre|period>    eventually periodic expansion, e.g. periodic:1|2
 *
 * Parsing is strict: trailing garbage, empty components and out-of-range
 * values are errors, and every error carries the byte offset where the
 * problem starts so the CLI can point at it.
 */

#include <dio/checks.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dio::cli {

struct SpecParseError : std::invalid_argument {
    SpecParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg), position(pos) {}
    std::size_t position;
};

struct NumberSpec {
    enum class Kind { rational, square_root, finite_cf, extremal, periodic };

    Kind kind = Kind::rational;
    Rational rat;
    Int sqrt_n;
    Int cf_a0;
    std::vector<Int> cf_terms;
    Int fib_a, fib_b;
    PeriodicCF periodic;

    /// Canonical text form; parse(to_string()) == *this.
    std::string to_string() const;

    /// The core-library descriptor this spec names.
    TargetDescriptor target() const;

    bool operator==(const NumberSpec& other) const;
};

/// Parses the grammar above. Throws SpecParseError with the failure
/// position on malformed text or constraint violations (fib:3,3,
/// sqrt:49, zero denominators, non-positive partial quotients).
NumberSpec parse_number_spec(const std::string& text);

}  // namespace dio::cli
