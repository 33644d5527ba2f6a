#pragma once

#include "hrush/rational.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hrush {

struct Breakpoint {
    std::int64_t size;
    Rational value;
    bool operator==(const Breakpoint&) const = default;
};

enum class TailKind {
    // f(n) = v + log_3(n / s) past the last breakpoint (s, v).
    LogBase3,
    // Piecewise linear through explicit points; undefined past the last one.
    RationalTable,
    // As RationalTable, additionally promising f(3t) <= f(t) + 1, which
    // validate() checks on every t the table covers.
    SlowTable,
};

// The control function f together with the predimension weight alpha.
//
// f is never materialised as a floating point number: every comparison
// goes through compare_f, which is exact for both the rational segments and
// the logarithmic tail.
struct GoodFunction {
    Rational alpha = 2;
    std::vector<Breakpoint> breakpoints;
    TailKind tail = TailKind::LogBase3;
    std::vector<Breakpoint> table;

    // alpha = 2, breakpoints (1,2) (4,5) (6,6), logarithmic tail.
    static GoodFunction standard();

    // Throws InputError describing the first violated invariant.
    void validate() const;

    // Largest n at which f is defined (tables are finite).
    std::optional<std::int64_t> domain_limit() const;

    const Breakpoint& junction() const { return breakpoints.back(); }
};

// Three-way comparison of d against f(n); n >= 1.
std::strong_ordering compare_f(const GoodFunction& cfg, const Rational& d, std::int64_t n);

// f(n) when it is rational, nullopt otherwise (logarithmic tail off the
// powers of three).
std::optional<Rational> exact_value(const GoodFunction& cfg, std::int64_t n);

// Largest n with f(n) <= d. DomainError when d < f(1) or when a table tail
// ends before the answer is determined.
std::int64_t max_size_at_predim(const GoodFunction& cfg, const Rational& d);

// Rationals are serialised as strings ("p/q") or integers.
GoodFunction good_function_from_json(const nlohmann::json& j);
nlohmann::json good_function_to_json(const GoodFunction& cfg);
GoodFunction load_good_function(const std::string& path);

std::string to_string(TailKind kind);

} // namespace hrush
