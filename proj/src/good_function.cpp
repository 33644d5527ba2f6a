#include "hrush/good_function.hpp"

#include "hrush/error.hpp"
#include "hrush/graph_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace hrush {

namespace {

// Exponent bounds keep the exact log comparison from building huge integers.
constexpr std::int64_t max_log_numerator = 4096;
constexpr std::int64_t max_log_denominator = 64;

Rational interpolate(const Breakpoint& lo, const Breakpoint& hi, std::int64_t n)
{
    return lo.value + (hi.value - lo.value) * Rational(n - lo.size, hi.size - lo.size);
}

// Value on the piecewise-linear part; n must not exceed the last point.
Rational piecewise_value(const std::vector<Breakpoint>& points, std::int64_t n)
{
    Breakpoint previous{0, 0};
    for (const auto& p : points) {
        if (n == p.size)
            return p.value;
        if (n < p.size)
            return interpolate(previous, p, n);
        previous = p;
    }
    throw DomainError("size " + std::to_string(n) + " beyond the tabulated range");
}

std::vector<Breakpoint> combined_points(const GoodFunction& cfg)
{
    auto points = cfg.breakpoints;
    for (const auto& p : cfg.table)
        if (p.size > cfg.junction().size)
            points.push_back(p);
    return points;
}

std::strong_ordering compare_log_tail(const GoodFunction& cfg, const Rational& d, std::int64_t n)
{
    const auto& [anchor, base] = cfg.junction();
    Rational excess = d - base;
    if (excess < 0)
        return std::strong_ordering::less;
    Integer p = numerator(excess);
    Integer q = denominator(excess);
    if (p > max_log_numerator || q > max_log_denominator)
        throw UnsupportedError("predimension " + to_string(d) + " too large for exact logarithmic comparison");
    auto pe = static_cast<unsigned>(p);
    auto qe = static_cast<unsigned>(q);
    // d >= f(n)  <=>  3^p * anchor^q >= n^q
    Integer lhs = boost::multiprecision::pow(Integer(3), pe) * boost::multiprecision::pow(Integer(anchor), qe);
    Integer rhs = boost::multiprecision::pow(Integer(n), qe);
    if (lhs == rhs)
        return std::strong_ordering::equal;
    return lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::less;
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw InputError("expected a rational as string or integer, got " + j.dump());
}

std::vector<Breakpoint> points_from_json(const nlohmann::json& j)
{
    std::vector<Breakpoint> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw InputError("points must be [size, value] pairs");
        out.push_back({entry[0].get<std::int64_t>(), rational_from_json(entry[1])});
    }
    return out;
}

nlohmann::json points_to_json(const std::vector<Breakpoint>& points)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : points)
        out.push_back({p.size, to_string(p.value)});
    return out;
}

void check_monotone(const std::vector<Breakpoint>& points, std::int64_t after, const Rational& floor_value, const std::string& what)
{
    std::int64_t last = after;
    Rational last_value = floor_value;
    for (const auto& p : points) {
        if (p.size <= last)
            throw InputError(what + " sizes must be strictly increasing");
        if (p.value < last_value)
            throw InputError(what + " values must be non-decreasing");
        last = p.size;
        last_value = p.value;
    }
}

} // namespace

GoodFunction GoodFunction::standard()
{
    GoodFunction cfg;
    cfg.alpha = 2;
    cfg.breakpoints = {{1, 2}, {4, 5}, {6, 6}};
    cfg.tail = TailKind::LogBase3;
    return cfg;
}

void GoodFunction::validate() const
{
    if (alpha <= 0)
        throw InputError("alpha must be positive");
    if (breakpoints.empty())
        throw InputError("at least one breakpoint is required");
    if (breakpoints.front().size < 1)
        throw InputError("breakpoint sizes start at 1");
    if (breakpoints.front().value <= 0)
        throw InputError("f must be positive");
    check_monotone(breakpoints, 0, 0, "breakpoint");
    if (tail == TailKind::LogBase3) {
        if (!table.empty())
            throw InputError("a logarithmic tail takes no table");
        return;
    }
    std::vector<Breakpoint> beyond;
    for (const auto& p : table) {
        if (p.size == junction().size) {
            if (p.value != junction().value)
                throw InputError("table is discontinuous at size " + std::to_string(p.size));
            continue;
        }
        beyond.push_back(p);
    }
    if (beyond.empty())
        throw InputError("a table tail needs at least one point past the last breakpoint");
    check_monotone(beyond, junction().size, junction().value, "table");
    if (tail == TailKind::SlowTable) {
        auto limit = *domain_limit();
        for (std::int64_t t = junction().size; 3 * t <= limit; ++t)
            if (exact_value(*this, 3 * t).value() > exact_value(*this, t).value() + 1)
                throw InputError("slow table violates f(3t) <= f(t) + 1 at t = " + std::to_string(t));
    }
}

std::optional<std::int64_t> GoodFunction::domain_limit() const
{
    if (tail == TailKind::LogBase3)
        return std::nullopt;
    std::int64_t limit = junction().size;
    for (const auto& p : table)
        limit = std::max(limit, p.size);
    return limit;
}

std::strong_ordering compare_f(const GoodFunction& cfg, const Rational& d, std::int64_t n)
{
    if (n < 1)
        throw InputError("f is compared only at sizes n >= 1");
    if (n <= cfg.junction().size || cfg.tail != TailKind::LogBase3) {
        if (auto limit = cfg.domain_limit(); limit && n > *limit)
            throw DomainError("f(" + std::to_string(n) + ") lies beyond the table tail");
        Rational value = piecewise_value(combined_points(cfg), n);
        return compare(d, value);
    }
    return compare_log_tail(cfg, d, n);
}

std::optional<Rational> exact_value(const GoodFunction& cfg, std::int64_t n)
{
    if (n < 1)
        throw InputError("f is evaluated only at sizes n >= 1");
    if (n <= cfg.junction().size || cfg.tail != TailKind::LogBase3) {
        if (auto limit = cfg.domain_limit(); limit && n > *limit)
            throw DomainError("f(" + std::to_string(n) + ") lies beyond the table tail");
        return piecewise_value(combined_points(cfg), n);
    }
    const auto& [anchor, base] = cfg.junction();
    if (n % anchor != 0)
        return std::nullopt;
    std::int64_t ratio = n / anchor;
    std::int64_t k = 0;
    while (ratio % 3 == 0) {
        ratio /= 3;
        ++k;
    }
    if (ratio != 1)
        return std::nullopt;
    return base + k;
}

std::int64_t max_size_at_predim(const GoodFunction& cfg, const Rational& d)
{
    if (compare_f(cfg, d, 1) < 0)
        throw DomainError("no nonempty graph has predimension " + to_string(d) + " below f(1)");
    auto fits = [&](std::int64_t n) {
        if (auto limit = cfg.domain_limit(); limit && n > *limit)
            throw DomainError("table tail ends before f exceeds " + to_string(d));
        return compare_f(cfg, d, n) >= 0;
    };
    std::int64_t lo = 1;
    std::int64_t hi = 2;
    while (fits(hi)) {
        lo = hi;
        if (hi > std::numeric_limits<std::int64_t>::max() / 2)
            throw UnsupportedError("f^-1(" + to_string(d) + ") overflows");
        hi *= 2;
    }
    // f(lo) <= d < f(hi)
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::string to_string(TailKind kind)
{
    switch (kind) {
    case TailKind::LogBase3:
        return "log3";
    case TailKind::RationalTable:
        return "table";
    case TailKind::SlowTable:
        return "slow";
    }
    return "?";
}

GoodFunction good_function_from_json(const nlohmann::json& j)
{
    try {
        GoodFunction cfg;
        if (j.contains("alpha"))
            cfg.alpha = rational_from_json(j.at("alpha"));
        cfg.breakpoints = j.contains("breakpoints") ? points_from_json(j.at("breakpoints")) : GoodFunction::standard().breakpoints;
        if (j.contains("tail")) {
            const auto& tail = j.at("tail");
            auto kind = tail.at("kind").get<std::string>();
            if (kind == "log3")
                cfg.tail = TailKind::LogBase3;
            else if (kind == "table")
                cfg.tail = TailKind::RationalTable;
            else if (kind == "slow")
                cfg.tail = TailKind::SlowTable;
            else
                throw InputError("unknown tail kind '" + kind + "'");
            if (tail.contains("points"))
                cfg.table = points_from_json(tail.at("points"));
        }
        cfg.validate();
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed good function: ") + e.what());
    }
}

nlohmann::json good_function_to_json(const GoodFunction& cfg)
{
    nlohmann::json tail = {{"kind", to_string(cfg.tail)}};
    if (cfg.tail != TailKind::LogBase3)
        tail["points"] = points_to_json(cfg.table);
    return {{"alpha", to_string(cfg.alpha)}, {"breakpoints", points_to_json(cfg.breakpoints)}, {"tail", tail}};
}

GoodFunction load_good_function(const std::string& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return good_function_from_json(j);
}

} // namespace hrush
