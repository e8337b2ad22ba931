#pragma once

// Command-line value parsing: integer ranges "a..b", comma lists, exact rationals, budgets.

#include "ldrs/algebra/prime_field.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldrs::cli {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool is_range = false;  ///< written as "a..b"

    std::vector<std::int64_t> values() const {
        std::vector<std::int64_t> out;
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
};

inline std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        return parse_integer(text).convert_to<std::int64_t>();
    } catch (const UsageError&) {
        throw UsageError(what + ": expected an integer, got '" + text + "'");
    }
}

/// "7" or "7..31".
inline IntRange parse_range(const std::string& text, const std::string& what) {
    IntRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text, what);
        return r;
    }
    r.lo = parse_int(text.substr(0, dots), what);
    r.hi = parse_int(text.substr(dots + 2), what);
    r.is_range = true;
    if (r.lo > r.hi) throw UsageError(what + ": empty range '" + text + "'");
    return r;
}

/// "1,2" or "1..3".
inline std::vector<std::int64_t> parse_list(const std::string& text, const std::string& what) {
    if (text.find("..") != std::string::npos) return parse_range(text, what).values();
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_int(piece, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Exact rational; "1/2" and "0.5" both parse to 1/2 without a float round-trip.
inline Rational parse_exact(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const UsageError&) {
        throw UsageError(what + ": expected a rational like 1/2, got '" + text + "'");
    }
}

/// Primes of a range; a single non-prime value is a usage error naming a divisor.
inline std::vector<std::uint64_t> primes_in(const IntRange& r) {
    std::vector<std::uint64_t> out;
    if (!r.is_range) {
        if (r.lo < 0) throw UsageError("q must be positive");
        algebra::PrimeModulus pm(static_cast<std::uint64_t>(r.lo));
        out.push_back(pm.value());
        return out;
    }
    for (std::int64_t v = std::max<std::int64_t>(r.lo, 3); v <= r.hi; ++v)
        if (algebra::is_prime(static_cast<std::uint64_t>(v))) out.push_back(static_cast<std::uint64_t>(v));
    return out;
}

struct BudgetOverrides {
    std::optional<std::uint64_t> max_states;
    std::optional<std::uint64_t> max_work;
    std::optional<std::uint64_t> max_enum;

    /// Environment defaults, then flags.
    Budget resolve() const {
        Budget b = Budget::from_environment();
        if (max_states) b.max_states = *max_states;
        if (max_work) b.max_work = *max_work;
        if (max_enum) b.max_enumeration = *max_enum;
        if (b.max_states == 0 || b.max_work == 0 || b.max_enumeration == 0)
            throw UsageError("budget caps must be positive");
        return b;
    }
};

} // namespace ldrs::cli
