#pragma once

#include "ldrs/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace ldrs {

/// Resource caps for the exact counters and enumerators.
struct Budget {
    /// Dynamic-programming states held at once (dense array or sparse map entries).
    std::uint64_t max_states = 100'000'000;
    /// Elementary work units: table cells, enumerated subsets, scanned points.
    std::uint64_t max_work = 1'000'000'000;
    /// Objects materialized by enumeration (multisets, S2 members, codewords).
    std::uint64_t max_enumeration = 10'000'000;
    /// Dense DP arrays are used up to this many states, sparse maps above.
    std::uint64_t dense_threshold = 1'000'000;

    void require_states(std::uint64_t needed, const std::string& what) const {
        if (needed > max_states) throw CapacityError(what + ": state budget exceeded", needed, max_states);
    }
    void require_work(std::uint64_t needed, const std::string& what) const {
        if (needed > max_work) throw CapacityError(what + ": work budget exceeded", needed, max_work);
    }
    void require_enumeration(std::uint64_t needed, const std::string& what) const {
        if (needed > max_enumeration)
            throw CapacityError(what + ": enumeration budget exceeded", needed, max_enumeration);
    }

    /// Defaults overridden by LDRS_MAX_STATES, LDRS_MAX_WORK and LDRS_MAX_ENUM.
    static Budget from_environment() {
        Budget b;
        auto read = [](const char* name, std::uint64_t& slot) {
            if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
                char* end = nullptr;
                unsigned long long parsed = std::strtoull(v, &end, 10);
                if (end == v || *end != '\0' || parsed == 0)
                    throw UsageError(std::string(name) + " must be a positive integer, got '" + v + "'");
                slot = parsed;
            }
        };
        read("LDRS_MAX_STATES", b.max_states);
        read("LDRS_MAX_WORK", b.max_work);
        read("LDRS_MAX_ENUM", b.max_enumeration);
        return b;
    }
};

} // namespace ldrs
