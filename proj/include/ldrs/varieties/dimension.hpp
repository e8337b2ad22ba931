#pragma once

#include "ldrs/budget.hpp"
#include "ldrs/numeric.hpp"
#include "ldrs/varieties/counting.hpp"

#include <cmath>
#include <map>
#include <string>

namespace ldrs::varieties {

/// log_{q^e} |X(F_{q^e})| against the expected affine dimension h - k + 1; a diagnostic only.
struct DimensionEstimate {
    std::size_t expected = 0;
    double tolerance = 0.5;
    struct Level {
        Integer count = 0;
        bool empty = false;
        double estimate = 0;  ///< undefined when empty
        bool agrees = false;
    };
    std::map<unsigned, Level> levels;  ///< keyed by e
    bool empty_over_fq = false;
    bool agrees = false;
    std::string status;
};

inline DimensionEstimate estimate_dimension(const PowerSumSystem& sys, const Budget& budget = {},
                                            const std::vector<unsigned>& degrees = {1, 2}) {
    sys.validate();
    if (sys.distinct || !sys.forbidden.empty()) throw UsageError("dimension estimate is for the plain system X_{k,h,u}");
    DimensionEstimate d;
    d.expected = sys.num_vars + 1 >= sys.k ? sys.num_vars + 1 - sys.k : 0;
    bool all = true;
    for (unsigned e : degrees) {
        DimensionEstimate::Level lv;
        lv.count = count_extension(sys, e, budget);
        lv.empty = lv.count == 0;
        if (!lv.empty) {
            lv.estimate = std::log(to_double(lv.count)) / (static_cast<double>(e) * std::log(static_cast<double>(sys.q)));
            lv.agrees = std::fabs(lv.estimate - static_cast<double>(d.expected)) <= d.tolerance;
        }
        all = all && lv.agrees;
        if (e == 1) d.empty_over_fq = lv.empty;
        d.levels.emplace(e, lv);
    }
    d.agrees = all && !d.empty_over_fq;
    if (d.empty_over_fq) d.status = "empty over F_q";
    else d.status = d.agrees ? "consistent with expected dimension" : "deviates from expected dimension";
    return d;
}

} // namespace ldrs::varieties
