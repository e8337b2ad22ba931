#pragma once

#include "ldrs/varieties/bounds.hpp"
#include "ldrs/varieties/counting.hpp"
#include "ldrs/varieties/dimension.hpp"
#include "ldrs/varieties/power_sum_system.hpp"
#include "ldrs/varieties/report.hpp"
#include "ldrs/varieties/smoothness.hpp"
#include "ldrs/varieties/subsets.hpp"
