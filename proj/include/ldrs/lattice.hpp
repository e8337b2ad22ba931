#pragma once

#include "ldrs/lattice/basis.hpp"
#include "ldrs/lattice/min_distance.hpp"
#include "ldrs/lattice/parity_check.hpp"
#include "ldrs/lattice/rs_lattice.hpp"
