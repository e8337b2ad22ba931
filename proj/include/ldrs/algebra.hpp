#pragma once

#include "ldrs/algebra/galois_field.hpp"
#include "ldrs/algebra/modular_matrix.hpp"
#include "ldrs/algebra/newton.hpp"
#include "ldrs/algebra/polynomial.hpp"
#include "ldrs/algebra/prime_field.hpp"
