#pragma once

#include "ldrs/listdec/config.hpp"
