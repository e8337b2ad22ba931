#pragma once

#include "ldrs/gadget/certificate.hpp"
#include "ldrs/gadget/gadget.hpp"
#include "ldrs/gadget/params.hpp"
#include "ldrs/gadget/s2.hpp"
