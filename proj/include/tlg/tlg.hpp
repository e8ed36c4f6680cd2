#pragma once

// Umbrella header.

#include "tlg/baseline.hpp"
#include "tlg/grid.hpp"
#include "tlg/majorization.hpp"
#include "tlg/numeric.hpp"
#include "tlg/order_checks.hpp"
#include "tlg/serialization.hpp"
#include "tlg/system.hpp"
#include "tlg/topp_leone.hpp"
#include "tlg/version.hpp"
