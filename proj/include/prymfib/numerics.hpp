#pragma once

#include "prymfib/numerics/tower.hpp"
#include "prymfib/strata/strata.hpp"
