#pragma once

#include "prymfib/curves/intersection.hpp"
#include "prymfib/curves/node.hpp"
#include "prymfib/curves/plane_curve.hpp"
#include "prymfib/curves/smoothness.hpp"
