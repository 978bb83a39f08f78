#pragma once

#include "prymfib/curves.hpp"
#include "prymfib/cubic/gram_cubic.hpp"
#include "prymfib/cubic/discriminant.hpp"
#include "prymfib/cubic/smoothness_probe.hpp"
#include "prymfib/cubic/generality.hpp"
