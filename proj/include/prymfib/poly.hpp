#pragma once

#include "prymfib/poly/algebra.hpp"
#include "prymfib/poly/error.hpp"
#include "prymfib/poly/field.hpp"
#include "prymfib/poly/gcd.hpp"
#include "prymfib/poly/jet.hpp"
#include "prymfib/poly/macaulay.hpp"
#include "prymfib/poly/matrix.hpp"
#include "prymfib/poly/parse.hpp"
#include "prymfib/poly/polynomial.hpp"
#include "prymfib/poly/resultant.hpp"
#include "prymfib/poly/roots.hpp"
