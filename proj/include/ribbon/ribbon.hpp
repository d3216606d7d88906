#pragma once

// Exact symbolic computation with the automorphism groups of the truncated
// power-series rings K[t]/(t^n) over K = Q(x), and with the Cech-level
// cocycle calculus those groups support: twisting, kernel classes, lifting,
// obstructions, blow-ups, and the attached rank-2 transition matrices.

#include "aut.hpp"
#include "bundle.hpp"
#include "cocycle.hpp"
#include "cover.hpp"
#include "derivation.hpp"
#include "errors.hpp"
#include "jet.hpp"
#include "jsonio.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
