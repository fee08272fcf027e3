#pragma once

// Umbrella header: bivariate Taylor series, Caputo fractional partial
// derivatives, the first-order rotation transformation law and its
// verification machinery, scalar invariants, and the quadrature oracle.

#include "fracrot/specialfn.hpp"
#include "fracrot/poly.hpp"
#include "fracrot/fracseries.hpp"
#include "fracrot/fracops.hpp"
#include "fracrot/quadrature.hpp"
#include "fracrot/rotation.hpp"
#include "fracrot/invariants.hpp"
#include "fracrot/io.hpp"
#include "fracrot/corpus.hpp"
