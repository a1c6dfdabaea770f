#pragma once

// Umbrella header: exact lattice geometry and the full invariant pipeline
// for nodal toric Fano threefolds and their smoothings.

#include "fano3/database.hpp"
#include "fano3/errors.hpp"
#include "fano3/families.hpp"
#include "fano3/fan.hpp"
#include "fano3/intersection.hpp"
#include "fano3/invariants.hpp"
#include "fano3/linalg.hpp"
#include "fano3/matrix.hpp"
#include "fano3/periods.hpp"
#include "fano3/polytope.hpp"
