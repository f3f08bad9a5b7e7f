#pragma once

// Umbrella header: exact Tor algebra of a face ring from its complement
// presentation, Taylor-resolution and subcomplex-cohomology cross-checks,
// and polyhedral-product Poincare series assembly.

#include "zktor/chain_complex.hpp"
#include "zktor/complexes.hpp"
#include "zktor/fields.hpp"
#include "zktor/hochster.hpp"
#include "zktor/io.hpp"
#include "zktor/lambda.hpp"
#include "zktor/matrix.hpp"
#include "zktor/moment_angle.hpp"
#include "zktor/poincare.hpp"
#include "zktor/taylor.hpp"
#include "zktor/vertex_set.hpp"
#include "zktor/verify.hpp"
