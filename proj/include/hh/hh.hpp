#pragma once

// Exact-arithmetic toolkit for harmonic cycles on finite chain complexes:
// spanning trees and cycletrees in every dimension, winding and cutting
// numbers, and the standard harmonic cycle/cocycle with an identity
// certificate.

#include "hh/chain_complex.hpp"
#include "hh/cycletrees.hpp"
#include "hh/forests.hpp"
#include "hh/graph_analytics.hpp"
#include "hh/harmonic.hpp"
#include "hh/homology.hpp"
#include "hh/io.hpp"
#include "hh/linalg.hpp"
#include "hh/matrix.hpp"
#include "hh/numeric.hpp"
#include "hh/winding.hpp"
