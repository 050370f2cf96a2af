#ifndef MONOWALK_MONOWALK_HPP
#define MONOWALK_MONOWALK_HPP

// Umbrella header: exact rational arithmetic, linear algebra, circuits,
// exact LP/IP solvers, augmentation walks, hardness generators, sparsity
// classification, and the file formats.

#include "rational.hpp"
#include "linalg.hpp"
#include "circuits.hpp"
#include "lp.hpp"
#include "ip.hpp"
#include "walks.hpp"
#include "hardness.hpp"
#include "sparsity.hpp"
#include "io.hpp"

#endif
