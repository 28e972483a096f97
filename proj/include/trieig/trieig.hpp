#pragma once

// Spectral geometry of triangles: closed-form Neumann spectra, Weyl-type
// counting bounds, a P1 finite-element eigensolver with Richardson
// extrapolation, and the transplantation machinery that compares
// diameter-normalized eigenvalue sums across the isosceles family.

#include "trieig/counting.hpp"
#include "trieig/csv.hpp"
#include "trieig/exact.hpp"
#include "trieig/fem.hpp"
#include "trieig/geometry.hpp"
#include "trieig/mutf.hpp"
#include "trieig/spectrum.hpp"
#include "trieig/svg.hpp"
#include "trieig/sweeps.hpp"
#include "trieig/verify.hpp"
