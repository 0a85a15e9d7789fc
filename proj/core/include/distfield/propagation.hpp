#pragma once

#include "distfield/grid.hpp"

namespace distfield {

// Value-propagation transforms. The individual scan passes are exposed so the
// intermediate states are observable; each transform below is exactly the
// documented sequence of passes over init_distance_map(img, kind).

// Two raster scans, two 4-neighbour comparisons each. The forward scan relaxes
// against the left and top neighbours starting at the second row/column, so
// row 0 sees only its left neighbour and column 0 is left untouched; the
// backward scan mirrors this from the opposite corner.
void cityblock_forward_pass(DistanceMap& dm);
void cityblock_backward_pass(DistanceMap& dm);

// Separable form: per-column down/up passes, then per-row forward/backward
// passes. Columns (then rows) are independent and may run concurrently.
void cityblock_vertical_passes(DistanceMap& dm, unsigned threads = 1);
void cityblock_horizontal_passes(DistanceMap& dm, unsigned threads = 1);

// Chamfer 3-4 raster scans: straight neighbours add 3, diagonal neighbours
// add 4; neighbours outside the grid are skipped.
void chamfer_forward_pass(DistanceMap& dm);
void chamfer_backward_pass(DistanceMap& dm);

DistanceMap cityblock_sequential(const BinaryImage& img);
DistanceMap cityblock_separable(const BinaryImage& img, unsigned threads = 1);
DistanceMap chamfer34(const BinaryImage& img);

// (d/3)^2 per cell, scaling chamfer values back to unit pixel steps so they
// compare against squared euclidean maps. Requires kind == chamfer3.
Grid<double> chamfer_normalized(const DistanceMap& dm);

}  // namespace distfield
