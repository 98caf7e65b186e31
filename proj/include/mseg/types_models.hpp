#pragma once

#include <vector>

#include "mseg/partition.hpp"
#include "mseg/rep.hpp"

namespace mseg {

/// Each segment contributes dim_k copies of its length.
Partition lengths_partition(const Multisegment& m);

/// SL(2)-type: the Jordan type of the nilpotent part of the parameter of pi^t.
Partition sl2_type(const Rep& r);

/// Depth sequence, the conjugate of the SL(2)-type.
Composition depth_sequence(const Rep& r);

/// Positions i in 1..n-1 where the degenerate character attached to `d`
/// is non-trivial: every i except n - (d_1 + ... + d_j). Throws BadComposition.
std::vector<int> whittaker_positions(const Composition& d, int n);

}  // namespace mseg
