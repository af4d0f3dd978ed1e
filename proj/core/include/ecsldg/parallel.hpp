#pragma once

#include <functional>

namespace ecsldg {

/// Worker count used by line sweeps; defaults to 1.
int num_threads();
void set_num_threads(int n);

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. Chunks are disjoint, so results do not depend on the
/// thread count as long as body writes only its own range.
void parallel_for(int n, const std::function<void(int, int)>& body);

}  // namespace ecsldg
