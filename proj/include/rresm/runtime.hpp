#pragma once

namespace rresm {

// Number of worker threads used by the compute kernels. Resolved once from
// RRESM_THREADS (clamped to [1, hardware_concurrency]), defaulting to the
// hardware thread count. All kernels partition work over output elements
// only, so results do not depend on this value.
int thread_count();

// Override for benchmarks/tests. n < 1 resets to the default resolution.
void set_thread_count(int n);

}  // namespace rresm
