#pragma once

namespace wcde {

// Thread count for the parallel kernels. 0 leaves the OpenMP default in place.
// The WCDE_THREADS environment variable is consulted when no explicit value is given.
void set_threads(int n);
int configured_threads();
int max_threads();

}  // namespace wcde
