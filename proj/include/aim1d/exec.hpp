#pragma once

namespace aim1d {

// Execution policy for the data-parallel kernels (root iteration, Sturm
// bisection, parameter sweeps). Exec::seq is the serial reference path;
// Exec::par uses OpenMP when compiled in. Both orderings of every kernel
// produce bitwise-identical results, which the parallel consistency tests
// assert.
enum class Exec { seq, par };

namespace exec {

// Number of worker threads the parallel kernels may use. 0 = library has
// not been configured; OpenMP's own default applies.
int max_threads();
void set_max_threads(int n);

// Hardware thread count as seen by OpenMP (1 if OpenMP is compiled out).
int hardware_threads();

} // namespace exec
} // namespace aim1d
