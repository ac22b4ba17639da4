#pragma once

namespace groth {

// Thread cap for the OpenMP kernels. Defaults to GROTHENDIECK_THREADS from
// the environment, or 1 when unset/invalid. Reductions are always performed
// in a fixed order, so results do not depend on this value.
int num_threads();
void set_num_threads(int n);  // n <= 0 restores the environment default

bool openmp_enabled();

}  // namespace groth
