#ifndef CMVRES_PARALLEL_HPP
#define CMVRES_PARALLEL_HPP

namespace cmvres {

// Number of threads grid kernels and the experiment harness may use.
// CMVRES_THREADS, when set to a positive integer, caps the OpenMP default.
int thread_cap();

}  // namespace cmvres

#endif
