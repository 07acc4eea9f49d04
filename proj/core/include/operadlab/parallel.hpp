#ifndef OPERADLAB_PARALLEL_HPP
#define OPERADLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace operadlab {

// Worker count: OPERADLAB_THREADS if set (clamped to [1,64]), else a small
// hardware-based default. Results of the helpers below never depend on it.
int thread_budget();

// Evaluates fn(i) for i in [0,n) with a fixed index->slot mapping, so output
// order is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace operadlab

#endif
