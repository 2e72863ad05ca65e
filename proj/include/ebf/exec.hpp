#ifndef EBF_EXEC_HPP
#define EBF_EXEC_HPP

#include <cstddef>

namespace ebf::exec {

/// Execution mode for the node/plaquette sweeps.  Parallel kernels write
/// only to their own index slot and all reductions happen afterwards in a
/// fixed serial order, so both modes produce bit-identical results.
enum class Mode { Serial, Parallel };

Mode default_mode();

/// Serial reference driver, kept as the ground truth the OpenMP path is
/// tested and benchmarked against.
template <typename F>
void serial_for(std::ptrdiff_t count, F&& fn) {
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

template <typename F>
void parallel_for(std::ptrdiff_t count, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
#else
  serial_for(count, fn);
#endif
}

template <typename F>
void for_each_index(Mode mode, std::ptrdiff_t count, F&& fn) {
  if (mode == Mode::Parallel)
    parallel_for(count, static_cast<F&&>(fn));
  else
    serial_for(count, static_cast<F&&>(fn));
}

}  // namespace ebf::exec

#endif
