#include "ebf/exec.hpp"

namespace ebf::exec {

Mode default_mode() {
#ifdef _OPENMP
  return Mode::Parallel;
#else
  return Mode::Serial;
#endif
}

}  // namespace ebf::exec
