#include "vsl/parallel.hpp"

namespace vsl {

int& thread_count() {
  static int count = 0;
  return count;
}

}  // namespace vsl
