#pragma once

#include <cstddef>
#include <exception>

#include "hyperarith/core/execution.hpp"

namespace hyperarith {

/// Runs body(i) for i in [0, n). The parallel variant uses an OpenMP dynamic
/// schedule; the exception of the lowest failing index is rethrown after the
/// loop, matching what the serial variant would throw.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  long error_index = -1;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hyperarith_for_each_index)
      {
        if (error_index < 0 || i < error_index) {
          error = std::current_exception();
          error_index = i;
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hyperarith
