#pragma once

#include <cstddef>
#include <functional>

namespace sigcover {

// Calls fn(i) for i in [0, n), across OpenMP threads when parallel is set.
// Results must be written by index; the first exception in index order is
// rethrown after all indices have run.
void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn);

}  // namespace sigcover
