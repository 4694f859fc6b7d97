#pragma once

#include <cstddef>
#include <functional>

namespace uplab {

// Worker count: LAB_THREADS if set (>= 1), else hardware concurrency.
int thread_cap();

// Runs body(i) for i in [0, count). Each index must write only its own output
// slot; callers reduce afterwards in index order, so results do not depend on
// the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace uplab
