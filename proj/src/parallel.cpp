#include "sigcover/parallel.hpp"

#include <exception>
#include <vector>

namespace sigcover {

void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn) {
    std::vector<std::exception_ptr> errors(n);
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace sigcover
