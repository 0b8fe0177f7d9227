#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace bsroots {

/// Run body(k) for k in [0, count), across OpenMP threads when `parallel`.
/// Exceptions are collected and the one from the lowest index is rethrown,
/// so the outcome does not depend on scheduling.
template <class Body>
void for_each_index(std::size_t count, bool parallel, Body&& body)
{
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
        try {
            body(static_cast<std::size_t>(k));
        } catch (...) {
            errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace bsroots
