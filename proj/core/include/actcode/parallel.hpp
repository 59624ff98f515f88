#pragma once

#include <cstddef>
#include <functional>

namespace actcode {

/// 0 maps to std::thread::hardware_concurrency() (at least 1).
std::size_t resolve_threads(std::size_t requested) noexcept;

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index runs
/// exactly once; if any call throws, the exception from the lowest failing
/// index is rethrown after all workers finish.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace actcode
