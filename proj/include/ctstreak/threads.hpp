#pragma once

#include <functional>

namespace ctstreak {

// Caps the worker count used by parallel_for. 0 restores the default
// (hardware concurrency, or the CTSTREAK_THREADS environment variable).
void set_thread_count(int n);
int thread_count();

// Runs fn(begin, end) over a static partition of [0, n). Chunks are
// disjoint, so workers never write the same output element. Falls back to a
// single inline call when one worker is enough.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace ctstreak
