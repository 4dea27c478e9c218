#pragma once

#include <cstdint>
#include <functional>

namespace mkv {

// Global worker count for particle-parallel loops. Defaults to the value of
// the MKV_THREADS environment variable, else hardware concurrency. The CLI
// --threads flag overrides. Results are identical for any thread count: work
// items write to disjoint slots and all reductions run single-threaded.
int thread_count();
void set_thread_count(int n);

// Runs fn(i) for i in [0, n). Chunked over thread_count() workers.
// fn must not throw across threads for distinct i ranges; exceptions are
// rethrown on the calling thread after joining.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace mkv
