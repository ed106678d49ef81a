#pragma once

#include <functional>

namespace modal_barrier {

/// Worker-thread budget: min(hardware concurrency, MODAL_BARRIER_THREADS).
/// MODAL_BARRIER_THREADS=1 forces sequential execution.
int thread_budget();

/// Run fn(i) for i in [0, count) on up to thread_budget() threads.
/// Each index writes only its own output slot, so results never depend on
/// the schedule.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace modal_barrier
