/*
   Copyright 2026 The toricbch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORICBCH_PARALLEL_HPP
#define TORICBCH_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toricbch {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(task) for every task in [0, count) on `threads` workers pulling
/// from a shared counter. Task decomposition is fixed by the caller, so
/// results merged per task are independent of the worker count.
template <class Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace toricbch

#endif
