// Copyright 2026 The qgp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qgp {

/// Trials are grouped in chunks of this many; the chunking never depends on
/// the worker count, so per-chunk partial results are identical for any
/// number of threads.
inline constexpr std::uint64_t kTrialChunk = 4096;

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `chunk_fn(begin, end)` over [0, count) in fixed-size chunks on up to
/// `threads` workers and folds the partial results with `merge` in chunk
/// order. The result is bit-identical for every thread count.
template <class Partial, class ChunkFn, class Merge>
Partial reduce_trials(std::uint64_t count, unsigned threads, ChunkFn chunk_fn,
                      Merge merge) {
    const std::uint64_t chunks = (count + kTrialChunk - 1) / kTrialChunk;
    std::vector<Partial> partials(chunks);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(
        resolve_threads(threads), std::max<std::uint64_t>(chunks, 1)));

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            try {
                const std::uint64_t begin = c * kTrialChunk;
                partials[c] =
                    chunk_fn(begin, std::min(count, begin + kTrialChunk));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = chunks;
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Partial total{};
    for (const auto &p : partials) {
        total = merge(total, p);
    }
    return total;
}

} // namespace qgp
