/*
   Copyright 2026 The ffperm Authors

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

#ifndef FFPERM_PARALLEL_HPP
#define FFPERM_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ffperm {

// Runs fn(begin, end, chunk_index) over `workers` contiguous chunks of
// [0, count). Chunk boundaries depend only on (count, workers), and callers
// merge per-chunk results in chunk order, so output never depends on
// scheduling. The first exception thrown by any chunk is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, count);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        pool.emplace_back([&, begin, end, c] {
            try {
                fn(begin, end, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    parallel_chunks(count, workers, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

// Maps fn over [0, count) into a vector, in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
    std::vector<T> out(count);
    parallel_for(count, workers, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace ffperm

#endif
