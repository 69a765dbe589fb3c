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

#ifndef FFPERM_CHARACTER_HPP
#define FFPERM_CHARACTER_HPP

#include <cstdint>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace ffperm {

inline constexpr std::uint64_t max_weil_sum_order = std::uint64_t{1} << 28;

/// Canonical additive character chi(x) = zeta_p^{Tr(x)}.
inline CycInt chi(const Field& f, Element x) { return CycInt::root_power(f.p(), f.abs_trace(x)); }

struct WeilSumResult {
    CycInt value;
    std::uint64_t terms;
};

/// sum_x chi(fn(x)) over the whole field. Each chunk histograms the trace
/// values it sees; histograms are merged in chunk order.
template <class Fn>
WeilSumResult weil_sum_fn(const Field& f, Fn&& fn, unsigned workers = 1) {
    require(f.q() <= max_weil_sum_order, Errc::FieldTooLarge, "Weil sums limited to q <= 2^28");
    const std::uint32_t p = f.p();
    const std::size_t chunks = std::max(1u, workers);
    std::vector<std::vector<std::int64_t>> partial(chunks, std::vector<std::int64_t>(p, 0));
    parallel_chunks(f.q(), workers, [&](std::size_t b, std::size_t e, std::size_t c) {
        auto& h = partial[c];
        for (std::size_t i = b; i < e; ++i) ++h[f.abs_trace(fn(Element{static_cast<std::uint32_t>(i)}))];
    });
    std::vector<std::int64_t> total(p, 0);
    for (const auto& h : partial)
        for (std::uint32_t j = 0; j < p; ++j) total[j] += h[j];
    return {CycInt::from_exponent_counts(p, total), f.q()};
}

inline WeilSumResult weil_sum(const Field& f, const SparsePoly& poly, unsigned workers = 1) {
    CompiledPoly cp(f, poly);
    return weil_sum_fn(f, cp, workers);
}

}  // namespace ffperm

#endif
