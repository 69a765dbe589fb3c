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

#ifndef FFPERM_REPORT_HPP
#define FFPERM_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "field.hpp"

namespace ffperm {

using json = nlohmann::ordered_json;

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

/// Outcome of an exhaustive or sampled check: counts, violations and
/// free-form details. Passes iff no violation was recorded.
struct VerificationReport {
    std::string name;
    json params = json::object();
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> violations;
    json details = json::object();
    double elapsed_ms = 0;

    bool ok() const noexcept { return violations.empty(); }

    void record(bool pass, const std::string& what) {
        ++checked;
        if (pass)
            ++passed;
        else
            violations.push_back(what);
    }

    json to_json() const {
        return json{{"check", name},       {"params", params},         {"ok", ok()},
                    {"checked", checked},  {"passed", passed},         {"skipped", skipped},
                    {"violations", violations}, {"details", details}, {"elapsed_ms", elapsed_ms}};
    }
};

inline json to_json(const CycInt& v) { return json(v.coords()); }

// Enough to rebuild the field and reproduce every w^j label.
inline json field_json(const Field& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"q", f.q()}, {"modulus", f.modulus()},
                {"generator", f.coeffs(f.generator())}};
}

// Drops every "elapsed_ms" key, recursively, for determinism comparisons.
inline json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

}  // namespace ffperm

#endif
