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

#include <cstdint>
#include <string>

#include "json.hpp"

namespace qgp::estimators {

/// Monte Carlo summary of one estimator run.
struct EstimateReport {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::uint64_t clamp_count = 0;  ///< k = 0 readouts
    std::uint64_t reject_count = 0; ///< failed post-selections (data-fit only)

    friend bool operator==(const EstimateReport &, const EstimateReport &) = default;
};

/// Keys in order: mean, stderr, samples, seed, clamps, rejects.
nlohmann::ordered_json to_json(const EstimateReport &report);
EstimateReport report_from_json(const nlohmann::ordered_json &j);

/// One-line JSON object, no trailing newline.
std::string to_json_line(const EstimateReport &report);

} // namespace qgp::estimators
