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

#include "qgp/estimators/report.hpp"

#include "qgp/errors.hpp"

namespace qgp::estimators {

nlohmann::ordered_json to_json(const EstimateReport &report) {
    nlohmann::ordered_json j;
    j["mean"] = report.mean;
    j["stderr"] = report.standard_error;
    j["samples"] = report.sample_count;
    j["seed"] = report.seed;
    j["clamps"] = report.clamp_count;
    j["rejects"] = report.reject_count;
    return j;
}

EstimateReport report_from_json(const nlohmann::ordered_json &j) {
    try {
        EstimateReport r;
        r.mean = j.at("mean").get<double>();
        r.standard_error = j.at("stderr").get<double>();
        r.sample_count = j.at("samples").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.clamp_count = j.at("clamps").get<std::uint64_t>();
        r.reject_count = j.at("rejects").get<std::uint64_t>();
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw DataError(std::string("malformed estimate report: ") + e.what());
    }
}

std::string to_json_line(const EstimateReport &report) { return to_json(report).dump(); }

} // namespace qgp::estimators
