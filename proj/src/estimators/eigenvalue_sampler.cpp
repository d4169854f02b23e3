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

#include "qgp/estimators/eigenvalue_sampler.hpp"

#include <algorithm>

#include "qgp/errors.hpp"

namespace qgp::estimators {

EigenvalueSampler::EigenvalueSampler(const numerics::SpectralDecomposition &sd,
                                     const qsim::PhaseEstimationConfig &cfg)
    : cfg_(cfg), eigenvalues_(sd.eigenvalues) {
    cfg_.validate();
    samplers_.reserve(sd.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
        samplers_.emplace_back(qsim::pe_outcome_distribution(eigenvalues_(i), cfg_));
    }
}

bool EigenvalueSampler::readout(std::size_t index, Rng &rng, double &decoded,
                                std::uint64_t &clamps) const {
    const std::size_t bin = samplers_[index](rng);
    if (bin == 0) {
        ++clamps;
    }
    const auto value = qsim::decode_eigenvalue(bin, cfg_);
    if (!value) {
        return false;
    }
    decoded = *value;
    return true;
}

double EigenvalueSampler::sample_uniform(Rng &rng, std::uint64_t &clamps) const {
    double value = 0.0;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        if (readout(rng.index(size()), rng, value, clamps)) {
            return value;
        }
    }
    throw NumericError("zero-bin readout persisted through every resample");
}

double EigenvalueSampler::sample_weighted(const std::vector<double> &cdf, Rng &rng,
                                          std::uint64_t &clamps) const {
    double value = 0.0;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const double u = rng.uniform() * cdf.back();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto index = std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        if (readout(index, rng, value, clamps)) {
            return value;
        }
    }
    throw NumericError("zero-bin readout persisted through every resample");
}

} // namespace qgp::estimators
