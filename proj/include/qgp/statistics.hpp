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

#include <cmath>
#include <cstdint>

namespace qgp {

/// Welford accumulator with Chan's pairwise merge. Identical inputs give an
/// exactly zero second moment, which the exact-bin tests rely on.
struct RunningStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    static RunningStats merge(const RunningStats &a, const RunningStats &b) {
        if (a.count == 0) {
            return b;
        }
        if (b.count == 0) {
            return a;
        }
        RunningStats out;
        out.count = a.count + b.count;
        const double na = static_cast<double>(a.count);
        const double nb = static_cast<double>(b.count);
        const double n = static_cast<double>(out.count);
        const double delta = b.mean - a.mean;
        out.mean = a.mean + delta * (nb / n);
        out.m2 = a.m2 + b.m2 + delta * delta * (na * nb / n);
        return out;
    }

    /// Unbiased sample variance; zero below two samples.
    double variance() const {
        return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    }

    double standard_error() const {
        return count > 0 ? std::sqrt(variance() / static_cast<double>(count))
                         : 0.0;
    }
};

} // namespace qgp
