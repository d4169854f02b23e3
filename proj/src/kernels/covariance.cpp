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

#include "qgp/kernels/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Cholesky>

#include "qgp/errors.hpp"

namespace qgp::kernels {

std::string_view kernel_name(KernelKind kind) {
    switch (kind) {
    case KernelKind::SquaredExponential:
        return "rbf";
    case KernelKind::CompactSupport:
        return "compact";
    }
    return "unknown";
}

KernelKind parse_kernel_kind(std::string_view name) {
    if (name == "rbf" || name == "se" || name == "squared-exponential") {
        return KernelKind::SquaredExponential;
    }
    if (name == "compact" || name == "wendland") {
        return KernelKind::CompactSupport;
    }
    throw ConfigError("unknown kernel '" + std::string(name) + "' (expected rbf or compact)");
}

void Hyperparameters::validate() const {
    auto check = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string(name) + " must be finite and > 0");
        }
    };
    check(lengthscale, "lengthscale");
    check(signal_variance, "signal variance");
    check(noise_variance, "noise variance");
    check(support_radius, "support radius");
}

double kernel_value(const KernelSpec &spec, double distance) {
    const auto &p = spec.params;
    switch (spec.kind) {
    case KernelKind::SquaredExponential:
        return p.signal_variance *
               std::exp(-distance * distance / (2.0 * p.lengthscale * p.lengthscale));
    case KernelKind::CompactSupport: {
        const double r = distance / p.support_radius;
        if (r >= 1.0) {
            return 0.0;
        }
        const double t = 1.0 - r;
        return p.signal_variance * (t * t) * (t * t) * (4.0 * r + 1.0);
    }
    }
    throw ConfigError("invalid kernel kind");
}

SymmetricMatrix build_covariance(const Dataset &data, const KernelSpec &spec) {
    spec.params.validate();
    const Matrix &x = data.inputs();
    const Eigen::Index n = x.rows();
    Matrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = spec.params.signal_variance;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = (x.row(i) - x.row(j)).norm();
            if (!std::isfinite(r)) {
                throw NumericError("non-finite distance between inputs " + std::to_string(i) +
                                   " and " + std::to_string(j));
            }
            const double v = kernel_value(spec, r);
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return SymmetricMatrix(std::move(k));
}

SymmetricMatrix regularized_matrix(const SymmetricMatrix &k, double noise_variance) {
    if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
        throw ConfigError("noise variance must be finite and > 0");
    }
    Matrix a = k.dense();
    a.diagonal().array() += noise_variance;
    return SymmetricMatrix(std::move(a));
}

SymmetricMatrix regularized_covariance(const Dataset &data, const KernelSpec &spec) {
    return regularized_matrix(build_covariance(data, spec), spec.params.noise_variance);
}

std::size_t sparsity(const SymmetricMatrix &a, double zero_tolerance) {
    const Matrix &m = a.dense();
    std::size_t best = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const auto count = static_cast<std::size_t>(
            (m.row(i).array().abs() > zero_tolerance).count());
        best = std::max(best, count);
    }
    return best;
}

Vector sample_gaussian(const SymmetricMatrix &cov, Rng &rng) {
    Eigen::LLT<Matrix> llt(cov.dense());
    if (llt.info() != Eigen::Success) {
        throw DefinitenessError("covariance is not positive definite");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector xi(static_cast<Eigen::Index>(cov.size()));
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        xi(i) = normal(rng);
    }
    return llt.matrixL() * xi;
}

Matrix uniform_inputs(std::size_t n, std::size_t d, double extent, Rng &rng) {
    if (n == 0 || d == 0) {
        throw ConfigError("need n >= 1 and d >= 1");
    }
    Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            x(i, j) = extent * rng.uniform();
        }
    }
    return x;
}

Matrix grid_inputs(std::size_t n, double spacing) {
    if (n == 0) {
        throw ConfigError("need n >= 1");
    }
    Matrix x(static_cast<Eigen::Index>(n), 1);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        x(i, 0) = spacing * static_cast<double>(i);
    }
    return x;
}

Dataset sample_gp_dataset(Matrix inputs, const KernelSpec &spec, Rng &rng) {
    Dataset shell(inputs, Vector::Zero(inputs.rows()));
    const auto a = regularized_covariance(shell, spec);
    return shell.with_outputs(sample_gaussian(a, rng));
}

} // namespace qgp::kernels
