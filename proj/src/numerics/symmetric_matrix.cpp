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

#include "qgp/numerics/symmetric_matrix.hpp"

#include <cmath>
#include <string>

#include "qgp/errors.hpp"

namespace qgp::numerics {

SymmetricMatrix::SymmetricMatrix(Matrix dense, double symmetry_tolerance)
    : dense_(std::move(dense)), symmetry_tolerance_(symmetry_tolerance) {
    if (!(symmetry_tolerance_ >= 0.0) || !std::isfinite(symmetry_tolerance_)) {
        throw ConfigError("symmetry tolerance must be finite and >= 0");
    }
    if (dense_.rows() != dense_.cols()) {
        throw DimensionError("matrix is " + std::to_string(dense_.rows()) + "x" +
                             std::to_string(dense_.cols()) + ", expected square");
    }
    if (dense_.rows() == 0) {
        throw DimensionError("matrix must have positive dimension");
    }
    if (!dense_.allFinite()) {
        throw DataError("matrix has non-finite entries");
    }
    const Eigen::Index n = dense_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double a = dense_(i, j);
            const double b = dense_(j, i);
            if (std::abs(a - b) > symmetry_tolerance_) {
                throw SymmetryError("entries (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") and transpose differ by " +
                                    std::to_string(std::abs(a - b)));
            }
            const double avg = a == b ? a : 0.5 * (a + b);
            dense_(i, j) = avg;
            dense_(j, i) = avg;
        }
    }
}

SymmetricMatrix SymmetricMatrix::from_coordinates(std::size_t n,
                                                  std::span<const MatrixEntry> entries,
                                                  double symmetry_tolerance) {
    if (n == 0) {
        throw DimensionError("matrix must have positive dimension");
    }
    const auto size = static_cast<Eigen::Index>(n);
    Matrix dense = Matrix::Zero(size, size);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(size, size, false);
    for (const auto &e : entries) {
        if (e.row >= n || e.col >= n) {
            throw DimensionError("coordinate (" + std::to_string(e.row) + "," +
                                 std::to_string(e.col) + ") outside " +
                                 std::to_string(n) + "x" + std::to_string(n));
        }
        const auto r = static_cast<Eigen::Index>(e.row);
        const auto c = static_cast<Eigen::Index>(e.col);
        if (seen(r, c)) {
            throw DataError("duplicate coordinate (" + std::to_string(e.row) + "," +
                            std::to_string(e.col) + ")");
        }
        seen(r, c) = true;
        dense(r, c) = e.value;
    }
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = i + 1; j < size; ++j) {
            if (seen(i, j) && !seen(j, i)) {
                dense(j, i) = dense(i, j);
            } else if (seen(j, i) && !seen(i, j)) {
                dense(i, j) = dense(j, i);
            }
        }
    }
    return SymmetricMatrix(std::move(dense), symmetry_tolerance);
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    const auto size = static_cast<Eigen::Index>(n);
    return SymmetricMatrix(Matrix::Identity(size, size));
}

SymmetricMatrix SymmetricMatrix::diagonal(const Vector &values) {
    return SymmetricMatrix(Matrix(values.asDiagonal()));
}

std::vector<MatrixEntry> SymmetricMatrix::coordinates(double zero_tolerance) const {
    std::vector<MatrixEntry> out;
    const Eigen::Index n = dense_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(dense_(i, j)) > zero_tolerance) {
                out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                               dense_(i, j)});
            }
        }
    }
    return out;
}

Vector SymmetricMatrix::multiply(const Vector &x) const {
    if (x.size() != dense_.rows()) {
        throw DimensionError("vector length " + std::to_string(x.size()) +
                             " does not match matrix dimension " +
                             std::to_string(dense_.rows()));
    }
    return dense_.selfadjointView<Eigen::Lower>() * x;
}

} // namespace qgp::numerics
