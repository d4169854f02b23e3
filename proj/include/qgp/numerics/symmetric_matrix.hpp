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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qgp::numerics {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// One stored entry of a coordinate-list matrix.
struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;

    friend bool operator==(const MatrixEntry &, const MatrixEntry &) = default;
};

/// Real symmetric n x n matrix with finite entries.
///
/// Storage is dense. Coordinate lists are accepted on input and produced on
/// request; `from_coordinates` is the conversion path for sparse sources such
/// as compactly supported kernels. The stored matrix is exactly symmetric:
/// the constructor validates |a_ij - a_ji| <= symmetry_tolerance and then
/// replaces both entries with their average.
///
/// Instances are immutable after construction.
class SymmetricMatrix {
  public:
    static constexpr double kDefaultSymmetryTolerance = 1e-10;

    explicit SymmetricMatrix(Matrix dense,
                             double symmetry_tolerance = kDefaultSymmetryTolerance);

    /// Entries not listed are zero. An entry listed only in one triangle is
    /// mirrored; an entry listed in both must agree within the tolerance.
    /// Duplicate coordinates are rejected.
    static SymmetricMatrix
    from_coordinates(std::size_t n, std::span<const MatrixEntry> entries,
                     double symmetry_tolerance = kDefaultSymmetryTolerance);

    static SymmetricMatrix identity(std::size_t n);
    static SymmetricMatrix diagonal(const Vector &values);

    std::size_t size() const { return static_cast<std::size_t>(dense_.rows()); }
    const Matrix &dense() const { return dense_; }
    double operator()(std::size_t i, std::size_t j) const {
        return dense_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    double symmetry_tolerance() const { return symmetry_tolerance_; }

    /// Entries with |value| > zero_tolerance, row-major order.
    std::vector<MatrixEntry> coordinates(double zero_tolerance = 0.0) const;

    Vector multiply(const Vector &x) const;

    double frobenius_norm() const { return dense_.norm(); }

  private:
    Matrix dense_;
    double symmetry_tolerance_;
};

} // namespace qgp::numerics
