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
#include <filesystem>
#include <iosfwd>

#include "qgp/numerics/symmetric_matrix.hpp"

namespace qgp::kernels {

using numerics::Matrix;
using numerics::Vector;

/// n observations of d real features with one real output each.
class Dataset {
  public:
    /// `inputs` is n x d, `outputs` has length n; n, d >= 1, all finite.
    Dataset(Matrix inputs, Vector outputs);

    std::size_t size() const { return static_cast<std::size_t>(inputs_.rows()); }
    std::size_t dimension() const { return static_cast<std::size_t>(inputs_.cols()); }
    const Matrix &inputs() const { return inputs_; }
    const Vector &outputs() const { return outputs_; }

    Dataset with_outputs(Vector outputs) const { return Dataset(inputs_, std::move(outputs)); }

  private:
    Matrix inputs_;
    Vector outputs_;
};

// CSV layout: header "x1,...,xd,y", then one row per observation.
void write_dataset_csv(std::ostream &out, const Dataset &data);
Dataset read_dataset_csv(std::istream &in);
Dataset load_dataset(const std::filesystem::path &path);

} // namespace qgp::kernels
