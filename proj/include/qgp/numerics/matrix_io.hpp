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

#include <filesystem>
#include <iosfwd>

#include "qgp/numerics/symmetric_matrix.hpp"

namespace qgp::numerics {

// Matrix text format: a line holding n, then n lines of n whitespace
// separated decimals written with 17 significant digits.

void write_matrix(std::ostream &out, const Matrix &m);
void write_matrix(std::ostream &out, const SymmetricMatrix &a);

Matrix read_matrix(std::istream &in);
SymmetricMatrix read_symmetric_matrix(std::istream &in);

SymmetricMatrix load_symmetric_matrix(const std::filesystem::path &path);
void save_matrix(const std::filesystem::path &path, const SymmetricMatrix &a);

} // namespace qgp::numerics
