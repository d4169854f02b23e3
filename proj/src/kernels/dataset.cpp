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

#include "qgp/kernels/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "qgp/errors.hpp"
#include "qgp/text.hpp"

namespace qgp::kernels {

Dataset::Dataset(Matrix inputs, Vector outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    if (inputs_.rows() < 1 || inputs_.cols() < 1) {
        throw DimensionError("dataset needs at least one observation and one feature");
    }
    if (outputs_.size() != inputs_.rows()) {
        throw DimensionError("dataset has " + std::to_string(inputs_.rows()) +
                             " inputs but " + std::to_string(outputs_.size()) + " outputs");
    }
    if (!inputs_.allFinite() || !outputs_.allFinite()) {
        throw DataError("dataset contains non-finite values");
    }
}

void write_dataset_csv(std::ostream &out, const Dataset &data) {
    const auto d = data.dimension();
    for (std::size_t j = 0; j < d; ++j) {
        out << 'x' << (j + 1) << ',';
    }
    out << "y\n";
    for (Eigen::Index i = 0; i < data.inputs().rows(); ++i) {
        for (Eigen::Index j = 0; j < data.inputs().cols(); ++j) {
            out << format_real(data.inputs()(i, j)) << ',';
        }
        out << format_real(data.outputs()(i)) << '\n';
    }
}

Dataset read_dataset_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("dataset file is empty");
    }
    const auto header = split(trim(line), ',');
    if (header.size() < 2) {
        throw DataError("dataset header must be x1,...,xd,y");
    }
    const std::size_t d = header.size() - 1;
    for (std::size_t j = 0; j < d; ++j) {
        if (trim(header[j]) != "x" + std::to_string(j + 1)) {
            throw DataError("dataset header column " + std::to_string(j + 1) + " must be x" +
                            std::to_string(j + 1));
        }
    }
    if (trim(header.back()) != "y") {
        throw DataError("last dataset header column must be y");
    }

    std::vector<double> values;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(trim(line), ',');
        if (fields.size() != d + 1) {
            throw DimensionError("dataset row " + std::to_string(rows + 1) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(d + 1));
        }
        for (const auto f : fields) {
            values.push_back(parse_real(f));
        }
        ++rows;
    }
    if (rows == 0) {
        throw DataError("dataset has no observations");
    }
    Matrix inputs(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d));
    Vector outputs(static_cast<Eigen::Index>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            inputs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                values[i * (d + 1) + j];
        }
        outputs(static_cast<Eigen::Index>(i)) = values[i * (d + 1) + d];
    }
    return Dataset(std::move(inputs), std::move(outputs));
}

Dataset load_dataset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open dataset " + path.string());
    }
    return read_dataset_csv(in);
}

} // namespace qgp::kernels
