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

#include "qgp/numerics/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qgp/errors.hpp"
#include "qgp/text.hpp"

namespace qgp::numerics {

void write_matrix(std::ostream &out, const Matrix &m) {
    out << m.rows() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << format_real(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix(std::ostream &out, const SymmetricMatrix &a) {
    write_matrix(out, a.dense());
}

Matrix read_matrix(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("matrix file is empty");
    }
    const auto header = trim(line);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (ec != std::errc() || ptr != header.data() + header.size() || n == 0) {
        throw DataError("matrix header must be a positive integer, got '" +
                        std::string(header) + "'");
    }
    const auto size = static_cast<Eigen::Index>(n);
    Matrix m(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        if (!std::getline(in, line)) {
            throw DataError("matrix file ends after " + std::to_string(i) + " of " +
                            std::to_string(n) + " rows");
        }
        std::istringstream row(line);
        std::string token;
        Eigen::Index j = 0;
        while (row >> token) {
            if (j >= size) {
                throw DimensionError("row " + std::to_string(i) + " has more than " +
                                     std::to_string(n) + " entries");
            }
            m(i, j++) = parse_real(token);
        }
        if (j != size) {
            throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(j) +
                                 " entries, expected " + std::to_string(n));
        }
    }
    return m;
}

SymmetricMatrix read_symmetric_matrix(std::istream &in) {
    return SymmetricMatrix(read_matrix(in));
}

SymmetricMatrix load_symmetric_matrix(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open matrix file " + path.string());
    }
    return read_symmetric_matrix(in);
}

void save_matrix(const std::filesystem::path &path, const SymmetricMatrix &a) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write matrix file " + path.string());
    }
    write_matrix(out, a);
}

} // namespace qgp::numerics
