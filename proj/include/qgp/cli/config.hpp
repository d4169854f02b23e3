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
#include <string>
#include <string_view>
#include <vector>

namespace qgp::cli {

/// Flat key=value text. Blank lines and lines starting with '#' are
/// skipped; each entry becomes "--key value", except that a value of
/// "true" becomes the bare flag "--key" and "false" drops the entry.
std::vector<std::string> parse_config_text(std::istream &in);
std::vector<std::string> read_config_file(const std::filesystem::path &path);

/// Finds "--config PATH" (or "--config=PATH") in `args` and splices the
/// file's tokens in after the leading subcommand words, ahead of every
/// explicit flag. With last-value-wins parsing, flags then override the file.
std::vector<std::string> expand_config(const std::vector<std::string> &args);

/// Comma-separated lists such as "0.5,1,2".
std::vector<double> parse_real_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);

} // namespace qgp::cli
