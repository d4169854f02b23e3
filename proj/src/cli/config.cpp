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

#include "qgp/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "qgp/errors.hpp"
#include "qgp/text.hpp"

namespace qgp::cli {

std::vector<std::string> parse_config_text(std::istream &in) {
    std::vector<std::string> tokens;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(number) + " is not key=value");
        }
        const auto key = trim(body.substr(0, eq));
        const auto value = trim(body.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(number) + " has an empty key");
        }
        if (key == "config") {
            throw ConfigError("config files cannot include other config files");
        }
        if (value == "false") {
            continue;
        }
        tokens.push_back("--" + std::string(key));
        if (value != "true") {
            tokens.emplace_back(value);
        }
    }
    return tokens;
}

std::vector<std::string> read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    return parse_config_text(in);
}

std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw ConfigError("--config needs a path");
            }
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    const auto extra = read_config_file(path);
    std::size_t lead = 0;
    while (lead < args.size() && !args[lead].empty() && args[lead].front() != '-') {
        ++lead;
    }
    std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(lead));
    out.insert(out.end(), extra.begin(), extra.end());
    out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(lead), args.end());
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (const auto &item : split(text, ',')) {
        try {
            out.push_back(parse_real(trim(item)));
        } catch (const DataError &) {
            throw ConfigError("bad number '" + std::string(item) + "' in list");
        }
    }
    if (out.empty()) {
        throw ConfigError("empty list");
    }
    return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (const auto &item : split(text, ',')) {
        const auto t = trim(item);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
            throw ConfigError("bad integer '" + std::string(item) + "' in list");
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw ConfigError("empty list");
    }
    return out;
}

} // namespace qgp::cli
