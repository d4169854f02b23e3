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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgp/cli/commands.hpp"
#include "qgp/cli/config.hpp"
#include "qgp/errors.hpp"

#include <sys/wait.h>

namespace qgp::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qgp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        data_ = (dir_ / "data.csv").string();
        const auto r = invoke({"gen-data", "--n", "16", "--seed", "5", "--out", data_});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
    std::string data_;
};

TEST(ConfigParseTest, KeyValueLines) {
    std::istringstream in("# comment\nn = 8\nwith-oracle=true\ntiming=false\n\nkernel=compact\n");
    EXPECT_EQ(parse_config_text(in),
              (std::vector<std::string>{"--n", "8", "--with-oracle", "--kernel", "compact"}));
    std::istringstream bad("no equals sign\n");
    EXPECT_THROW(parse_config_text(bad), ConfigError);
    std::istringstream nested("config=other.cfg\n");
    EXPECT_THROW(parse_config_text(nested), ConfigError);
}

TEST(ConfigParseTest, Lists) {
    EXPECT_EQ(parse_real_list("0.5,1,2.5"), (std::vector<double>{0.5, 1.0, 2.5}));
    EXPECT_EQ(parse_size_list("16,64"), (std::vector<std::size_t>{16, 64}));
    EXPECT_THROW(parse_real_list("1,,2"), ConfigError);
    EXPECT_THROW(parse_real_list("abc"), ConfigError);
    EXPECT_THROW(parse_size_list("-4"), ConfigError);
}

TEST_F(CliTest, GenDataIsDeterministic) {
    const auto a = invoke({"gen-data", "--n", "8", "--seed", "3"});
    const auto b = invoke({"gen-data", "--n", "8", "--seed", "3"});
    const auto c = invoke({"gen-data", "--n", "8", "--seed", "4"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    const auto lines = lines_of(a.out);
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[0], "x1,y");
}

TEST_F(CliTest, EstimateOutputsAndOracle) {
    for (const char *kind : {"logdet", "datafit", "lml"}) {
        const std::vector<std::string> args{"estimate", kind,   "--data", data_,
                                            "--seed",   "7",    "--T",    "256",
                                            "--samples-det", "2000", "--samples-fit", "2000",
                                            "--with-oracle"};
        const auto a = invoke(args);
        const auto b = invoke(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        const auto lines = lines_of(a.out);
        ASSERT_EQ(lines.size(), 2u);
        const auto report = nlohmann::json::parse(lines[0]);
        for (const char *key : {"mean", "stderr", "samples", "seed", "clamps", "rejects"}) {
            EXPECT_TRUE(report.contains(key)) << key;
        }
        EXPECT_EQ(report["seed"], 7);
        const auto oracle = nlohmann::json::parse(lines[1]);
        EXPECT_EQ(oracle["oracle"], kind);
        EXPECT_DOUBLE_EQ(oracle["error"].get<double>(),
                         report["mean"].get<double>() - oracle["value"].get<double>());
    }
}

TEST_F(CliTest, StderrShrinksWithSamples) {
    auto stderr_at = [&](const std::string &s) {
        const auto r = invoke({"estimate", "logdet", "--data", data_, "--seed", "8", "--samples-det", s});
        EXPECT_EQ(r.code, 0) << r.err;
        return nlohmann::json::parse(lines_of(r.out).at(0))["stderr"].get<double>();
    };
    const double ratio = stderr_at("2000") / stderr_at("20000");
    EXPECT_NEAR(ratio, std::sqrt(10.0), 0.2 * std::sqrt(10.0));
}

TEST_F(CliTest, MatrixInputForLogdet) {
    const auto path = dir_ / "a.txt";
    {
        std::ofstream f(path);
        f << "2\n2 0\n0 2\n";
    }
    const auto r = invoke({"estimate", "logdet", "--matrix", path.string(), "--seed", "1", "--T", "8",
                           "--spectral-bound", "3.5", "--with-oracle"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = nlohmann::json::parse(lines_of(r.out).at(0));
    EXPECT_NEAR(report["mean"].get<double>(), 2.0 * std::log(2.0), 1e-12);
    EXPECT_EQ(report["stderr"].get<double>(), 0.0);

    const auto bad = invoke({"estimate", "lml", "--matrix", path.string(), "--seed", "1"});
    EXPECT_EQ(bad.code, kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", data_}).code, kExitUsage);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", data_, "--seed", "1", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", data_, "--seed", "1", "--T", "100"}).code, kExitUsage);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", data_, "--seed", "1", "--kernel", "matern"}).code,
              kExitUsage);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", (dir_ / "missing.csv").string(), "--seed", "1"}).code,
              kExitData);
    {
        std::ofstream f(dir_ / "broken.csv");
        f << "x1,y\n1.0,abc\n";
    }
    EXPECT_EQ(invoke({"estimate", "lml", "--data", (dir_ / "broken.csv").string(), "--seed", "1"}).code,
              kExitData);
    // a spectral bound below the largest eigenvalue
    EXPECT_EQ(invoke({"estimate", "logdet", "--data", data_, "--seed", "1", "--spectral-bound", "0.2"}).code,
              kExitNumeric);
    // a rotation constant large enough to push C^2 / lambda_hat above one
    EXPECT_EQ(invoke({"estimate", "datafit", "--data", data_, "--seed", "1", "--rotation-constant", "10"}).code,
              kExitNumeric);
    EXPECT_EQ(invoke({"estimate", "lml", "--data", data_, "--seed", "1", "--out",
                      (dir_ / "no" / "such" / "dir" / "x.json").string()})
                  .code,
              kExitUsage);
}

TEST_F(CliTest, ConfigFileWithOverride) {
    const auto cfg = dir_ / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "# estimator settings\ndata=" << data_ << "\nseed=11\nsamples-det=1500\nsamples-fit=1500\nT=256\n";
    }
    const auto from_file = invoke({"estimate", "lml", "--config", cfg.string()});
    const auto explicit_flags = invoke({"estimate", "lml", "--data", data_, "--seed", "11", "--samples-det",
                                        "1500", "--samples-fit", "1500", "--T", "256"});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, explicit_flags.out);

    const auto overridden = invoke({"estimate", "lml", "--config", cfg.string(), "--seed", "12"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    EXPECT_EQ(nlohmann::json::parse(lines_of(overridden.out).at(0))["seed"], 12);
}

TEST_F(CliTest, OutFileMatchesStdout) {
    const auto path = (dir_ / "est.json").string();
    const std::vector<std::string> args{"estimate", "lml", "--data", data_, "--seed", "2", "--samples-det", "500",
                                        "--samples-fit", "500"};
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path});
    const auto a = invoke(args);
    const auto b = invoke(with_out);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_TRUE(b.out.empty());
    EXPECT_EQ(slurp(path), a.out);
}

TEST_F(CliTest, CompareRows) {
    const std::vector<std::string> args{"compare", "--data", data_, "--seed", "3", "--samples-det", "500",
                                        "--samples-fit", "500", "--T", "256"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto lines = lines_of(a.out);
    ASSERT_GE(lines.size(), 4u);
    EXPECT_EQ(lines[0], "method,n,budget,estimate,stderr,error_vs_oracle,wall_time");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 6);
        EXPECT_EQ(lines[i].back(), ',');
    }
    EXPECT_EQ(lines[1].rfind("exact,16,", 0), 0u);

    auto timed = args;
    timed.push_back("--timing");
    const auto t = invoke(timed);
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_NE(lines_of(t.out).at(1).back(), ',');
}

TEST_F(CliTest, TrainSinglePointAndGrid) {
    const auto one = invoke({"train", "--data", data_, "--seed", "4", "--grid-lengthscale", "0.7",
                             "--samples-det", "500", "--samples-fit", "500", "--T", "256"});
    ASSERT_EQ(one.code, 0) << one.err;
    const auto lines = lines_of(one.out);
    ASSERT_EQ(lines.size(), 2u);
    const auto summary = nlohmann::json::parse(lines[1])["summary"];
    EXPECT_EQ(summary["best_theta"]["lengthscale"], 0.7);
    EXPECT_EQ(summary["budget_used"], 1000);

    const std::vector<std::string> grid{"train", "--data", data_, "--seed", "4", "--grid-lengthscale",
                                        "0.3,0.6,1.2", "--grid-noise-variance", "0.05,0.1,0.2",
                                        "--samples-det", "500", "--samples-fit", "500", "--T", "256"};
    const auto a = invoke(grid);
    const auto b = invoke(grid);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    for (const auto &line : lines_of(a.out)) {
        EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    }
    EXPECT_EQ(invoke({"train", "--data", data_, "--seed", "4"}).code, kExitUsage);
}

TEST_F(CliTest, StudyRows) {
    const std::vector<std::string> args{"study", "--seed", "5", "--sizes", "8,16", "--repetitions", "8",
                                        "--samples-det", "300", "--samples-fit", "300"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto lines = lines_of(a.out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[1].rfind("8,", 0), 0u);
    EXPECT_EQ(lines[2].rfind("16,", 0), 0u);
    EXPECT_EQ(invoke({"study", "--seed", "5", "--sizes", "12"}).code, kExitUsage);
}

TEST_F(CliTest, BinaryMatchesInProcess) {
    const auto out = dir_ / "bin.json";
    const std::string command = std::string(QGP_CLI_PATH) + " estimate lml --data " + data_ +
                                " --seed 9 --samples-det 800 --samples-fit 800 > " + out.string();
    ASSERT_EQ(std::system(command.c_str()), 0);
    const auto in_process =
        invoke({"estimate", "lml", "--data", data_, "--seed", "9", "--samples-det", "800", "--samples-fit", "800"});
    EXPECT_EQ(slurp(out), in_process.out);

    const std::string failing = std::string(QGP_CLI_PATH) + " estimate lml --seed 1 --data " +
                                (dir_ / "missing.csv").string() + " 2> /dev/null";
    const int status = std::system(failing.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), kExitData);
}

} // namespace
} // namespace qgp::cli
