// Copyright 2026 The qladder Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"

namespace qladder::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("qladder_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, MapParamsExample) {
    const Outcome r = invoke({"map-params", "--epsilon", "1.0", "--gz", "0.25", "--gx", "-0.5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[0].rfind("# qladder ", 0), 0u);
    EXPECT_NE(l[0].find("mode=map-params"), std::string::npos);
    EXPECT_NE(l[0].find("seed=1"), std::string::npos);
    EXPECT_NE(l[0].find("config_hash="), std::string::npos);
    EXPECT_EQ(l[1], "mu,u,t,offset");
    EXPECT_EQ(l[2], "-0.5,1,0.5,-0.75");
}

TEST(Cli, MapParamsInverse) {
    const Outcome r = invoke({"map-params", "--inverse", "--mu", "-0.5", "--u", "1", "--t", "0.5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto l = lines(r.out);
    EXPECT_EQ(l[1], "epsilon,gx,gz");
    EXPECT_EQ(l[2], "1,-0.5,0.25");
}

TEST(Cli, JsonRoundTripsDoubles) {
    const Outcome r = invoke({"ut-curve", "--gamma", "1", "--points", "200", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["meta"]["mode"], "ut-curve");
    EXPECT_EQ(doc["columns"][0], "phi_e");
    ASSERT_EQ(doc["rows"].size(), 200u);
    const auto row = doc["rows"][100];
    EXPECT_EQ(row[0].get<double>(), std::numbers::pi / 2);
    EXPECT_NEAR(row[1].get<double>(), std::pow(2.0, -0.25), 1e-12);
    EXPECT_EQ(doc["rows"][0][1].get<double>(), 0.0);

    // CSV carries the same values to the last bit.
    const Outcome csv = invoke({"ut-curve", "--gamma", "1", "--points", "200"});
    const auto l = lines(csv.out);
    const std::string cell = l[3 + 100].substr(l[3 + 100].find(',') + 1);
    EXPECT_EQ(std::stod(cell.substr(0, cell.find(','))), row[1].get<double>());
}

TEST(Cli, SpectrumExample) {
    const Outcome r = invoke({"spectrum", "--n", "1", "--epsilon", "1", "--gz", "0.25", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const std::vector<double> expected{-0.75, -0.25, -0.25, 1.25};
    ASSERT_EQ(doc["rows"].size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(doc["rows"][i][1].get<double>(), expected[i], 1e-14);
    }
}

TEST(Cli, HubbardSpectrumMatchesLadderAfterOffset) {
    const Outcome qs = invoke({"spectrum", "--n", "2", "--epsilon", "0.8", "--gx", "0.3", "--gz", "0.2", "--format", "json"});
    const Outcome fh = invoke({"spectrum", "--model", "hfh", "--n", "2", "--mu", "-0.4", "--u", "0.8", "--t", "-0.3",
                               "--format", "json"});
    ASSERT_EQ(qs.code, kExitOk) << qs.err;
    ASSERT_EQ(fh.code, kExitOk) << fh.err;
    const auto a = nlohmann::json::parse(qs.out)["rows"];
    const auto b = nlohmann::json::parse(fh.out)["rows"];
    ASSERT_EQ(a.size(), 16u);
    ASSERT_EQ(b.size(), 16u);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(a[i][1].get<double>(), b[i][1].get<double>() + 2 * (0.2 - 0.8), 1e-10);
    }
}

TEST(Cli, EvolveConservesChainNumbers) {
    const Outcome r = invoke({"evolve", "--n", "3", "--epsilon", "1", "--gx", "0.3", "--gz", "0.1", "--excite",
                              "1d,2u", "--t-final", "20", "--steps", "10", "--observables", "N_up,N_down,norm,energy",
                              "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 11u);
    const double e0 = doc["rows"][0][4].get<double>();
    for (const auto &row : doc["rows"]) {
        EXPECT_NEAR(row[1].get<double>(), 1.0, 1e-8);
        EXPECT_NEAR(row[2].get<double>(), 1.0, 1e-8);
        EXPECT_NEAR(row[3].get<double>(), 1.0, 1e-8);
        EXPECT_NEAR(row[4].get<double>(), e0, 1e-8);
    }
}

TEST(Cli, VerifyPassesAndFailsWithExitCodes) {
    const Outcome ok = invoke({"verify", "--n", "3", "--epsilon", "1.0", "--gx", "0.3", "--gz", "0.1"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
    EXPECT_EQ(ok.out.find(",fail"), std::string::npos);

    const Outcome bad = invoke({"verify", "--n", "2", "--epsilon", "1.0", "--gx", "0.3", "--gz", "0.1",
                                "--tol-spectrum", "0"});
    EXPECT_EQ(bad.code, kExitNumerical);
    EXPECT_NE(bad.out.find(",fail"), std::string::npos);
}

TEST(Cli, NumericalErrorExitsTwo) {
    const Outcome r = invoke({"circuit", "--decoherence", "1e-4", "--numeric-gz", "--zz-model", "full",
                              "--truncation", "2"});
    EXPECT_EQ(r.code, kExitNumerical);
    EXPECT_NE(r.err.find("qladder circuit:"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitOne) {
    EXPECT_EQ(invoke({"spectrum", "--n", "0"}).code, kExitValidation);
    EXPECT_EQ(invoke({"spectrum", "--n", "2", "--epsilon", "1,2,3"}).code, kExitValidation);
    EXPECT_EQ(invoke({"spectrum", "--bogus"}).code, kExitValidation);
    EXPECT_EQ(invoke({}).code, kExitValidation);
    EXPECT_EQ(invoke({"ut-curve", "--gamma", "-1"}).code, kExitValidation);
    EXPECT_EQ(invoke({"evolve", "--n", "2", "--excite", "3u"}).code, kExitValidation);
    EXPECT_EQ(invoke({"spectrum", "--n", "13"}).code, kExitValidation);
}

TEST(Cli, ConfigFileSectionsAndStrictKeys) {
    const auto dir = scratch_dir();
    const auto good = dir / "good.ini";
    std::ofstream(good) << "seed = 5\n[spectrum]\nn = 2\nepsilon = 1,1.1,0.9,1\ngx = 0.3\n";
    const Outcome from_file = invoke({"--config", good.string(), "spectrum"});
    ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
    const Outcome from_flags = invoke({"--seed", "5", "spectrum", "--n", "2", "--epsilon", "1,1.1,0.9,1", "--gx", "0.3"});
    EXPECT_EQ(from_file.out, from_flags.out);

    // Flags override the file.
    const Outcome override = invoke({"--config", good.string(), "spectrum", "--gx", "0.4"});
    EXPECT_NE(override.out, from_file.out);

    const auto unknown = dir / "unknown.ini";
    std::ofstream(unknown) << "[spectrum]\nbogus = 3\n";
    EXPECT_EQ(invoke({"--config", unknown.string(), "spectrum"}).code, kExitValidation);

    const auto top = dir / "top.ini";
    std::ofstream(top) << "frobnicate = 1\n";
    EXPECT_EQ(invoke({"--config", top.string(), "spectrum"}).code, kExitValidation);

    EXPECT_EQ(invoke({"--config", (dir / "missing.ini").string(), "spectrum"}).code, kExitValidation);
}

TEST(Cli, ConfigHashTracksOptions) {
    const auto a = lines(invoke({"spectrum", "--n", "2", "--gx", "0.3"}).out)[0];
    const auto b = lines(invoke({"spectrum", "--gx", "0.3", "--n", "2"}).out)[0];
    const auto c = lines(invoke({"spectrum", "--n", "2", "--gx", "0.31"}).out)[0];
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Cli, OutputFileAndDirectory) {
    const auto dir = scratch_dir();
    const auto file = dir / "spectrum.json";
    const Outcome r = invoke({"--output", file.string(), "--format", "json", "spectrum", "--n", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_NO_THROW(nlohmann::json::parse(read_file(file)));

    ::setenv("QLADDER_OUTPUT_DIR", dir.c_str(), 1);
    const Outcome d = invoke({"map-params", "--epsilon", "1"});
    ::unsetenv("QLADDER_OUTPUT_DIR");
    ASSERT_EQ(d.code, kExitOk) << d.err;
    EXPECT_NE(read_file(dir / "map-params.csv").find("mu,u,t,offset"), std::string::npos);

    EXPECT_EQ(invoke({"--output", "/nonexistent/dir/x.csv", "spectrum"}).code, kExitValidation);
}

TEST(Cli, VerifyAndDisorderAreDeterministic) {
    const std::vector<std::string> verify{"--seed", "11", "verify", "--n", "3", "--epsilon", "1", "--gx", "0.3",
                                          "--gz", "0.1"};
    EXPECT_EQ(invoke(verify).out, invoke(verify).out);
    const std::vector<std::string> disorder{"--seed", "11", "disorder", "--n", "2", "--epsilon", "1", "--gx",
                                            "0.3", "--gz", "0.1", "--eps-spread", "0.05", "--gx-spread", "0.1",
                                            "--samples", "6", "--experiment", "dynamics", "--threads", "3"};
    const Outcome a = invoke(disorder);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, invoke(disorder).out);

    std::vector<std::string> other = disorder;
    other[1] = "12";
    EXPECT_NE(invoke(other).out, a.out);
}

TEST(Cli, CircuitReportsFeasibility) {
    const double ej = 12.5 / std::cos(std::numbers::pi / 4);
    const Outcome r = invoke({"circuit", "--n", "2", "--e-c", "0.25", "--e-j", std::to_string(ej), "--e-l", "78.125",
                              "--k-m", "0.5", "--cx", "0.008", "--decoherence", "1e-4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    bool seen_ratio = false;
    for (const auto &row : doc["rows"]) {
        if (row[0] == "ratio") {
            EXPECT_NEAR(row[1].get<double>(), 100.0, 1e-4);
            seen_ratio = true;
        }
        if (row[0] == "feasible") {
            EXPECT_EQ(row[1].get<double>(), 1.0);
        }
    }
    EXPECT_TRUE(seen_ratio);
}

TEST(Cli, CircuitUnitConversion) {
    const double ej = 12.5 / std::cos(std::numbers::pi / 4);
    const std::vector<std::string> base{"--unit", "GHz", "circuit", "--n", "1", "--e-c", "0.25", "--e-j",
                                        std::to_string(ej), "--e-l", "78.125", "--k-m", "0.5", "--decoherence",
                                        "100", "--decoherence-unit", "kHz", "--format", "json"};
    const Outcome r = invoke(base);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    for (const auto &row : nlohmann::json::parse(r.out)["rows"]) {
        if (row[0] == "decoherence_rate") {
            EXPECT_NEAR(row[1].get<double>(), 1e-4, 1e-18);
        }
    }
    // A physical unit on the rate needs GHz energies.
    std::vector<std::string> plain(base.begin() + 2, base.end());
    EXPECT_EQ(invoke(plain).code, kExitValidation);
}

TEST(Cli, UtCurveWindowColumns) {
    const Outcome r = invoke({"ut-curve", "--points", "10", "--linewidth", "1e-4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["columns"].size(), 5u);
}

TEST(Cli, VersionFlag) {
    const Outcome r = invoke({"--version"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_FALSE(r.out.empty());
}

}  // namespace
}  // namespace qladder::cli
