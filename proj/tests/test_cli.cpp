/*
   Copyright 2026 The ratsym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ratsym/cli.hpp"

using namespace ratsym;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code = -1;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "ratsym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

/// Runs a shell pipeline with $CLI bound to the built binary.
Outcome run_shell(const std::string& script) {
    const std::string cmd = "CLI='" RATSYM_CLI_PATH "'; " + script;
    FILE* p = popen(cmd.c_str(), "r");
    Outcome o;
    if (!p) return o;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) o.out.append(buf, n);
    const int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("ratsym_test_" + name);
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, AnalyzeSilvermanJson) {
    const auto o = run_cli({"analyze", "--map", "i*((z-1)/(z+1))^3", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["schema_version"], "1.0");
    EXPECT_EQ(j["degree"], 3);
    EXPECT_EQ(j["classification"]["verdict"], "PseudoReal");
    EXPECT_EQ(j["antiholo"]["has_imaginary_reflection"], true);
    EXPECT_EQ(j["antiholo"]["has_reflection"], false);
    EXPECT_EQ(j["mode"], "numeric");
    EXPECT_TRUE(j["tolerances"]["match"].is_string());
}

TEST(Cli, ReportFieldOrder) {
    const Json j = Json::parse(run_cli({"analyze", "--map", "z^2", "--json"}).out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "input", "map", "degree", "mode", "tolerances", "certified",
                                              "aut", "antiholo", "classification", "polynomial_like", "notes"}));
}

TEST(Cli, CertifiedExampleThirteen) {
    const auto o = run_cli({"analyze", "--map", "z*(1+z^6+i*z^12)/(-i-z^6+z^12)", "--json", "--certify"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["certified"], true);
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_EQ(j["aut"]["holo_type"], "Cyclic(6)");
    EXPECT_EQ(j["aut"]["generators"].size(), 1u);
    EXPECT_EQ(j["antiholo"]["min_order"], 4);
    EXPECT_EQ(j["classification"]["verdict"], "PseudoReal");
    EXPECT_EQ(j["classification"]["beta"], "-1");
    EXPECT_FALSE(j["classification"]["alpha"].is_null());
}

TEST(Cli, ModuliDegreeThirteen) {
    const auto o = run_cli({"moduli", "--degree", "13", "--n", "6", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["cyclic"][0]["complex_dimension"], 4);
    EXPECT_EQ(j["cyclic"][0]["antiholomorphic_order_2n_feasible"], true);
    EXPECT_EQ(j["components"]["witnessed"], 2);
    const auto text = run_cli({"moduli", "--degree", "13", "--n", "6"});
    EXPECT_NE(text.out.find("n = 6: dimension 4"), std::string::npos);
}

TEST(Cli, GeneratePipedIntoAnalyze) {
    const auto o = run_shell("\"$CLI\" generate example13 | \"$CLI\" analyze --json");
    ASSERT_EQ(o.code, 0);
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["aut"]["holo_type"], "Cyclic(6)");
    EXPECT_EQ(j["classification"]["verdict"], "PseudoReal");
}

TEST(Cli, GenerateFamilies) {
    const auto s = run_cli({"generate", "silverman", "--degree", "5"});
    ASSERT_EQ(s.code, 0);
    EXPECT_TRUE(equals_projective(parse_map_expr(s.out), silverman(5)));
    const auto t = run_cli({"generate", "t4", "--n", "6", "--r", "2", "--coeffs", "1,1,i"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_TRUE(equals_projective(parse_map_expr(t.out), example13()));
    const auto tj = run_cli({"generate", "--json", "t4", "--n", "8", "--r", "2", "--theta-num", "1", "--theta-den", "4",
                             "--coeffs", "1,2,i"});
    ASSERT_EQ(tj.code, 0) << tj.err;
    EXPECT_EQ(from_coeff_json(Json::parse(tj.out)).degree(), 17);
}

TEST(Cli, CoefficientFileInput) {
    const auto path = temp_file("coeffs.json", to_coeff_json(silverman(3)).dump());
    const auto o = run_cli({"analyze", "--coeff-file", path.string(), "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(Json::parse(o.out)["classification"]["verdict"], "PseudoReal");
    // JSON on stdin is recognized too
    const auto s = run_cli({"analyze", "--json"}, to_coeff_json(silverman(3)).dump());
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(Json::parse(s.out)["degree"], 3);
}

TEST(Cli, BatchIsolatesFailures) {
    const auto path = temp_file("batch.txt", "# maps\nz^2\nz^^2\n\ni*((z-1)/(z+1))^3\n");
    const auto o = run_cli({"analyze", "--batch", path.string(), "--json"});
    EXPECT_EQ(o.code, 2);
    const Json j = Json::parse(o.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["degree"], 2);
    EXPECT_EQ(j[1]["error"]["code"], "SyntaxError");
    EXPECT_EQ(j[2]["classification"]["verdict"], "PseudoReal");
}

TEST(Cli, Quotient) {
    const auto o = run_cli({"quotient", "--map", "z*(1+z^6+i*z^12)/(-i-z^6+z^12)", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(j["quotient_degree"], 13);
    EXPECT_EQ(j["semiconjugacy_verified"], true);
    EXPECT_EQ(run_cli({"quotient", "--map", "(z^3+2*z+i)/(3*z^2+1)"}).code, 2);
}

TEST(Cli, Verify) {
    auto o = run_cli({"verify", "--map", "i*((z-1)/(z+1))^3", "--auto", "[[0,-1],[1,0]]", "--antiholo", "true"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "verified: true\n");
    o = run_cli({"verify", "--map", "i*((z-1)/(z+1))^3", "--auto", "[[0,1],[1,0]]", "--antiholo", "true"});
    EXPECT_EQ(o.out, "verified: false\n");
    o = run_cli({"verify", "--map", "z^3", "--auto", "[[w(3,1),0],[0,1]]", "--antiholo", "false", "--json"});
    EXPECT_EQ(Json::parse(o.out)["verified"], false);
    o = run_cli({"verify", "--map", "z^3", "--auto", "[[0,1]]", "--antiholo", "false"});
    EXPECT_EQ(o.code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"analyze", "--map", "z^^2"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--map", "z^z"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--map", "3"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--map", "z", "--mode", "fast"}).code, 2);
    EXPECT_EQ(run_cli({"generate", "silverman", "--degree", "4"}).code, 2);
    EXPECT_EQ(run_cli({"moduli", "--degree", "4"}).code, 0);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    const auto e = run_cli({"analyze", "--map", "z^^2"});
    EXPECT_NE(e.err.find("offset 2"), std::string::npos);
    EXPECT_TRUE(e.out.empty());
    EXPECT_EQ(cli::exit_code_for(Errc::SearchBoundExceeded), 3);
    EXPECT_EQ(cli::exit_code_for(Errc::NotAGroup), 3);
    EXPECT_EQ(cli::exit_code_for(Errc::BadDegree), 2);
    EXPECT_EQ(run_shell("\"$CLI\" analyze --map 'z^^2' 2>/dev/null").code, 2);
}

TEST(Cli, DeterministicReports) {
    const std::vector<std::string> args{"analyze", "--map", "z*(1+z^6+i*z^12)/(-i-z^6+z^12)", "--json"};
    const auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.out, b.out);
    const auto c = run_shell("\"$CLI\" analyze --map 'i*((z-1)/(z+1))^5' --json --certify");
    const auto d = run_shell("\"$CLI\" analyze --map 'i*((z-1)/(z+1))^5' --json --certify");
    EXPECT_EQ(c.out, d.out);
    EXPECT_EQ(c.out.find("-0,"), std::string::npos);
}
