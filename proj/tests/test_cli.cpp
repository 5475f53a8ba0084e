/*
   Copyright 2026 The hltrans Authors

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

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Result {
    int code;
    std::string out;
};

// stderr is folded into the capture when err is set
Result run(const std::string& args, bool err = false, const std::string& env = "") {
    const std::string cmd = env + " \"" HLTRANS_CLI_PATH "\" " + args + (err ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, MatrixText) {
    const Result r = run("matrix --from F --to M --n 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "M(F,M)  2  11\n2       1  1\n11      0  1\n");
    const Result pg = run("matrix --from P --to G --n 4");
    EXPECT_EQ(pg.code, 0);
    EXPECT_TRUE(has(pg.out, "t^2 - t")) << pg.out;
}

TEST(Cli, MatrixJsonAndLatex) {
    const Result r = run("matrix --from K --to G --n 4 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 3u);
    EXPECT_EQ(j["cols"].size(), 8u);
    EXPECT_EQ(j["entries"][0][7], nlohmann::json::parse("[1,1,1,2,1,1,1]"));
    const Result tex = run("matrix --from F --to G --n 3 --format latex");
    EXPECT_EQ(tex.code, 0);
    EXPECT_TRUE(has(tex.out, "\\bordermatrix"));
    EXPECT_EQ(run("matrix --from P --to G --n 5 --no-shortcut").out, run("matrix --from P --to G --n 5").out);
}

TEST(Cli, Expand) {
    const Result r = run("expand --function P --shape 2.1 --basis F");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "F_21: 1\nF_12: 1\nF_111: -t^2 - t\n");
    const Result e = run("expand --function P --shape 2.1/2.1 --basis M");
    EXPECT_EQ(e.out, "M_ε: 1\n");
    const Result j = run("expand --function Q --shape 3.1/1 --basis M --format json");
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["basis"], "M");
}

TEST(Cli, ShorthandWarns) {
    const Result r = run("expand --function P --shape 21 --basis F", true);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "warning: '21' read as single-digit parts 2.1")) << r.out;
    EXPECT_FALSE(has(run("expand --function P --shape 2.1 --basis F", true).out, "warning"));
}

TEST(Cli, Verify) {
    const Result r = run("verify --suite appendix");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "21/21 checks passed")) << r.out;
    EXPECT_EQ(run("verify --suite oracle --max-n 3").code, 0);
    EXPECT_EQ(run("verify --suite oracle --max-n 6").code, 2);
}

TEST(Cli, Enumerate) {
    const Result r = run("enumerate --objects syt --shape 3.2");
    EXPECT_EQ(r.code, 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    EXPECT_EQ(lines, 5);
    const auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    EXPECT_TRUE(first.contains("des"));
    EXPECT_TRUE(first.contains("espec"));
    const Result s = run("enumerate --objects sct --shape 1.3");
    EXPECT_EQ(s.code, 0);
    EXPECT_TRUE(has(s.out, "descent_composition"));
    EXPECT_EQ(run("enumerate --objects starred --shape 2.1 --variant Q").code, 0);
    EXPECT_EQ(run("enumerate --objects ssct --shape 2.2 --content 1.2.1").code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("matrix --from X --to M --n 2").code, 2);
    EXPECT_EQ(run("matrix --from F --to P --n 2").code, 2);
    EXPECT_EQ(run("expand --function P --shape 1.2 --basis F").code, 2);
    EXPECT_EQ(run("expand --function P --shape 2/3 --basis F").code, 2);
    EXPECT_EQ(run("matrix --from F --to M --n 8").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Caps) {
    EXPECT_EQ(run("matrix --from F --to M --n 4", false, "HLTRANS_MAX_N=3").code, 2);
    EXPECT_EQ(run("matrix --from F --to M --n 4 --cap 4", false, "HLTRANS_MAX_N=3").code, 0);
    EXPECT_EQ(run("matrix --from P --to s --n 6").code, 2);
    EXPECT_EQ(run("matrix --from P --to s --n 6", false, "HLTRANS_MAX_N_TOURNAMENT=6").code, 0);
    EXPECT_EQ(run("matrix --from F --to M --n 2", false, "HLTRANS_MAX_N=abc").code, 2);
}
