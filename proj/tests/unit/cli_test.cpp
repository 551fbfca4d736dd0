// Copyright 2026 The deltastab Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "deltastab/deltaspace.hpp"
#include "deltastab/statevec.hpp"
#include "json.hpp"

namespace deltastab::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::path(::testing::TempDir()) / name).string();
}

void write(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(Cli, Enumerate) {
    auto r = invoke({"enumerate", "-m", "2"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "1-4 2-3  0011\n1-2 3-4  0101\n");
    EXPECT_EQ(invoke({"enumerate", "-m", "1"}).out, "1-2  01\n");
    EXPECT_EQ(invoke({"enumerate", "-m", "0"}).code, kUsage);
    EXPECT_EQ(invoke({"enumerate", "-m", "9"}).code, kResourceCap);
    auto j = nlohmann::json::parse(invoke({"enumerate", "-m", "3", "--format", "json"}).out);
    EXPECT_EQ(j["diagrams"].size(), 5u);
}

TEST(Cli, Build) {
    auto r = invoke({"build", "--pairs", "1-3 2-5 4-6"});
    ASSERT_EQ(r.code, kOk);
    const StateVector s = deserialize_state(r.out);
    EXPECT_EQ(s.support_size(), 8u);
    EXPECT_EQ(s, singlet_product(PairPartition{{1, 3}, {2, 5}, {4, 6}}));

    const std::string path = temp_path("singlet.json");
    ASSERT_EQ(invoke({"build", "--pairs", "1-2", "--out", path}).code, kOk);
    const StateVector one = deserialize_state(slurp(path));
    EXPECT_EQ(one.coefficient(MultiIndex::from_string("01")), Amplitude(1.0));
    EXPECT_EQ(one.coefficient(MultiIndex::from_string("10")), Amplitude(-1.0));

    EXPECT_EQ(invoke({"build", "--pairs", "1-1"}).code, kUsage);
    EXPECT_EQ(invoke({"build", "--pairs", "1-2", "--out", "/nonexistent-dir/x.json"}).code, kIoFailure);
}

TEST(Cli, Decompose) {
    auto r = invoke({"decompose", "--m4"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const CoefficientMap c = deserialize_coefficients(r.out);
    ASSERT_EQ(c.entries().size(), 2u);
    for (const auto &[p, coeff] : c.entries()) EXPECT_NEAR(std::abs(coeff), 1.0 / std::sqrt(6.0), 1e-12);

    const std::string q = temp_path("q.json");
    write(q, serialize_state(singlet_product(PairPartition{{1, 4}, {2, 3}})));
    auto rq = invoke({"decompose", "--state", q, "--format", "text"});
    EXPECT_EQ(rq.code, kOk);
    EXPECT_EQ(rq.out, "1-4 2-3  1\n");

    const std::string basis = temp_path("basis.json");
    write(basis, serialize_state(StateVector::basis_state(MultiIndex::from_string("0011"))));
    auto rb = invoke({"decompose", "--state", basis});
    EXPECT_EQ(rb.code, kNotInVDelta);
    EXPECT_NE(rb.err.find("not in V_delta"), std::string::npos);

    EXPECT_EQ(invoke({"decompose", "--state", temp_path("missing.json")}).code, kUsage);
    const std::string bad = temp_path("bad.json");
    write(bad, "{\"n\": 4, \"amplitudes\": {\"01\": [1, 0]}}");
    EXPECT_EQ(invoke({"decompose", "--state", bad}).code, kUsage);
}

TEST(Cli, Stab) {
    auto r = invoke({"stab", "--m4"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("dimension: 3"), std::string::npos);
    EXPECT_NE(r.out.find("exactly_delta: true"), std::string::npos);

    const std::string coeffs = temp_path("p.json");
    write(coeffs, R"({"m": 2, "terms": [{"pairs": "1-2 3-4", "coeff": [1, 0]}]})");
    auto rp = invoke({"stab", coeffs});
    EXPECT_EQ(rp.code, kOk);
    EXPECT_EQ(rp.out, "dimension: 6, blocks: {1,2}|{3,4}, exactly_delta: false\n");

    auto rc = invoke({"stab", "--m4", "--tol", "1e-9", "--check"});
    EXPECT_EQ(rc.code, kOk);
    EXPECT_NE(rc.out.find("consistency: consistent"), std::string::npos);

    auto rt = invoke({"stab", "--m4", "--trials", "5", "--seed", "3"});
    EXPECT_EQ(rt.code, kOk);
    EXPECT_NE(rt.out.find("delta_invariance: pass"), std::string::npos);

    const std::string equal = temp_path("pq.json");
    write(equal, R"({"m": 2, "terms": [{"pairs": "1-2 3-4", "coeff": [1, 0]}, {"pairs": "1-4 2-3", "coeff": [1, 0]}]})");
    EXPECT_EQ(invoke({"stab", "--coeffs", equal, "--check"}).code, kConsistency);

    const std::string basis = temp_path("basis3.json");
    write(basis, serialize_state(StateVector::basis_state(MultiIndex::from_string("000"))));
    auto rn = invoke({"stab", basis});
    EXPECT_EQ(rn.code, kOk);
    EXPECT_EQ(rn.out, "dimension: 3, blocks: unset, exactly_delta: unset\n");
}

TEST(Cli, Star) {
    EXPECT_EQ(invoke({"star", "--m4"}).out, "star: true\n");
    const std::string coeffs = temp_path("star.json");
    write(coeffs, R"({"m": 2, "terms": [{"pairs": "1-2 3-4", "coeff": [1, 0]}]})");
    EXPECT_EQ(invoke({"star", coeffs}).out, "star: false\n");
}

TEST(Cli, Vdim) {
    EXPECT_EQ(invoke({"vdim", "-n", "6"}).out, "5\n");
    EXPECT_EQ(invoke({"vdim", "-n", "5"}).out, "0\n");
    EXPECT_EQ(invoke({"vdim", "-n", "14"}).code, kResourceCap);
    ::setenv("DELTASTAB_CAP_N", "3", 1);
    EXPECT_EQ(invoke({"vdim", "-n", "4"}).code, kResourceCap);
    ::setenv("DELTASTAB_CAP_N", "bogus", 1);
    EXPECT_EQ(invoke({"vdim", "-n", "4"}).code, kUsage);
    ::unsetenv("DELTASTAB_CAP_N");
}

TEST(Cli, Render) {
    const std::string svg = temp_path("chords.svg");
    ASSERT_EQ(invoke({"render", "--pairs", "1-3 2-5 4-6", "--svg", svg}).code, kOk);
    const std::string text = slurp(svg);
    EXPECT_NE(text.find("<svg"), std::string::npos);
    std::size_t chords = 0;
    for (std::size_t pos = text.find("class=\"chord\""); pos != std::string::npos;
         pos = text.find("class=\"chord\"", pos + 1))
        ++chords;
    EXPECT_EQ(chords, 3u);

    auto ascii = invoke({"render", "--pairs", "1-2 3-4", "--ascii"});
    EXPECT_EQ(ascii.code, kOk);
    EXPECT_EQ(ascii.out, "1-2\n3-4\nno crossings\n");

    auto crossing = invoke({"render", "--pairs", "1-3 2-5 4-6", "--ascii"});
    EXPECT_EQ(crossing.out, "1-3  crosses 2-5\n2-5  crosses 1-3 4-6\n4-6  crosses 2-5\n2 crossings\n");

    EXPECT_EQ(invoke({"render", "--pairs", "1-2 2-3"}).code, kUsage);
    EXPECT_EQ(invoke({"render", "--pairs", "1-2", "--svg", "/nonexistent-dir/x.svg"}).code, kIoFailure);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"enumerate", "-m", "2", "--bogus"}).code, kUsage);
    EXPECT_EQ(invoke({"decompose"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, FormatAmplitude) {
    EXPECT_EQ(format_amplitude(1.0), "1");
    EXPECT_EQ(format_amplitude(-1.0), "-1");
    EXPECT_EQ(format_amplitude(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_amplitude({0.5, -0.25}), "0.5-0.25i");
}

}  // namespace
}  // namespace deltastab::cli
