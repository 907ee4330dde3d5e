// Copyright 2026 The clickhd Authors
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

#include <sstream>

#include <gtest/gtest.h>

#include "clickhd/errors.hpp"
#include "clickhd/io.hpp"

namespace clickhd {
namespace {

using nlohmann::json;

TEST(StateJson, Forms) {
  const auto cat = io::state_from_json(json::parse(R"({"cat": {"alpha": [1, 0.5], "parity": "odd"}})"));
  ASSERT_TRUE(std::holds_alternative<CoherentSuperposition>(cat));
  EXPECT_EQ(std::get<CoherentSuperposition>(cat).terms().size(), 2u);
  EXPECT_EQ(mode_count(io::state_from_json(json::parse(R"({"two_mode_cat": {"alpha": 1}})"))), 2u);
  EXPECT_EQ(mode_count(io::state_from_json(json::parse(R"({"vacuum": {"modes": 3}})"))), 3u);
  const auto terms = io::state_from_json(
      json::parse(R"({"modes": 1, "terms": [{"c": 1, "alphas": [1]}, {"c": [0, 1], "alphas": [[-1, 0]]}]})"));
  EXPECT_NEAR(std::get<CoherentSuperposition>(terms).norm(), 1.0, 1e-14);
  const auto mixture = io::state_from_json(json::parse(
      R"({"mixture": [{"weight": 0.25, "state": {"coherent": {"alpha": 1}}}, {"weight": 0.75, "state": {"vacuum": {}}}]})"));
  EXPECT_TRUE(is_classical(mixture));
  const auto fock = io::state_from_json(json::parse(R"({"fock": {"truncation": 2, "amplitudes": [0, 1, 0]}})"));
  EXPECT_TRUE(std::holds_alternative<FockVector>(fock));
}

TEST(StateJson, Errors) {
  EXPECT_THROW(io::state_from_json(json::parse(R"({"squeezed": {}})")), InvalidArgument);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"cat": {"alpha": 0, "parity": "odd"}})")), DegenerateState);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"cat": {"alpha": 1, "parity": "neither"}})")), InvalidArgument);
}

TEST(SchemeJson, DefaultsAndArms) {
  const auto s = io::scheme_from_json(json::parse(R"({"scheme": "balanced4", "detector": {"N": 4, "eta": 0.7}})"));
  EXPECT_EQ(s.kind, io::SchemeKind::balanced4);
  EXPECT_EQ(s.detector, DetectorConfig(4, 0.7, 0.0));
  EXPECT_EQ(s.arms().size(), 2u);
  EXPECT_EQ(io::scheme_from_json(json::parse(R"({"scheme": "eight"})")).arms().size(), 4u);
  EXPECT_EQ(io::scheme_from_json(json::parse(R"({"scheme": "two_mode"})")).arms().size(), 4u);
  EXPECT_EQ(io::scheme_from_json(json::parse(R"({"scheme": "direct"})")).arms().size(), 1u);
  EXPECT_STREQ(io::to_string(io::SchemeKind::unbalanced4), "unbalanced4");
  EXPECT_THROW(io::scheme_from_json(json::parse(R"({"scheme": "sixteen"})")), InvalidArgument);
}

TEST(Histogram, CsvRoundTrip) {
  const ClickHistogram h({2, 1}, {5, 0, 3, 1, 0, 7});
  std::stringstream buffer;
  io::write_histogram_csv(buffer, h);
  EXPECT_EQ(io::read_histogram_csv(buffer), h);
}

TEST(Histogram, IngestsMeasuredCounts) {
  std::istringstream in("# measured run\nk,count\n0,10\n1,20\n3,5\n");
  const auto h = io::read_histogram_csv(in);
  EXPECT_EQ(h.sizes(), std::vector<int>{3});
  EXPECT_EQ(h.counts(), (std::vector<std::uint64_t>{10, 20, 0, 5}));
  std::istringstream bad("# sizes=2\n0,x\n");
  EXPECT_THROW(io::read_histogram_csv(bad), InvalidArgument);
  std::istringstream outside("# sizes=2\n3,1\n");
  EXPECT_THROW(io::read_histogram_csv(outside), InvalidArgument);
}

TEST(Distribution, CsvAndJson) {
  const ClickDistribution d({1, 1}, {0.1, 0.2, 0.3, 0.4});
  std::ostringstream out;
  io::write_distribution_csv(out, d);
  EXPECT_NE(out.str().find("\n1,0,0.29999999999999999\n"), std::string::npos);
  const auto j = io::distribution_to_json(d);
  EXPECT_EQ(j.at("sizes"), json::array({1, 1}));
}

TEST(ComplexJson, Forms) {
  EXPECT_EQ(io::complex_from_json(json(2.5)), Complex(2.5, 0.0));
  EXPECT_EQ(io::complex_from_json(json::array({1, -2})), Complex(1.0, -2.0));
  EXPECT_EQ(io::complex_to_json({1.0, -2.0}), json::array({1.0, -2.0}));
  EXPECT_THROW(io::complex_from_json(json("x")), InvalidArgument);
}

}  // namespace
}  // namespace clickhd
