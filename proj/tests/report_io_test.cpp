// Copyright 2026 The arrowkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>

#include <gtest/gtest.h>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/parallel.hpp"
#include "arrowkit/ramsey.hpp"
#include "arrowkit/report_io.hpp"

namespace arrowkit {
namespace {

TEST(CertificateJsonTest, Schema) {
  const Graph k3 = make_complete(3);
  const Json j = certificate_to_json(make_coloring(k3, k3.edges()), 2, Pattern::path(3));
  EXPECT_EQ(j.dump(), R"({"host":"Bw","pattern":"P3","red":[[0,1],[0,2],[1,2]],"t":2})");
  const LoadedCertificate back = certificate_from_json(j);
  EXPECT_EQ(back.coloring.host, k3);
  EXPECT_EQ(back.t, 2);
  EXPECT_EQ(back.h, Pattern::path(3));
  EXPECT_EQ(verify_coloring(back.coloring.host, back.t, back.h, back.coloring),
            ColoringStatus::kValid);
}

TEST(VerdictJsonTest, RoundTrip) {
  for (const ArrowVerdict& v :
       {arrows(make_complete(3), 2, Pattern::path(3)), arrows(make_cycle(4), 2, Pattern::path(3)),
        arrows(make_cycle(8), 3, Pattern::path(7)), arrows(make_path(5), 3, Pattern::path(3))}) {
    EXPECT_EQ(verdict_from_json(Json::parse(verdict_to_json(v).dump())), v);
  }
}

TEST(ReportJsonTest, RoundTripAndReverify) {
  const SearchReport r = size_ramsey_exact(2, Pattern::path_union(2, 3), true, 8);
  const Json j = report_to_json(r);
  for (const char* key : {"budget", "conclusion", "per_size", "query", "reductions",
                          "tool_version", "wall_time_ms", "witness"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["witness"]["graph6"], "FhCKG");
  const SearchReport back = report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, r);
  EXPECT_TRUE(reverify_report(back).empty());
}

TEST(ReportJsonTest, FileRoundTrip) {
  const SearchReport r = size_ramsey_exact(2, Pattern::path(4), false, 5);
  const auto path = std::filesystem::temp_directory_path() / "arrowkit_report_test.json";
  write_json(report_to_json(r), path.string());
  EXPECT_EQ(report_from_json(read_json(path.string())), r);
  std::filesystem::remove(path);
  EXPECT_THROW(read_json("/nonexistent/report.json"), ReportError);
  EXPECT_THROW(write_json(Json::object(), "/nonexistent/dir/report.json"), ReportError);
}

TEST(ReportJsonTest, TamperingIsDetected) {
  const SearchReport r = size_ramsey_exact(2, Pattern::path_union(2, 3), false, 7);
  ASSERT_TRUE(reverify_report(r).empty());

  SearchReport bad_cert = r;
  auto& certs = bad_cert.per_size.at(5).certificates;
  const auto blue_fails = std::find_if(certs.begin(), certs.end(), [](const CertificateRecord& c) {
    return contains(c.coloring.host, Pattern::path_union(2, 3));
  });
  ASSERT_NE(blue_fails, certs.end());
  blue_fails->coloring.red.clear();  // all blue now contains 2P3
  EXPECT_FALSE(reverify_report(bad_cert).empty());

  SearchReport missing = r;
  missing.per_size.at(4).certificates.pop_back();
  EXPECT_FALSE(reverify_report(missing).empty());

  SearchReport wrong_witness = r;
  wrong_witness.witness->verdict.arrows = false;
  EXPECT_FALSE(reverify_report(wrong_witness).empty());

  SearchReport early = r;
  early.conclusion.lower = 7;
  EXPECT_FALSE(reverify_report(early).empty());
}

Json without_time(Json j) {
  j.erase("wall_time_ms");
  return j;
}

TEST(ReportJsonTest, ThreadCountDoesNotChangeContent) {
  set_worker_count(1);
  const Json one = without_time(report_to_json(size_ramsey_exact(2, Pattern::path_union(2, 4), false, 8)));
  set_worker_count(4);
  const Json four = without_time(report_to_json(size_ramsey_exact(2, Pattern::path_union(2, 4), false, 8)));
  set_worker_count(0);
  EXPECT_EQ(one.dump(), four.dump());
}

}  // namespace
}  // namespace arrowkit
