#include <gtest/gtest.h>

#include "augcube/io.hpp"

using namespace augcube;

TEST(Json, EdgesRoundTrip) {
  const auto edges = build_augmented_cube(4).edges();
  EXPECT_EQ(edges_from_json(edges_to_json(edges, 4), 4), edges);
  const auto j = edges_to_json(std::vector<Edge>{Edge::make(0, 1)}, 3);
  EXPECT_EQ(j.dump(), R"([["000","001"]])");
}

TEST(Json, GraphSchema) {
  const auto j = graph_to_json(build_augmented_cube(2));
  EXPECT_EQ(j.at("kind"), "AQ");
  EXPECT_EQ(j.at("generators"), Json::parse(R"(["01","10","11"])"));
  EXPECT_EQ(j.at("edges").size(), 6U);
  EXPECT_TRUE(verify_artifact(j).pass);
}

TEST(Json, BundleRoundTrip) {
  const auto b = augcube_edhcs(5);
  const auto back = bundle_from_json(bundle_to_json(b));
  EXPECT_EQ(back.cycles, b.cycles);
  EXPECT_EQ(back.n, 5);
}

TEST(Json, FaultSetIsAListOfPairs) {
  const FaultSet f = figure4_fixture(4);
  const Json j = fault_set_to_json(f);
  EXPECT_TRUE(j.is_array());
  EXPECT_EQ(fault_set_from_json(j, 4).faulty, f.faulty);
}

TEST(Verify, TamperedCycleNamesTheEdge) {
  Json j = bundle_to_json(augcube_edhcs(5));
  auto& c = j["cycles"][2];
  std::swap(c[5], c[6]);
  const auto check = verify_artifact(j);
  EXPECT_FALSE(check.pass);
  EXPECT_NE(check.detail.find("edge ("), std::string::npos) << check.detail;
}

TEST(Verify, WrongCycleCountFails) {
  Json j = bundle_to_json(augcube_edhcs(5));
  j["cycles"].erase(j["cycles"].size() - 1);
  EXPECT_FALSE(verify_artifact(j).pass);
}

TEST(Verify, TamperedPairAndGraphFail) {
  Json pair = pair_to_json(reciprocal_pair(4, {3}));
  EXPECT_TRUE(verify_artifact(pair).pass);
  pair["intersection"]["matching"] = "E_2";
  EXPECT_FALSE(verify_artifact(pair).pass);
  Json graph = graph_to_json(build_hypercube(3));
  graph["edges"].erase(0);
  EXPECT_FALSE(verify_artifact(graph).pass);
}

TEST(Verify, MalformedInputIsAFailure) {
  EXPECT_FALSE(verify_artifact(Json::parse("[1,2]")).pass);
  EXPECT_FALSE(verify_artifact(Json{{"artifact", "edhc"}}).pass);
  EXPECT_FALSE(verify_artifact(Json{{"artifact", "mystery"}}).pass);
}

TEST(Verify, FaultTrialReplay) {
  const auto t = run_fault_trial(5, 12, FaultPattern::Matching, 17);
  Json artifact{{"artifact", "fault-trial"}, {"n", 5}, {"faults", 12}, {"trials", Json::array({trial_to_json(t, 5, true)})}};
  EXPECT_TRUE(verify_artifact(artifact).pass);
  artifact["trials"][0]["seed"] = 18;
  EXPECT_FALSE(verify_artifact(artifact).pass);
}

TEST(Dot, StylesByEdgeKind) {
  const auto edges = build_augmented_cube(2).edges();
  const std::string dot = to_dot(2, edges, {{Edge::make(0, 1)}});
  EXPECT_NE(dot.find("\"00\" -- \"01\" [style=solid, label=\"1\", color="), std::string::npos) << dot;
  EXPECT_NE(dot.find("style=dashed, label=\"<=2\""), std::string::npos);
}
