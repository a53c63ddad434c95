#include <gtest/gtest.h>

#include "kschur/error.hpp"
#include "kschur/io.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/verdict.hpp"
#include "test_support.hpp"

using namespace kschur;
using kschur::testing::q;
using kschur::testing::schur_terms;
using kschur::testing::t;

TEST(Json, PartitionRoundTrip) {
  const Partition p{6, 5, 5, 3, 1, 1};
  EXPECT_EQ(to_json(p).dump(), "[6,5,5,3,1,1]");
  EXPECT_EQ(partition_from_json(to_json(p)), p);
  EXPECT_EQ(partition_from_json(Json::array()), Partition());
  EXPECT_THROW(partition_from_json(Json::parse("[1,\"a\"]")), DomainError);
  EXPECT_THROW(partition_from_json(Json::parse("[1,2]")), DomainError);
}

TEST(Json, CoefficientRoundTrip) {
  const QTPolynomial c = 1 + q() * t() * 3 - q(2);
  EXPECT_EQ(qt_from_json(to_json(c)), c);
  const QTPolynomial big = QTPolynomial::monomial(1, 0, BigInt("123456789012345678901234567890"));
  EXPECT_EQ(qt_from_json(to_json(big)), big);
  EXPECT_NE(to_json(big).dump().find("123456789012345678901234567890"), std::string::npos);
}

TEST(Json, ExpansionRoundTrip) {
  const SchurExpansion e = schur_terms(4, {{Partition{2, 1}, 1}, {Partition{3}, q()}});
  EXPECT_EQ(expansion_from_json(to_json(e), 4), e);
  EXPECT_EQ(to_json(e).dump(), to_json(expansion_from_json(to_json(e), 4)).dump());
}

TEST(Json, RootIdealRoundTrip) {
  const RootIdeal psi = kschur::testing::seven_schur_ideal();
  const Json j = to_json(psi);
  EXPECT_EQ(j.at("n"), 6);
  EXPECT_EQ(j.at("pairs").size(), 7u);
  EXPECT_EQ(root_ideal_from_json(j), psi);
  EXPECT_THROW(root_ideal_from_json(Json::parse(R"({"n":3,"pairs":[[2,3]]})")), DomainError);
}

TEST(Json, GHCharacter) {
  const Json j = to_json(gh_character(Partition{2, 1}));
  EXPECT_EQ(j.at("m"), 3);
  EXPECT_EQ(j.at("character").size(), 3u);
}

TEST(Json, VerdictShape) {
  const Json j = branch_verdict(Partition{1, 1, 1}, 1).to_json();
  for (const char* key : {"claim", "inputs", "expansion", "nonnegative", "witness"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j.at("nonnegative").get<bool>());
  EXPECT_TRUE(j.at("witness").is_null());

  KSchurExpansion bad{2, {}, SchurExpansion{4, {}}};
  bad.coeffs[Partition{2, 1}] = -q();
  const Verdict v = make_verdict("test", Json::object(), bad);
  EXPECT_FALSE(v.nonnegative);
  EXPECT_EQ(v.witness.at("kind"), "negative");
}

TEST(Csv, Expansion) {
  const SchurExpansion e = schur_terms(4, {{Partition{2, 1}, 1}, {Partition{3}, q()}});
  EXPECT_EQ(to_csv(e), "partition,q,t,coeff\n\"2,1\",0,0,1\n\"3\",1,0,1\n");
}
