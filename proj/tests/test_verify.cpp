#include <gtest/gtest.h>

#include "compound/verify.hpp"

using namespace compound;

TEST(Verify, ClaimListIsSortedAndComplete) {
  auto ids = claim_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(ids.size(), 16u);
  VerifyConfig config;
  for (const auto& id : ids) EXPECT_NO_THROW(config.cap(id));
}

TEST(Verify, SingleClaims) {
  auto r = check("thm-4.6", 8);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details.at("k"), 28);
  EXPECT_TRUE(check("thm-4.3", 1).passed());
  auto c = check("cor-4.2", 6);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.details.at("gram_size"), 11);
}

TEST(Verify, RejectsUnknownClaimsAndOutOfRangeN) {
  EXPECT_THROW(check("thm-9.9", 2), std::invalid_argument);
  EXPECT_THROW(check("thm-4.6", 0), std::invalid_argument);
  EXPECT_THROW(check("thm-4.6", 11), std::invalid_argument);
  EXPECT_THROW(check("golden-matrices", 2), std::invalid_argument);
  EXPECT_THROW(check_all(0), std::invalid_argument);
  EXPECT_THROW(check_all(3, 1, {}, {"nope"}), std::invalid_argument);
}

TEST(Verify, CapsAreConfiguration) {
  VerifyConfig config;
  config.merge(Json::parse(R"({"thm-4.6": 2})"));
  EXPECT_THROW(check("thm-4.6", 3, config), std::invalid_argument);
  auto reports = check_all(5, 1, config, {"thm-4.6"});
  EXPECT_EQ(reports.size(), 2u);
}

TEST(Verify, CheckAllSmallWeightsPassAndIsDeterministic) {
  for (int max_n : {1, 4}) {
    auto serial = check_all(max_n, 1);
    auto parallel = check_all(max_n, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_TRUE(serial[i].passed()) << serial[i].to_json().dump();
      EXPECT_EQ(serial[i].deterministic_line(), parallel[i].deterministic_line());
      if (i) {
        EXPECT_LE(std::tie(serial[i - 1].claim_id, serial[i - 1].n), std::tie(serial[i].claim_id, serial[i].n));
      }
    }
  }
  bool saw_golden = false;
  for (const auto& r : check_all(4, 1)) saw_golden |= r.claim_id == "golden-matrices" && r.n == 4;
  EXPECT_TRUE(saw_golden);
}

TEST(Verify, CompareMatricesNamesCorruptedEntry) {
  auto expected = cartan_like(4);
  auto corrupted = expected;
  corrupted.entries[1][2] += 1;
  auto diff = compare_matrices(expected, corrupted);
  ASSERT_TRUE(diff);
  ASSERT_EQ(diff->size(), 1u);
  const auto& d = (*diff)[0];
  EXPECT_EQ(d.at("kind"), "entry");
  EXPECT_EQ(d.at("row"), to_json(expected.row_labels[1]));
  EXPECT_EQ(d.at("col"), to_json(expected.col_labels[2]));
  EXPECT_EQ(d.at("expected"), expected.entries[1][2].get_str());
  EXPECT_FALSE(compare_matrices(expected, expected));
}

TEST(Verify, FailReportsCarryCounterexamples) {
  auto o = Outcome::fail(Json());
  EXPECT_FALSE(o.pass);
  EXPECT_FALSE(o.details.at("counterexample").empty());
  auto shape = compare_matrices(cartan_like(3), cartan_like(4));
  ASSERT_TRUE(shape);
  EXPECT_EQ(shape->at("kind"), "shape");
}
