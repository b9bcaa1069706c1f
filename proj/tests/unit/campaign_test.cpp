#include <gtest/gtest.h>

#include "ssarr/campaign.hpp"
#include "ssarr/errors.hpp"

using namespace ssarr;

namespace {

CampaignOptions small() {
  CampaignOptions o;
  o.max_n = 3;
  o.max_dprime = 4;
  o.max_e = 1;
  o.seeds = 2;
  o.transforms = 1;
  return o;
}

}  // namespace

TEST(Campaign, Names) {
  EXPECT_EQ(campaign_names().size(), 11u);
  EXPECT_THROW(run_campaign("no-such-campaign", small()), InputError);
}

TEST(Campaign, SmallGridsPass) {
  for (const auto& name : campaign_names()) {
    const CampaignResult r = run_campaign(name, small());
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.passed + r.failed + r.not_applicable, static_cast<int>(r.cases.size())) << name;
    EXPECT_GT(r.passed, 0) << name;
    EXPECT_TRUE(std::is_sorted(r.cases.begin(), r.cases.end(),
                               [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; }))
        << name;
  }
}

TEST(Campaign, DeterministicBytes) {
  for (const std::string name : {"thm1b-roundtrip", "conj1-cones", "zmain-exponents"}) {
    const std::string a = to_json(run_campaign(name, small())).dump();
    const std::string b = to_json(run_campaign(name, small())).dump();
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(a.find("wall_time_seconds"), std::string::npos);
  }
  EXPECT_NE(to_json(run_campaign("thm1-bound", small()), true).dump().find("wall_time_seconds"), std::string::npos);
}

TEST(Campaign, SeedChangesTransformsNotVerdicts) {
  CampaignOptions o = small();
  o.seed = 99;
  const CampaignResult r = run_campaign("thm1b-roundtrip", o);
  EXPECT_TRUE(r.ok());
}
