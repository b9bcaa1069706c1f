#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssarr/serialize.hpp"

namespace ssarr {

struct CampaignOptions {
  std::uint64_t seed = 1;
  int max_n = 6;
  int max_dprime = 5;
  int max_e = 2;
  int seeds = 5;       // cone and generic-base seeds 1..seeds
  int transforms = 3;  // random projective transforms per class
};

enum class Verdict { pass, fail, not_applicable };

struct CaseResult {
  std::string key;
  Verdict verdict = Verdict::pass;
  Json witness;
};

struct CampaignResult {
  std::string name;
  Json grid;
  std::vector<CaseResult> cases;  // sorted by key
  int passed = 0;
  int failed = 0;
  int not_applicable = 0;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& campaign_names();

/// Throws InputError for an unknown campaign.
CampaignResult run_campaign(const std::string& name, const CampaignOptions& options);

/// Wall time is left out unless asked for, so equal seeds give equal bytes.
Json to_json(const CampaignResult& result, bool include_time = false);

std::string verdict_name(Verdict v);

}  // namespace ssarr
