#pragma once

#include <string>
#include <vector>

namespace lcann {

struct ClaimInfo {
  std::string id;
  std::string statement;
};

/// Every mathematical statement a report can refer to.
const std::vector<ClaimInfo>& claims_registry();
const ClaimInfo* find_claim(const std::string& id);

enum class ClaimStatus { Verified, EvidenceAtLevel, Failed };

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Failed;
  int level = 0;  // for EvidenceAtLevel
  std::string detail;

  /// "verified", "evidence-at-level-<L>" or "failed".
  std::string status_string() const;
};

ClaimResult claim(const std::string& id, bool ok, std::string detail = {});
ClaimResult claim_at_level(const std::string& id, bool ok, int level, std::string detail = {});

}  // namespace lcann
