#pragma once

#include <json.hpp>

#include "lcann/claims.hpp"
#include "lcann/ext.hpp"
#include "lcann/simplicial.hpp"

namespace lcann::cli {

using Json = nlohmann::json;

Json to_json(const Integer& n);
Json to_json(const MultiIndex& a);
Json to_json(const FinAbGroup& g);
Json to_json(const IntMatrix& m);
Json to_json(const CohomologyTable& t);
Json to_json(const ClaimResult& c);

/// Skeleton report: command, inputs, results, claims.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<ClaimResult> claims;
  std::optional<double> seconds;

  bool any_failed() const;
  Json to_json() const;
};

}  // namespace lcann::cli
