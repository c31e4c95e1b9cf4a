#include "lcann_cli/json_out.hpp"

#include <algorithm>

namespace lcann::cli {

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json to_json(const MultiIndex& a) { return Json(a); }

Json to_json(const FinAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(to_json(d));
  return {{"text", g.to_string()}, {"free_rank", g.free_rank}, {"torsion", torsion}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const CohomologyTable& t) {
  Json out = Json::object();
  for (int d = t.first_degree; d <= t.last_degree(); ++d) {
    if (t.characteristic == 0)
      out[std::to_string(d)] = to_json(t.group(d));
    else
      out[std::to_string(d)] = t.dimension(d);
  }
  return out;
}

Json to_json(const ClaimResult& c) {
  Json j = {{"id", c.id}, {"status", c.status_string()}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (const auto* info = find_claim(c.id)) j["statement"] = info->statement;
  return j;
}

bool Report::any_failed() const {
  return std::any_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::Failed; });
}

Json Report::to_json() const {
  Json j = {{"command", command}, {"inputs", inputs}, {"results", results}};
  Json cl = Json::array();
  for (const auto& c : claims) cl.push_back(cli::to_json(c));
  j["claims"] = cl;
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

}  // namespace lcann::cli
