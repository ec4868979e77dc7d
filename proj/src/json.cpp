#include "trimorph/json.hpp"

namespace trimorph {

namespace {

Json record(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json report_body(const CommutationReport& report) {
  Json j;
  j["case"] = std::string(case_name(report.kase));
  j["swapped"] = report.swapped;
  Json conditions = Json::object();
  for (const Condition& c : report.conditions) conditions[c.name] = c.holds;
  j["conditions"] = std::move(conditions);
  Json witness = Json::object();
  for (const auto& [key, value] : report.witness)
    std::visit([&, &key = key](const auto& v) { witness[key] = v; }, value);
  j["witness"] = std::move(witness);
  j["prediction"] = report.prediction;
  return j;
}

}  // namespace

Json report_json(const Morphism& g1, const Morphism& g2, const CommutationReport& report) {
  Json j = record("classification");
  j["g1"] = g1.str();
  j["g2"] = g2.str();
  j.update(report_body(report));
  return j;
}

Json check_json(const Morphism& g1, const Morphism& g2, bool commute) {
  Json j = record("check");
  j["g1"] = g1.str();
  j["g2"] = g2.str();
  j["g1g2"] = compose(g1, g2).str();
  j["g2g1"] = compose(g2, g1).str();
  j["commute"] = commute;
  return j;
}

Json multdep_json(std::uint64_t p, std::uint64_t q, const MultDependence& dep) {
  Json j = record("multdep");
  j["p"] = p;
  j["q"] = q;
  if (const auto* d = std::get_if<Dependent>(&dep)) {
    j["dependent"] = true;
    j["r"] = d->r;
    j["m"] = d->m;
    j["n"] = d->n;
  } else {
    j["dependent"] = false;
  }
  return j;
}

Json relation_json(const Morphism& g1, const Morphism& g2, unsigned depth,
                   const std::optional<Relation>& relation) {
  Json j = record("relation");
  j["g1"] = g1.str();
  j["g2"] = g2.str();
  j["depth"] = depth;
  if (relation) {
    j["found"] = true;
    j["left"] = relation->left;
    j["right"] = relation->right;
  } else {
    j["found"] = false;
  }
  return j;
}

Json mismatch_json(const SweepMismatch& mismatch) {
  Json j = record("sweep_mismatch");
  j["index"] = mismatch.index;
  j["g1"] = mismatch.g1.str();
  j["g2"] = mismatch.g2.str();
  j["direct"] = mismatch.direct;
  j["report"] = report_body(mismatch.report);
  return j;
}

Json sweep_summary_json(const SweepConfig& config, const SweepSummary& summary) {
  Json j = record("sweep_summary");
  j["bounds"] = {{"max_s", config.max_s},
                 {"max_p", config.max_p},
                 {"max_exp", config.max_exp},
                 {"max_bonly_exp", config.max_bonly_exp}};
  j["morphisms"] = summary.morphisms;
  j["pairs"] = summary.pairs;
  j["commuting"] = summary.commuting;
  j["mismatches"] = summary.mismatches.size();
  j["aborted"] = summary.aborted.size();
  Json cases = Json::object();
  Json conditions = Json::object();
  for (std::size_t c = 0; c < kCaseCount; ++c) {
    const std::string name(case_name(kAllCases[c]));
    cases[name] = summary.cases[c];
    Json per = Json::object();
    const auto names = condition_names(kAllCases[c]);
    for (std::size_t k = 0; k < names.size(); ++k) per[std::string(names[k])] = summary.conditions[c][k];
    conditions[name] = std::move(per);
  }
  j["cases"] = std::move(cases);
  j["conditions"] = std::move(conditions);
  return j;
}

}  // namespace trimorph
