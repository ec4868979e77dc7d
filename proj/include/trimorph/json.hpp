#pragma once

#include <json.hpp>

#include "trimorph/classifier.hpp"
#include "trimorph/freeness.hpp"
#include "trimorph/numtheory.hpp"
#include "trimorph/sweep.hpp"

namespace trimorph {

// Record shapes emitted by the CLI with --json; see docs/json-records.md.
// Every record carries "schema_version" and "kind".

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json report_json(const Morphism& g1, const Morphism& g2, const CommutationReport& report);
Json check_json(const Morphism& g1, const Morphism& g2, bool commute);
Json multdep_json(std::uint64_t p, std::uint64_t q, const MultDependence& dep);
Json relation_json(const Morphism& g1, const Morphism& g2, unsigned depth,
                   const std::optional<Relation>& relation);
Json mismatch_json(const SweepMismatch& mismatch);
Json sweep_summary_json(const SweepConfig& config, const SweepSummary& summary);

}  // namespace trimorph
