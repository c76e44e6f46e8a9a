#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "toughlab/bounds.hpp"
#include "toughlab/mixing.hpp"
#include "toughlab/partition.hpp"
#include "toughlab/spectra.hpp"
#include "toughlab/toughness.hpp"

namespace toughlab {

inline constexpr std::string_view kReportSchema = "toughlab-report/1";

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const SpectralProfile& p);
nlohmann::json to_json(const std::optional<ToughnessResult>& t);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const MixingCheck& c);
nlohmann::json to_json(const ComponentBoundCheck& c);
nlohmann::json to_json(const PartitionWitness& w);

enum class MixingMode { Exhaustive, Sampled };

struct AnalyzeOptions {
  bool toughness = false;
  bool bounds = false;
  std::optional<MixingMode> mixing;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  bool component_bound = false;
  /// Requires `toughness`.
  bool partition = false;
  ToughnessOptions search;
  int exhaustive_mixing_max_n = 10;
  int component_bound_max_n = 12;
};

struct Analysis {
  nlohmann::json report;
  /// Theorem slack, mixing slack or component bound below -kLambdaEpsilon.
  bool violation = false;
};

/// Builds the report with every requested section and null for the rest.
/// Input problems (disconnected, irregular, over the size caps) throw Error.
Analysis analyze(const Graph& g, const AnalyzeOptions& opts);

}  // namespace toughlab
