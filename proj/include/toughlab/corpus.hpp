#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toughlab/families.hpp"
#include "toughlab/rational.hpp"
#include "toughlab/toughness.hpp"

namespace toughlab {

struct ManifestEntry {
  FamilySpec spec;
  int line = 0;
};

/// One FamilySpec per line; blank lines and '#' comments are ignored.
/// Throws ParseError naming the offending line.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

/// The reference corpus, in manifest form.
std::string default_corpus_manifest();

struct CorpusOptions {
  ToughnessOptions search;
  int exhaustive_mixing_max_n = 10;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  int component_bound_max_n = 12;
};

enum class RowStatus { Ok, Violation, Skipped };

struct CorpusRow {
  std::string name;
  RowStatus status = RowStatus::Ok;
  std::string note;
  int n = 0;
  int m = 0;
  int d = 0;
  double lambda = 0.0;
  double theorem = 0.0;
  bool toughness_checked = false;
  std::optional<Rational> exact_t;
  std::optional<double> slack;
  bool mixing_exhaustive = false;
  double mixing_slack = 0.0;
  std::optional<double> component_bound;
  std::optional<int> max_components;
};

/// Runs the theorem, mixing and component-bound checks on every entry, in
/// manifest order. Generators that exhaust their retries and graphs above the
/// toughness cap are reported as Skipped; graphs that are not connected and
/// regular throw InvalidParams.
std::vector<CorpusRow> verify_corpus(const std::vector<ManifestEntry>& entries, const CorpusOptions& opts = {});

std::string format_corpus_table(const std::vector<CorpusRow>& rows);

}  // namespace toughlab
