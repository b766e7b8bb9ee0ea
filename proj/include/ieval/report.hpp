#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ieval/behavior.hpp"
#include "ieval/metrics.hpp"
#include "ieval/overlap.hpp"
#include "ieval/stats.hpp"

namespace ieval {

enum class OutputFormat { Json, Markdown, Csv };

OutputFormat output_format_from_string(const std::string& name);

// Full evaluation bundle as emitted by the score pipeline. RE sections are
// present when the gold corpus carries relations; Strict and Boundaries are
// always reported together.
struct EvaluationBundle {
  ScoreReport ner;
  std::optional<ScoreReport> re_strict;
  std::optional<ScoreReport> re_boundaries;
  std::optional<ScoreReport> re_relaxed;
};

// Table-11-shaped swap report: one row per relation type.
struct SwapReportRow {
  std::string relation;
  SwapEvaluation eval;
};

struct StatsBundle {
  std::optional<DatasetStats> train;
  DatasetStats eval;
  std::optional<ConsistencyProfile> consistency;
  std::optional<OverlapTable> overlap;
};

// All renderers are deterministic: sorted keys, fixed column orders, fixed
// rounding (JSON keeps full precision; tables show one-decimal percent).
std::string render_score(const EvaluationBundle& bundle, OutputFormat format);
std::string render_stats(const StatsBundle& bundle, OutputFormat format);
std::string render_swap(const std::vector<SwapReportRow>& rows,
                        OutputFormat format);
std::string render_partition_summary(const PartitionResult& partition);
std::string render_skip_report(const std::vector<SkipRecord>& skipped);

}  // namespace ieval
