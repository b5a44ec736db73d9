#pragma once

// Whole-category reports and corpus sweeps.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eigproj/io.hpp"

namespace eigproj {

struct FieldAnalysis {
  std::uint32_t p = 2;
  bool projective = false;  // also the Gorenstein flag
  std::optional<ProjectivityWitness> witness;
  std::vector<GptVerdict> gpt;  // empty when not projective
};

struct AnalysisReport {
  std::string digest;
  std::vector<Violation> violations;
  bool valid = false;
  std::optional<bool> ei, skeletal, free, all_mono;
  std::optional<FreenessCounterexample> freeness_counterexample;
  std::optional<std::string> non_mono;
  std::optional<GptVerdict> poset;  // when the input was a poset
  std::vector<FieldAnalysis> fields;
  std::optional<double> seconds;
};

struct AnalyzeOptions {
  bool audit = false;
  bool timing = false;
};

AnalysisReport analyze(const CategoryPtr& cat, const std::vector<std::uint32_t>& fields,
                       const AnalyzeOptions& options = {},
                       const std::optional<FinitePoset>& poset = std::nullopt);

Json to_json(const AnalysisReport& report, const FiniteCategory& cat);

struct SweepOptions {
  std::vector<std::uint32_t> fields{2, 3};
  std::size_t jobs = 1;
  bool audit = false;
  RandomBounds bounds;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t findings = 0;  // verdicts that change with the field
};

/// One JSON line per labeled poset on n elements.
SweepSummary sweep_posets(std::size_t n, const SweepOptions& options, std::ostream& out);
/// One JSON line per seed 0 .. count-1 of random_spec.
SweepSummary sweep_seeds(std::size_t count, const SweepOptions& options, std::ostream& out);

/// Runs task(i) for i < count on `jobs` threads and hands the results to
/// sink in index order.
void run_ordered(std::size_t count, std::size_t jobs, const std::function<std::string(std::size_t)>& task,
                 const std::function<void(std::size_t, std::string&&)>& sink);

}  // namespace eigproj
