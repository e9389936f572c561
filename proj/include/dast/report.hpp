#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dast/core.hpp"
#include "dast/dataset.hpp"

namespace dast {

struct LengthSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double p25 = 0.0;
    double p50 = 0.0;
    double p75 = 0.0;
};

// Per-iteration data proportion and response-length snapshot.
struct IterationStats {
    int iteration = 0;
    std::string strategy;
    std::map<DifficultyLevel, std::size_t> counts;      // records in D_u per level
    std::map<DifficultyLevel, double> proportions;      // counts normalized, sum 1
    std::map<DifficultyLevel, LengthSummary> lengths;   // self-generated positives
                                                        // (gold responses at t=0)
};

// Linear-interpolation percentile over a sorted copy of the values.
double percentile(std::vector<double> values, double q);

// Iteration 0 is computed over the original corpus golds; iterations >= 1
// over the given merged D_u files, in order.
std::vector<IterationStats> compute_stats(const std::vector<CorpusItem>& corpus,
                                          const std::vector<DifficultyEstimate>& estimates,
                                          const std::vector<std::filesystem::path>& merged_files,
                                          const std::string& strategy);

// One row per (iteration, level):
// iteration,level,count,proportion,mean_len,p25,p50,p75,strategy
// Doubles use round-trippable %.17g formatting so recomputation from the raw
// files reproduces the CSV exactly.
std::string stats_to_csv(const std::vector<IterationStats>& stats);

// Minimal standalone SVG: proportion bars per iteration plus mean-length bars.
std::string stats_to_svg(const std::vector<IterationStats>& stats);

}  // namespace dast
