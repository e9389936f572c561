#pragma once

#include <stdexcept>
#include <vector>

#include "dast/backend.hpp"
#include "dast/core.hpp"
#include "dast/prompt.hpp"

namespace dast {

// (#correct)/(#total) as an exact fraction; unextractable counts as wrong.
// Throws std::invalid_argument on an empty list.
Rational solve_rate(const std::vector<ResponseLabel>& labels);

// [0.8, 1.0] Easy | [0.4, 0.8) Middle | (0, 0.4) Hard | 0 Unsolved.
// Boundaries are exact rational comparisons. Throws outside [0, 1].
DifficultyLevel bucket(const Rational& rate);

struct EstimateOptions {
    double temperature = 0.2;
    double top_p = 0.9;
    int max_tokens = 1024;
    std::uint64_t seed = 0;
    int parallelism = 8;
    // Below this completion fraction the estimate is rejected outright.
    double min_completion_fraction = 0.8;
};

// Raised when too few of the K samples completed; carries what did finish so
// the caller can still decide to accept a reduced-K estimate.
struct PartialEstimateError : std::runtime_error {
    std::vector<ResponseLabel> completed_labels;
    int attempted = 0;
    PartialEstimateError(const std::string& what, std::vector<ResponseLabel> labels, int attempted_)
        : std::runtime_error(what), completed_labels(std::move(labels)), attempted(attempted_) {}
};

// Issues exactly K = |prompts| generations, one per exemplar, grades each,
// and buckets the resulting solve rate. Labels come back in exemplar order.
// Per-sample backend failures are tolerated while at least
// min_completion_fraction of K completed; the rate is then over the
// completed samples.
DifficultyEstimate estimate(const Query& query, const GoldSolution& gold,
                            const std::vector<Exemplar>& prompts,
                            GenerationBackend& backend, const EstimateOptions& options);

// Convenience loop over a corpus. Estimates are independent per query.
std::vector<DifficultyEstimate> estimate_corpus(const std::vector<CorpusItem>& corpus,
                                                const std::vector<Exemplar>& prompts,
                                                GenerationBackend& backend,
                                                const EstimateOptions& options);

// Deterministic pick of K estimation exemplars from the corpus (evenly
// strided over corpus order).
std::vector<Exemplar> pick_estimation_exemplars(const std::vector<CorpusItem>& corpus, int k);

}  // namespace dast
