#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dast/backend.hpp"
#include "dast/core.hpp"
#include "dast/prompt.hpp"

namespace dast {

enum class Strategy {
    RejectionVanilla,  // ReST-EM style: fixed 10 samples, generic shots
    DartUniform,       // resample until 4 correct, capped
    DartProb2Diff,     // budget scaled by difficulty rank weight
    DastP,             // budget scaled by beta, generic shots
    DastL,             // base budget, difficulty-matched shots
    DastS,             // beta budget + difficulty-matched shots
};

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

enum class StopRule { FixedCount, UntilNCorrect };
enum class PoolChoice { Generic, LevelMatched };

// Difficulty-matched few-shot pools: P_d holds corpus items of level d whose
// gold rationale length is at least the level-d mean. `generic` is the whole
// corpus, used by strategies without length control.
struct PromptSets {
    std::map<DifficultyLevel, std::vector<Exemplar>> pools;
    std::map<DifficultyLevel, double> thresholds;  // level mean lengths
    std::map<DifficultyLevel, bool> fallback_used;
    std::vector<Exemplar> generic;
    int shots = 8;
};

struct AugmentationPlan {
    std::string query_id;
    Strategy strategy = Strategy::DastS;
    int sample_budget = 1;
    StopRule stop_rule = StopRule::FixedCount;
    int stop_target = 0;  // positives wanted under UntilNCorrect
    int stop_cap = 0;     // hard sample cap under UntilNCorrect
    PoolChoice exemplar_pool = PoolChoice::Generic;
    DifficultyLevel level = DifficultyLevel::Middle;
    double temperature = 0.5;
};

// Graded response pools for one query: an exact partition of everything
// sampled into positives (correct) and negatives (incorrect/unextractable).
struct LabeledPool {
    std::string query_id;
    std::vector<SampledResponse> positives;
    std::vector<SampledResponse> negatives;
    bool partial = false;      // backend gave out before the plan finished
    bool cap_reached = false;  // UntilNCorrect stopped at the cap short of target

    std::size_t total() const { return positives.size() + negatives.size(); }
};

struct AugmentOptions {
    int base_k = 4;
    int shots = 8;
    double temperature = 0.5;
    double top_p = 0.9;
    int max_tokens = 1024;
    std::uint64_t seed = 0;
    int vanilla_budget = 10;   // fixed sampling count of the vanilla baseline
    int uniform_target = 4;    // correct responses wanted per query
    int uniform_cap = 20;      // hard cap so unsolved queries terminate
    std::array<int, 4> prob2diff_weights{1, 2, 3, 4};  // E, M, H, U
};

// Mean-length filter per level; a level with no corpus items falls back to
// the longest half of the whole corpus (flagged in fallback_used).
PromptSets build_prompt_pools(const std::vector<CorpusItem>& corpus,
                              const std::vector<DifficultyEstimate>& estimates,
                              int shots);

AugmentationPlan plan(const DifficultyEstimate& estimate, Strategy strategy,
                      int base_k, const AugmentOptions& options);

// Rescales fixed-count budgets by per-level alpha weights, renormalized so
// the total budget stays put. Budgets never drop below 1.
void apply_proportion_profile(std::vector<AugmentationPlan>& plans,
                              const std::map<DifficultyLevel, double>& alpha);

// Samples per the plan (shots drawn round-robin from the designated pool),
// grades each completion, and partitions the results.
LabeledPool execute(const AugmentationPlan& plan, const Query& query,
                    const GoldSolution& gold, const PromptSets& prompts,
                    GenerationBackend& backend, const AugmentOptions& options);

}  // namespace dast
