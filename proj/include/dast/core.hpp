#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dast/rational.hpp"

namespace dast {

// ---------------------------------------------------------------------------
// Domain enums
// ---------------------------------------------------------------------------

enum class QuerySource { Gsm8kFormat, MathFormat, Synthetic };

enum class ResponseLabel { Correct, Incorrect, Unextractable };

// Solve-rate buckets with their oversampling coefficient beta.
enum class DifficultyLevel { Easy, Middle, Hard, Unsolved };

inline constexpr DifficultyLevel kAllLevels[] = {
    DifficultyLevel::Easy, DifficultyLevel::Middle,
    DifficultyLevel::Hard, DifficultyLevel::Unsolved};

// Default beta table: Easy 1, Middle 3, Hard 5, Unsolved 5.
int beta_for(DifficultyLevel level);

std::string to_string(QuerySource s);
std::string to_string(ResponseLabel l);
std::string to_string(DifficultyLevel d);
QuerySource parse_source(std::string_view s);
ResponseLabel parse_label(std::string_view s);
DifficultyLevel parse_level(std::string_view s);

// Binary view of the ternary label: unextractable maps to incorrect (z=0).
inline bool label_is_correct(ResponseLabel l) { return l == ResponseLabel::Correct; }

// Number of maximal runs of non-whitespace characters. This is the length
// unit used everywhere (no model tokenizer involved).
std::size_t count_whitespace_tokens(std::string_view text);

// ---------------------------------------------------------------------------
// Value types
// ---------------------------------------------------------------------------

struct Query {
    std::string id;
    std::string text;
    QuerySource source = QuerySource::Synthetic;
};

struct GoldSolution {
    std::string query_id;
    std::vector<std::string> rationale;  // ordered reasoning steps, >= 1
    std::string answer;                  // canonical answer string
    std::size_t length_tokens = 0;       // whitespace tokens of joined rationale
};

// Builds a GoldSolution with length_tokens derived from the steps.
GoldSolution make_gold(std::string query_id, std::vector<std::string> rationale,
                       std::string answer);

// Joined rationale, steps separated by single newlines.
std::string joined_rationale(const GoldSolution& gold);

struct SamplingParams {
    double temperature = 0.5;
    double top_p = 0.9;
    std::uint64_t seed = 0;
};

struct SampledResponse {
    std::string query_id;
    std::string rationale_text;                   // raw completion
    std::optional<std::string> extracted_answer;  // absent iff unextractable
    ResponseLabel label = ResponseLabel::Unextractable;
    std::size_t length_tokens = 0;                // whitespace tokens of completion
    std::string exemplar_id;                      // comma-joined few-shot exemplar ids
    SamplingParams params;
};

struct DifficultyEstimate {
    std::string query_id;
    Rational solve_rate;  // exact (#correct)/n_samples
    int n_samples = 0;
    DifficultyLevel level = DifficultyLevel::Unsolved;
    std::vector<ResponseLabel> labels;  // per-sample, in exemplar order
};

struct CorpusItem {
    Query query;
    GoldSolution gold;
};

// ---------------------------------------------------------------------------
// Pipeline configuration (shared knobs; the loop config in orchestrator.hpp
// wraps this with file paths and hooks)
// ---------------------------------------------------------------------------

enum class TrainFrom { Previous, Initial };

struct PipelineConfig {
    int n_estimation_samples = 10;        // K
    double estimation_temperature = 0.2;  // T for difficulty estimation
    double estimation_top_p = 0.9;
    double generation_temperature = 0.5;  // T for augmentation sampling
    int base_sample_count = 4;            // base K for augmentation budgets
    std::string strategy = "dast-s";
    std::map<DifficultyLevel, double> proportion_profile;  // optional alpha weights
    int max_iterations = 3;  // curly T
    std::string trainer_command;
    TrainFrom train_from = TrainFrom::Previous;

    // Throws std::invalid_argument when a range invariant is violated.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Corpus validation (report style, never throws)
// ---------------------------------------------------------------------------

struct Violation {
    std::string query_id;
    std::string kind;  // duplicate-id | empty-id | empty-text | empty-rationale |
                       // unparseable-gold | length-mismatch
    std::string detail;
};

std::vector<Violation> validate_corpus(const std::vector<CorpusItem>& records);

}  // namespace dast
