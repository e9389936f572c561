#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dast/augment.hpp"
#include "dast/backend.hpp"
#include "dast/core.hpp"
#include "dast/dataset.hpp"
#include "dast/difficulty.hpp"

namespace dast {

enum class TrainingMode { Sft, Dpo };

std::string to_string(TrainingMode m);
TrainingMode parse_mode(std::string_view s);

// External trainer invocation. The command template must contain all four
// placeholders {train_file} {base_model} {out_model} {mode}. With mock=true
// the simulated trainer runs in-process instead: it bumps each query's
// success probability by delta per positive training exposure (capped 1.0).
struct TrainerHook {
    std::string command;
    std::chrono::seconds timeout{600};
    bool mock = false;
    std::string mock_rule = "additive";  // additive | none
    double mock_delta = 0.1;

    void validate() const;
};

struct IterationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable snapshot of one completed round.
struct IterationState {
    int t = 0;                                  // 0 = before the first iteration
    std::string policy;                         // backend uri for M_t
    std::filesystem::path corpus_path;          // D_o
    std::filesystem::path augmented_path;       // D_a^(t) labeled pools
    std::filesystem::path merged_path;          // D_u train file
    std::vector<double> accuracy_history;       // one entry per completed eval
    std::map<DifficultyLevel, int> positive_counts;  // snapshot of D_a^(t)
};

struct LoopConfig {
    std::filesystem::path workdir;
    std::filesystem::path corpus_path;
    CorpusFormat corpus_format = CorpusFormat::GenericJsonl;
    std::filesystem::path validation_path;
    CorpusFormat validation_format = CorpusFormat::GenericJsonl;
    std::string policy;  // initial backend uri, e.g. "mock:spec.json"

    Strategy strategy = Strategy::DastS;
    TrainingMode mode = TrainingMode::Sft;
    std::optional<TrainFrom> train_from;  // default depends on mode

    int estimation_k = 10;
    double estimation_temperature = 0.2;
    double estimation_top_p = 0.9;
    int base_k = 4;
    double generation_temperature = 0.5;
    int shots = 8;
    int max_tokens = 1024;
    std::uint64_t seed = 0;
    int parallelism = 8;

    int iterations = 3;      // curly T
    double epsilon = 0.002;  // minimum accuracy improvement
    int patience = 1;
    bool dedup = true;
    PairingRule pairing = PairingRule::MaxPairs;
    std::map<DifficultyLevel, double> proportion_profile;  // optional

    TrainerHook trainer;

    static LoopConfig load(const std::filesystem::path& path);
    void validate() const;
    TrainFrom effective_train_from() const;
};

struct EvalOptions {
    double temperature = 0.2;
    double top_p = 0.9;
    int max_tokens = 1024;
    std::uint64_t seed = 0;
    int parallelism = 8;
};

// Single greedy-ish sample per query; accuracy = mean correctness. Eval seeds
// are keyed per query but not per iteration, so a policy that only improves
// per-query success can never lose accuracy to reshuffled draws.
double evaluate(GenerationBackend& backend, const std::vector<CorpusItem>& validation,
                const EvalOptions& options);

struct IterationRecord {
    int t = 0;
    double accuracy = 0.0;
    std::map<DifficultyLevel, int> positive_counts;
    std::map<DifficultyLevel, int> negative_counts;
    std::size_t merged_records = 0;
    std::string train_file;   // workdir-relative
    std::string model;        // workdir-relative
};

struct RunReport {
    std::string strategy;
    std::string mode;
    bool converged_early = false;
    int completed_iterations = 0;
    std::vector<IterationRecord> iterations;
};

class Orchestrator {
public:
    explicit Orchestrator(LoopConfig config);

    // Full Algorithm-1 loop: freeze difficulty on M_0, then iterate
    // augment -> merge -> train -> evaluate until T or convergence.
    // Resumes from the last complete iteration when the workdir has state.
    RunReport run();

    // One round against the current policy. On trainer failure the on-disk
    // state is left at the previous iteration.
    IterationState run_iteration(const IterationState& state);

    const std::vector<DifficultyEstimate>& estimates() const { return estimates_; }

private:
    void prepare();
    std::filesystem::path workfile(const std::string& rel) const;
    void invoke_trainer(const std::filesystem::path& train_file,
                        const std::string& base_model_uri,
                        const std::filesystem::path& out_model) const;
    void write_state(const IterationState& state) const;
    std::optional<IterationState> load_state() const;

    LoopConfig cfg_;
    std::vector<CorpusItem> corpus_;
    std::vector<CorpusItem> validation_;
    std::vector<DifficultyEstimate> estimates_;
    PromptSets prompt_sets_;
    std::map<std::string, DifficultyLevel> level_by_query_;
    RunReport report_;
};

// Substitutes placeholders and runs the command through /bin/sh with a kill
// timeout. Returns the exit code.
int run_subprocess(const std::string& command, std::chrono::seconds timeout);

// The in-process simulated trainer (also exposed as the `mock-train`
// subcommand so subprocess hooks can be exercised end to end).
void mock_train(const std::filesystem::path& train_file, TrainingMode mode,
                const std::filesystem::path& base_model,
                const std::filesystem::path& out_model,
                const std::string& rule, double delta);

}  // namespace dast
