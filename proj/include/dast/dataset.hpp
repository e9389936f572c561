#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dast/augment.hpp"
#include "dast/core.hpp"

namespace dast {

inline constexpr std::string_view kSchemaVersion = "dast/v1";

enum class Provenance { OriginalGold, SelfGenerated };

std::string to_string(Provenance p);
Provenance parse_provenance(std::string_view s);

struct SftRecord {
    std::string query_id;
    std::string question;
    std::string rationale;  // bare reasoning text (no template wrapper)
    std::string answer;
    Provenance provenance = Provenance::SelfGenerated;
    int iteration = 0;
    DifficultyLevel level = DifficultyLevel::Middle;
    std::string rendered_target;  // render_response(rationale, answer)
};

struct DpoPair {
    std::string query_id;
    std::string question;
    std::string chosen_rationale;
    std::string chosen_answer;
    std::string rejected_rationale;
    std::string rejected_answer;  // empty when the rejected side was unextractable
    int iteration = 0;
    DifficultyLevel level = DifficultyLevel::Middle;
};

enum class PairingRule { FirstFirst, MaxPairs, LengthMatched };

std::string to_string(PairingRule r);
PairingRule parse_pairing(std::string_view s);

struct BuildContext {
    int iteration = 1;
    std::map<std::string, DifficultyLevel> levels;  // query_id -> frozen level
};

// D_u = D_o union positives(D_a): one record per original gold item plus one
// per positive response. Dedup drops byte-identical (question, rationale)
// repeats, first occurrence wins.
std::vector<SftRecord> build_sft(const std::vector<LabeledPool>& pools,
                                 const std::vector<CorpusItem>& originals,
                                 bool dedup, const BuildContext& ctx);

std::vector<DpoPair> build_dpo(const std::vector<LabeledPool>& pools,
                               PairingRule pairing,
                               const std::vector<CorpusItem>& originals,
                               const BuildContext& ctx);

// ---------------------------------------------------------------------------
// Corpus ingestion
// ---------------------------------------------------------------------------

enum class CorpusFormat { Gsm8kStyle, MathStyle, GenericJsonl };

CorpusFormat parse_format(std::string_view s);

struct IngestReport {
    struct Entry {
        int line = 0;
        std::string error;
    };
    std::vector<Entry> errors;
    int parsed = 0;
};

// gsm8k-style: {"question", "answer"} with "#### <final>" delimiter.
// math-style: {"problem", "solution"} with the answer in the last \boxed{}.
// generic-jsonl: explicit {"id", "question", "rationale", "answer"} fields.
// Unmappable records are skipped and reported, never fatal.
std::pair<std::vector<CorpusItem>, IngestReport> ingest(const std::filesystem::path& path,
                                                        CorpusFormat format);

// ---------------------------------------------------------------------------
// JSONL files (schema-versioned, stable field and record order)
// ---------------------------------------------------------------------------

// Malformed or wrong-schema line; `line` is 1-based.
struct JsonlError : std::runtime_error {
    int line;
    JsonlError(const std::string& what, int line_) : std::runtime_error(what), line(line_) {}
};

void write_corpus(const std::filesystem::path& path, const std::vector<CorpusItem>& items);
std::vector<CorpusItem> read_corpus(const std::filesystem::path& path);

void write_estimates(const std::filesystem::path& path, const std::vector<DifficultyEstimate>& estimates);
std::vector<DifficultyEstimate> read_estimates(const std::filesystem::path& path);

void write_pools(const std::filesystem::path& path, const std::vector<LabeledPool>& pools);
std::vector<LabeledPool> read_pools(const std::filesystem::path& path);

void write_sft(const std::filesystem::path& path, const std::vector<SftRecord>& records);
std::vector<SftRecord> read_sft(const std::filesystem::path& path);

void write_dpo(const std::filesystem::path& path, const std::vector<DpoPair>& pairs);
std::vector<DpoPair> read_dpo(const std::filesystem::path& path);

// Write-then-rename so readers never observe a torn file.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace dast
