#include "dast/core.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "dast/answer.hpp"

namespace dast {

int beta_for(DifficultyLevel level) {
    switch (level) {
        case DifficultyLevel::Easy: return 1;
        case DifficultyLevel::Middle: return 3;
        case DifficultyLevel::Hard: return 5;
        case DifficultyLevel::Unsolved: return 5;
    }
    throw std::invalid_argument("beta_for: bad level");
}

std::string to_string(QuerySource s) {
    switch (s) {
        case QuerySource::Gsm8kFormat: return "gsm8k-format";
        case QuerySource::MathFormat: return "math-format";
        case QuerySource::Synthetic: return "synthetic";
    }
    throw std::invalid_argument("to_string: bad source");
}

std::string to_string(ResponseLabel l) {
    switch (l) {
        case ResponseLabel::Correct: return "correct";
        case ResponseLabel::Incorrect: return "incorrect";
        case ResponseLabel::Unextractable: return "unextractable";
    }
    throw std::invalid_argument("to_string: bad label");
}

std::string to_string(DifficultyLevel d) {
    switch (d) {
        case DifficultyLevel::Easy: return "easy";
        case DifficultyLevel::Middle: return "middle";
        case DifficultyLevel::Hard: return "hard";
        case DifficultyLevel::Unsolved: return "unsolved";
    }
    throw std::invalid_argument("to_string: bad level");
}

QuerySource parse_source(std::string_view s) {
    if (s == "gsm8k-format") return QuerySource::Gsm8kFormat;
    if (s == "math-format") return QuerySource::MathFormat;
    if (s == "synthetic") return QuerySource::Synthetic;
    throw std::invalid_argument("parse_source: '" + std::string(s) + "'");
}

ResponseLabel parse_label(std::string_view s) {
    if (s == "correct") return ResponseLabel::Correct;
    if (s == "incorrect") return ResponseLabel::Incorrect;
    if (s == "unextractable") return ResponseLabel::Unextractable;
    throw std::invalid_argument("parse_label: '" + std::string(s) + "'");
}

DifficultyLevel parse_level(std::string_view s) {
    if (s == "easy") return DifficultyLevel::Easy;
    if (s == "middle") return DifficultyLevel::Middle;
    if (s == "hard") return DifficultyLevel::Hard;
    if (s == "unsolved") return DifficultyLevel::Unsolved;
    throw std::invalid_argument("parse_level: '" + std::string(s) + "'");
}

std::size_t count_whitespace_tokens(std::string_view text) {
    std::size_t count = 0;
    bool in_token = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

std::string joined_rationale(const GoldSolution& gold) {
    std::string out;
    for (std::size_t i = 0; i < gold.rationale.size(); ++i) {
        if (i > 0) out += '\n';
        out += gold.rationale[i];
    }
    return out;
}

GoldSolution make_gold(std::string query_id, std::vector<std::string> rationale,
                       std::string answer) {
    GoldSolution gold;
    gold.query_id = std::move(query_id);
    gold.rationale = std::move(rationale);
    gold.answer = std::move(answer);
    gold.length_tokens = count_whitespace_tokens(joined_rationale(gold));
    return gold;
}

void PipelineConfig::validate() const {
    auto check_temp = [](double t, const char* name) {
        if (!(t > 0.0 && t <= 2.0))
            throw std::invalid_argument(std::string(name) + " must be in (0, 2]");
    };
    check_temp(estimation_temperature, "estimation_temperature");
    check_temp(generation_temperature, "generation_temperature");
    if (!(estimation_top_p > 0.0 && estimation_top_p <= 1.0))
        throw std::invalid_argument("estimation_top_p must be in (0, 1]");
    if (n_estimation_samples < 1)
        throw std::invalid_argument("n_estimation_samples must be >= 1");
    if (base_sample_count < 1)
        throw std::invalid_argument("base_sample_count must be >= 1");
    if (max_iterations < 1)
        throw std::invalid_argument("max_iterations must be >= 1");
}

std::vector<Violation> validate_corpus(const std::vector<CorpusItem>& records) {
    std::vector<Violation> out;
    std::set<std::string> seen;
    for (const auto& item : records) {
        const std::string& id = item.query.id;
        if (id.empty()) {
            out.push_back({id, "empty-id", "query id is empty"});
        } else if (!seen.insert(id).second) {
            out.push_back({id, "duplicate-id", "query id appears more than once"});
        }
        if (item.query.text.empty())
            out.push_back({id, "empty-text", "question text is empty"});
        if (item.gold.rationale.empty())
            out.push_back({id, "empty-rationale", "gold rationale has no steps"});
        if (item.gold.query_id != id)
            out.push_back({id, "id-mismatch", "gold.query_id does not match query.id"});
        const std::size_t expect = count_whitespace_tokens(joined_rationale(item.gold));
        if (item.gold.length_tokens != expect)
            out.push_back({id, "length-mismatch",
                           "length_tokens " + std::to_string(item.gold.length_tokens) +
                               " != recount " + std::to_string(expect)});
        try {
            normalize_answer(item.gold.answer);
        } catch (const std::exception& e) {
            out.push_back({id, "unparseable-gold", e.what()});
        }
    }
    return out;
}

}  // namespace dast
