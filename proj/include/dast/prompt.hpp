#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dast {

// One few-shot exemplar: a solved question rendered into the prompt.
struct Exemplar {
    std::string id;
    std::string question;
    std::string rationale;  // joined reasoning steps
    std::string answer;
    std::size_t length_tokens = 0;
};

inline constexpr std::string_view kPromptHeader =
    "You are an excellent mathematician. Answer the following mathematical "
    "questions based on your knowledge.";

inline constexpr std::string_view kQuestionMarker = "### Question ###:";
inline constexpr std::string_view kResponseMarker = "### Response ###:";
inline constexpr std::string_view kAnswerPhrase = "The answer is";

// "<think>{rationale}</think>.\nThe answer is \box{{answer}}."
std::string render_response(const std::string& rationale, const std::string& answer);

std::string render_exemplar(const Exemplar& e);

// Full prompt: header, rendered exemplars, then the target question with an
// open response slot. Zero exemplars gives the zero-shot form.
std::string render_prompt(const std::vector<Exemplar>& shots, const std::string& question);

// Inverse of render_response, tolerant of raw completions: strips the
// <think> wrapper and the trailing answer sentence, returning the bare
// rationale text.
std::string strip_response_wrapper(const std::string& completion);

// Whitespace-token counts of each non-empty response block in a rendered
// prompt (the trailing open slot is skipped). Used by the mock policy to
// shape its output lengths after the few-shot examples it was given.
std::vector<std::size_t> exemplar_token_counts(const std::string& prompt);

}  // namespace dast
