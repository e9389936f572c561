#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dast/core.hpp"
#include "dast/rational.hpp"

namespace dast {

// Canonical form of an extracted or gold answer. Numeric kinds carry an
// exact rational; Decimal additionally marks that the source text was a
// decimal expansion, which turns on the absolute-tolerance comparison path.
enum class AnswerKind { Integer, Fraction, Decimal, Symbolic };

struct CanonicalAnswer {
    AnswerKind kind = AnswerKind::Symbolic;
    Rational value;    // meaningful for numeric kinds only
    std::string text;  // normalized form (symbolic) or canonical numeral
    std::string raw;   // original input

    bool is_numeric() const { return kind != AnswerKind::Symbolic; }
};

std::string to_string(AnswerKind k);

// Innermost content of the last `\box{...}` (balanced braces) after the final
// "The answer is"; falls back to the last `\box{...}` anywhere. `\boxed{...}`
// is accepted as a synonym. Empty-brace markers count as no answer.
std::optional<std::string> extract_answer(std::string_view completion);

// Normalization ruleset (versioned, see README): trims, strips trailing
// periods, outer $...$ and \text{...}, leading currency $, thousands commas;
// parses integers, decimals, a/b and \frac{a}{b}, percentages; single letters
// A-E become uppercase choice symbols; everything else lowercased and
// whitespace-collapsed. Throws std::invalid_argument on empty input.
CanonicalAnswer normalize_answer(const std::string& raw);

// Numeric vs numeric: exact rational equality, or |a-b| <= 1e-6 when either
// side originated as a decimal. Symbolic vs symbolic: normalized string
// equality. Mixed: the symbolic side gets one numeric re-parse attempt.
bool answers_equivalent(const CanonicalAnswer& a, const CanonicalAnswer& b);

// extract -> normalize -> compare against the gold answer.
// Throws if the gold answer itself does not normalize.
ResponseLabel grade_response(const std::string& completion, const GoldSolution& gold);

// Same grading plus the extracted answer, kept consistent with the label:
// the answer is absent exactly when the label is unextractable.
std::pair<ResponseLabel, std::optional<std::string>> grade_extracted(
    const std::string& completion, const GoldSolution& gold);

}  // namespace dast
