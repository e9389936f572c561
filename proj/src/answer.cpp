#include "dast/answer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "dast/prompt.hpp"

namespace dast {

namespace {

std::string trim(std::string_view sv) {
    std::size_t b = 0, e = sv.size();
    while (b < e && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(sv[e - 1]))) --e;
    return std::string(sv.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view sv) {
    std::string out;
    bool pending_space = false;
    for (unsigned char c : sv) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += static_cast<char>(c);
        }
    }
    return out;
}

bool all_digits(std::string_view sv) {
    return !sv.empty() &&
           std::all_of(sv.begin(), sv.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// "-1,234,567.89" style digit grouping only; commas elsewhere stay put.
bool strip_thousands_commas(std::string& s) {
    std::string_view sv = s;
    if (!sv.empty() && (sv[0] == '-' || sv[0] == '+')) sv.remove_prefix(1);
    std::string frac;
    if (auto dot = sv.find('.'); dot != std::string_view::npos) {
        frac = std::string(sv.substr(dot + 1));
        if (!all_digits(frac)) return false;
        sv = sv.substr(0, dot);
    }
    std::size_t first_comma = sv.find(',');
    if (first_comma == std::string_view::npos) return false;
    std::string_view head = sv.substr(0, first_comma);
    if (head.empty() || head.size() > 3 || !all_digits(head)) return false;
    std::string_view rest = sv.substr(first_comma);
    while (!rest.empty()) {
        if (rest.size() < 4 || rest[0] != ',' || !all_digits(rest.substr(1, 3))) return false;
        rest.remove_prefix(4);
        if (!rest.empty() && rest[0] == '.') return false;  // handled above
    }
    s.erase(std::remove(s.begin(), s.end(), ','), s.end());
    return true;
}

// Balanced-brace content starting right after an opening '{' at `open`.
std::optional<std::string> balanced_content(std::string_view sv, std::size_t open) {
    int depth = 1;
    for (std::size_t i = open + 1; i < sv.size(); ++i) {
        if (sv[i] == '{') ++depth;
        else if (sv[i] == '}' && --depth == 0)
            return std::string(sv.substr(open + 1, i - open - 1));
    }
    return std::nullopt;
}

// Last balanced \box{...} / \boxed{...} within [from, end).
std::optional<std::string> last_box_content(std::string_view sv, std::size_t from) {
    std::optional<std::string> found;
    std::size_t pos = from;
    while ((pos = sv.find("\\box", pos)) != std::string_view::npos) {
        std::size_t open = pos + 4;
        if (open + 1 < sv.size() && sv.compare(open, 2, "ed") == 0 &&
            open + 2 <= sv.size() && sv[open + 2] == '{')
            open += 2;
        if (open < sv.size() && sv[open] == '{') {
            if (auto content = balanced_content(sv, open)) found = std::move(content);
        }
        pos += 4;
    }
    return found;
}

bool parse_int64(std::string_view sv, std::int64_t& out) {
    if (sv.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (sv[0] == '+' || sv[0] == '-') {
        neg = sv[0] == '-';
        i = 1;
    }
    if (i == sv.size() || sv.size() - i > 15) return false;
    std::int64_t v = 0;
    for (; i < sv.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(sv[i]))) return false;
        v = v * 10 + (sv[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

CanonicalAnswer make_numeric(AnswerKind kind, Rational value, std::string raw) {
    CanonicalAnswer a;
    a.kind = kind;
    a.value = value;
    a.text = value.to_string();
    a.raw = std::move(raw);
    return a;
}

// Integer / decimal / a/b / \frac{a}{b}; nullopt when not numeric.
std::optional<CanonicalAnswer> try_numeric(const std::string& s, const std::string& raw) {
    std::int64_t n = 0;
    if (parse_int64(s, n))
        return make_numeric(AnswerKind::Integer, Rational::from_int(n), raw);

    // decimal expansion
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head.erase(0, 1);
        }
        if ((all_digits(head) || head.empty()) && all_digits(frac) && frac.size() <= 12 &&
            head.size() + frac.size() <= 15 && !(head.empty() && frac.empty())) {
            std::int64_t mantissa = 0;
            for (char c : head) mantissa = mantissa * 10 + (c - '0');
            std::int64_t den = 1;
            for (char c : frac) {
                mantissa = mantissa * 10 + (c - '0');
                den *= 10;
            }
            if (neg) mantissa = -mantissa;
            return make_numeric(AnswerKind::Decimal, Rational(mantissa, den), raw);
        }
        return std::nullopt;
    }

    // a/b with optional spaces
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::int64_t num = 0, den = 0;
        if (parse_int64(trim(s.substr(0, slash)), num) &&
            parse_int64(trim(s.substr(slash + 1)), den) && den != 0)
            return make_numeric(AnswerKind::Fraction, Rational(num, den), raw);
        return std::nullopt;
    }

    // \frac{a}{b} and \dfrac{a}{b}
    std::string_view sv = s;
    if (sv.substr(0, 6) == "\\dfrac") sv.remove_prefix(6);
    else if (sv.substr(0, 5) == "\\frac") sv.remove_prefix(5);
    else return std::nullopt;
    if (sv.empty() || sv[0] != '{') return std::nullopt;
    auto a = balanced_content(sv, 0);
    if (!a) return std::nullopt;
    std::size_t after = 1 + a->size() + 1;
    if (after >= sv.size() || sv[after] != '{') return std::nullopt;
    auto b = balanced_content(sv, after);
    if (!b || after + 1 + b->size() + 1 != sv.size()) return std::nullopt;
    std::int64_t num = 0, den = 0;
    if (parse_int64(trim(*a), num) && parse_int64(trim(*b), den) && den != 0)
        return make_numeric(AnswerKind::Fraction, Rational(num, den), raw);
    return std::nullopt;
}

// Strips outer wrappers until nothing changes: whitespace, trailing ./,
// $...$ math mode, \text{...}, \box{...}, \boxed{...}, \( \).
std::string strip_wrappers(std::string s) {
    for (;;) {
        std::string before = s;
        s = trim(s);
        while (!s.empty() && (s.back() == '.' || s.back() == ','))
            s.pop_back();
        if (s.size() >= 2 && s.front() == '$' && s.back() == '$')
            s = s.substr(1, s.size() - 2);
        if (s.size() >= 4 && s.substr(0, 2) == "\\(" && s.substr(s.size() - 2) == "\\)")
            s = s.substr(2, s.size() - 4);
        for (std::string_view w : {"\\text{", "\\boxed{", "\\box{", "\\mbox{"}) {
            if (s.size() >= w.size() + 1 && std::string_view(s).substr(0, w.size()) == w &&
                s.back() == '}') {
                auto inner = balanced_content(std::string_view(s), w.size() - 1);
                if (inner && w.size() + inner->size() + 1 == s.size()) {
                    s = *inner;
                    break;
                }
            }
        }
        if (s == before) return s;
    }
}

}  // namespace

std::string to_string(AnswerKind k) {
    switch (k) {
        case AnswerKind::Integer: return "integer";
        case AnswerKind::Fraction: return "rational";
        case AnswerKind::Decimal: return "decimal";
        case AnswerKind::Symbolic: return "symbolic-string";
    }
    throw std::invalid_argument("to_string: bad kind");
}

std::optional<std::string> extract_answer(std::string_view completion) {
    std::optional<std::string> content;
    if (auto phrase = completion.rfind(kAnswerPhrase); phrase != std::string_view::npos)
        content = last_box_content(completion, phrase);
    if (!content) content = last_box_content(completion, 0);
    if (!content) return std::nullopt;
    std::string trimmed = trim(*content);
    if (trimmed.empty()) return std::nullopt;
    return trimmed;
}

CanonicalAnswer normalize_answer(const std::string& raw) {
    if (trim(raw).empty())
        throw std::invalid_argument("normalize_answer: empty input");

    std::string s = strip_wrappers(raw);
    if (s.empty())
        throw std::invalid_argument("normalize_answer: nothing left after stripping wrappers");

    // multiple-choice letter
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'E') {
        CanonicalAnswer a;
        a.kind = AnswerKind::Symbolic;
        a.text = s;
        a.raw = raw;
        return a;
    }
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'e') {
        CanonicalAnswer a;
        a.kind = AnswerKind::Symbolic;
        a.text = std::string(1, static_cast<char>(std::toupper(s[0])));
        a.raw = raw;
        return a;
    }

    // percentage
    if (s.size() > 1 && s.back() == '%') {
        std::string mantissa = trim(s.substr(0, s.size() - 1));
        std::string m = mantissa;
        if (strip_thousands_commas(m)) mantissa = m;
        if (auto num = try_numeric(mantissa, raw)) {
            if (num->value.den() <= Rational::kMaxDen / 100) {
                Rational scaled(num->value.num(), num->value.den() * 100);
                AnswerKind kind = num->kind == AnswerKind::Decimal ? AnswerKind::Decimal
                                                                   : AnswerKind::Fraction;
                return make_numeric(kind, scaled, raw);
            }
        }
    }

    // currency
    if (s.size() > 1 && s[0] == '$') {
        std::string rest = trim(s.substr(1));
        std::string m = rest;
        if (strip_thousands_commas(m)) rest = m;
        if (auto num = try_numeric(rest, raw)) return *num;
    }

    {
        std::string m = s;
        if (strip_thousands_commas(m)) s = m;
    }
    if (auto num = try_numeric(s, raw)) return *num;

    CanonicalAnswer a;
    a.kind = AnswerKind::Symbolic;
    a.text = collapse_whitespace(s);
    std::transform(a.text.begin(), a.text.end(), a.text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    a.raw = raw;
    return a;
}

bool answers_equivalent(const CanonicalAnswer& a, const CanonicalAnswer& b) {
    static const Rational kTolerance(1, 1000000);
    if (a.is_numeric() && b.is_numeric()) {
        if (a.value == b.value) return true;
        if (a.kind == AnswerKind::Decimal || b.kind == AnswerKind::Decimal)
            return Rational::abs_diff_leq(a.value, b.value, kTolerance);
        return false;
    }
    if (!a.is_numeric() && !b.is_numeric())
        return a.text == b.text;
    // mixed: give the symbolic side one numeric re-parse
    const CanonicalAnswer& sym = a.is_numeric() ? b : a;
    const CanonicalAnswer& num = a.is_numeric() ? a : b;
    try {
        CanonicalAnswer reparsed = normalize_answer(sym.text);
        if (reparsed.is_numeric()) return answers_equivalent(num, reparsed);
    } catch (const std::exception&) {
    }
    return false;
}

std::pair<ResponseLabel, std::optional<std::string>> grade_extracted(
    const std::string& completion, const GoldSolution& gold) {
    const CanonicalAnswer gold_canon = normalize_answer(gold.answer);
    std::optional<std::string> extracted = extract_answer(completion);
    if (!extracted) return {ResponseLabel::Unextractable, std::nullopt};
    try {
        const CanonicalAnswer got = normalize_answer(*extracted);
        return {answers_equivalent(got, gold_canon) ? ResponseLabel::Correct
                                                    : ResponseLabel::Incorrect,
                std::move(extracted)};
    } catch (const std::invalid_argument&) {
        // wrapper-only content; nothing extractable after all
        return {ResponseLabel::Unextractable, std::nullopt};
    }
}

ResponseLabel grade_response(const std::string& completion, const GoldSolution& gold) {
    return grade_extracted(completion, gold).first;
}

}  // namespace dast
