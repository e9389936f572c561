#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dast/core.hpp"

namespace dast {

struct GenerationRequest {
    std::string prompt;
    int n = 1;
    double temperature = 0.5;
    double top_p = 0.9;
    int max_tokens = 1024;
    std::optional<std::uint64_t> seed;
    // Metadata consumed by the mock policy (live backends ignore it).
    std::string query_id;

    void validate() const;
};

struct Completion {
    std::string text;
    std::optional<double> logprob;  // sum over tokens when the server reports it
};

// Transport failed after the retry budget was exhausted.
struct BackendError : std::runtime_error {
    int attempts;
    explicit BackendError(const std::string& what, int attempts_ = 1)
        : std::runtime_error(what), attempts(attempts_) {}
};

// Server replied but not with anything we can parse.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad mock spec / unknown query id / invalid request parameters.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScoringUnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GenerationBackend {
public:
    virtual ~GenerationBackend() = default;

    // Returns exactly request.n completions, slot k of the result belonging
    // to request slot k.
    virtual std::vector<Completion> generate(const GenerationRequest& request) = 0;

    virtual bool supports_scoring() const { return false; }

    // Total log-probability of `completion` given `prompt`, always <= 0.
    virtual double sequence_logprob(const std::string& prompt, const std::string& completion);
};

// ---------------------------------------------------------------------------
// Mock policy
// ---------------------------------------------------------------------------

struct LengthModel {
    double mean = 60.0;
    double stddev = 10.0;
};

struct MockQuerySpec {
    double success_p = 0.5;
    std::string gold_answer;
    DifficultyLevel level = DifficultyLevel::Middle;  // picks the length model
};

// Deterministic simulated policy. Output is a pure function of
// (spec, request): the per-completion RNG stream is keyed on the spec seed,
// the request seed, the prompt bytes, and the slot index.
struct MockPolicySpec {
    std::uint64_t seed = 0;
    std::map<std::string, MockQuerySpec> queries;
    std::map<DifficultyLevel, LengthModel> correct_length;
    std::map<DifficultyLevel, LengthModel> incorrect_length;
    // Blend weight of the prompt's mean exemplar length into the drawn
    // response length; 0 ignores the prompt entirely.
    double exemplar_length_mix = 0.5;

    static MockPolicySpec load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
    void validate() const;
};

class MockBackend : public GenerationBackend {
public:
    explicit MockBackend(MockPolicySpec spec);

    std::vector<Completion> generate(const GenerationRequest& request) override;
    bool supports_scoring() const override { return true; }
    double sequence_logprob(const std::string& prompt, const std::string& completion) override;

    const MockPolicySpec& spec() const { return spec_; }

private:
    MockPolicySpec spec_;
};

// ---------------------------------------------------------------------------
// OpenAI-compatible HTTP client (chat/completions), e.g. a vLLM server
// ---------------------------------------------------------------------------

struct HttpBackendOptions {
    std::string base_url;  // "http://host:port"
    std::string model;
    std::string api_key;
    int timeout_s = 120;
    int max_retries = 3;
    int backoff_ms = 500;  // doubles per attempt
    int parallelism = 8;   // per-call fan-out bound
};

class HttpBackend : public GenerationBackend {
public:
    explicit HttpBackend(HttpBackendOptions options);
    ~HttpBackend() override;

    std::vector<Completion> generate(const GenerationRequest& request) override;
    bool supports_scoring() const override { return false; }
    double sequence_logprob(const std::string& prompt, const std::string& completion) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// "mock:<spec.json>" or "http:<base_url>[|model]".
std::unique_ptr<GenerationBackend> make_backend(const std::string& uri);

// ---------------------------------------------------------------------------
// Deterministic RNG primitives shared by the mock policy and tests
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys);

class DetRng {
public:
    explicit DetRng(std::uint64_t key) : state_(key) {}
    std::uint64_t next_u64() { return splitmix64(state_); }
    double uniform01();              // [0, 1)
    double normal(double mean, double stddev);  // Box-Muller, portable

private:
    std::uint64_t state_;
};

}  // namespace dast
