#pragma once

#include <vector>

namespace dast {

// Sequence log-probabilities of the chosen (pos) and rejected (neg) response
// under the current policy and the reference model.
struct PairLogprobs {
    double policy_pos = 0.0;
    double ref_pos = 0.0;
    double policy_neg = 0.0;
    double ref_neg = 0.0;
};

// Mean negative log-likelihood over the batch. Inputs must be finite and
// <= 0; throws std::invalid_argument otherwise or on an empty batch.
double sft_loss(const std::vector<double>& target_logprobs);

// (policy_pos - ref_pos) - (policy_neg - ref_neg).
double dpo_margin(const PairLogprobs& pair);

// Mean of -log sigma(beta * margin), computed as the numerically stable
// softplus log(1 + e^{-x}); finite for margins far beyond +-700.
double dpo_loss(const std::vector<PairLogprobs>& batch, double beta = 1.0);

}  // namespace dast
