#pragma once

#include "gfchase/tree.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace gfchase {

enum class ChannelKind {
    Symmetric, // q-ary symmetric, symbol error probability p
    Soft,      // q-ary orthogonal signaling with Gaussian noise of std sigma
};

struct ChannelModel {
    ChannelKind kind = ChannelKind::Symmetric;
    double p = 0.0;
    double sigma = 0.5;

    // Soft posteriors are stored per symbol, so the soft model is limited to
    // small fields.
    static constexpr std::uint32_t max_soft_q = 256;

    void validate(const FieldCtx& f) const;
};

struct ReliabilityInfo {
    std::uint32_t q = 0;
    std::vector<Elem> hard;                    // a*_i
    // posterior[i][a]; empty for the symmetric channel, whose posterior is
    // 1-p on a*_i and p/(q-1) on every other symbol.
    std::vector<std::vector<double>> posterior;
    // Ranked alternative symbols per coordinate, used instead of posteriors
    // when only hard decisions and scores are known.
    std::vector<std::vector<Elem>> alternatives;
    std::vector<double> score;                  // best minus second-best posterior
};

struct Transmission {
    std::vector<Elem> y;
    std::vector<Elem> error; // y - codeword
    ReliabilityInfo info;
};

// Per-trial generator derived from the master seed, independent of the
// order in which trials are run.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

Transmission transmit(const GrsCode& code, std::span<const Elem> codeword, const ChannelModel& model,
                      std::mt19937_64& rng);

// Reliability information from explicit posteriors (rows must sum to 1).
ReliabilityInfo reliability_from_posteriors(std::vector<std::vector<double>> posterior);

// eta least reliable coordinates (lowest score, ties by coordinate index) and
// the nonzero differences a - a* over the mu most probable symbols a.
ChaseInput pick_unreliable(const ReliabilityInfo& info, unsigned eta, unsigned mu);

// Maximum-likelihood candidate: index into the list, nullopt when empty.
std::optional<std::size_t> select_best(const CandidateList& candidates, std::span<const Elem> y,
                                       const ReliabilityInfo& info, const ChannelModel& model);

// The codeword y - e for a candidate error e.
std::vector<Elem> corrected_word(const GrsCode& code, std::span<const Elem> y, const ErrorEstimate& e);

// Whether some node of the tree is a direct hit for the error vector: the
// weight exceeds t by at most the number of correctly hypothesized
// coordinates in I (capped at r_max).
bool direct_hit_reachable(const GrsCode& code, std::span<const Elem> error, const ChaseInput& input,
                          unsigned r_max);

} // namespace gfchase
