#include "gfchase/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gfchase {

void ChannelModel::validate(const FieldCtx& f) const
{
    if (kind == ChannelKind::Symmetric) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("symmetric channel needs 0 <= p <= 1");
        return;
    }
    if (!(sigma > 0.0))
        throw std::invalid_argument("soft channel needs sigma > 0");
    if (f.q() > max_soft_q)
        throw std::invalid_argument("soft channel supports q <= " + std::to_string(max_soft_q));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

namespace {

std::vector<double> softmax(const std::vector<double>& logit)
{
    const double mx = *std::max_element(logit.begin(), logit.end());
    std::vector<double> out(logit.size());
    double sum = 0.0;
    for (std::size_t a = 0; a < logit.size(); ++a)
        sum += out[a] = std::exp(logit[a] - mx);
    for (double& x : out)
        x /= sum;
    return out;
}

// Symbols sorted by decreasing posterior, ties by symbol value.
std::vector<Elem> ranked_symbols(const std::vector<double>& post)
{
    std::vector<Elem> order(post.size());
    std::iota(order.begin(), order.end(), Elem{0});
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return post[a] > post[b]; });
    return order;
}

} // namespace

ReliabilityInfo reliability_from_posteriors(std::vector<std::vector<double>> posterior)
{
    ReliabilityInfo info;
    info.hard.resize(posterior.size());
    info.score.resize(posterior.size());
    for (std::size_t i = 0; i < posterior.size(); ++i) {
        const auto& row = posterior[i];
        if (row.size() < 2)
            throw std::invalid_argument("posterior rows need at least two symbols");
        const double sum = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("posterior row " + std::to_string(i) + " does not sum to 1");
        const auto order = ranked_symbols(row);
        info.hard[i] = order[0];
        info.score[i] = row[order[0]] - row[order[1]];
    }
    info.q = static_cast<std::uint32_t>(posterior.empty() ? 0 : posterior[0].size());
    info.posterior = std::move(posterior);
    return info;
}

Transmission transmit(const GrsCode& code, std::span<const Elem> codeword, const ChannelModel& model,
                      std::mt19937_64& rng)
{
    const FieldCtx& f = code.field();
    model.validate(f);
    const std::size_t n = codeword.size();
    const std::uint32_t q = f.q();
    Transmission tx;
    tx.y.resize(n);
    tx.error.resize(n);

    if (model.kind == ChannelKind::Symmetric) {
        std::bernoulli_distribution flip(model.p);
        std::uniform_int_distribution<Elem> other(1, q - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const Elem e = flip(rng) ? other(rng) : 0;
            tx.error[i] = e;
            tx.y[i] = f.add(codeword[i], e);
        }
        // Hard decisions carry no ordering information: every coordinate has
        // posterior 1-p on the received symbol and p/(q-1) elsewhere.
        tx.info.q = q;
        tx.info.hard = tx.y;
        tx.info.score.assign(n, (1.0 - model.p) - model.p / (q - 1));
        return tx;
    }

    std::normal_distribution<double> noise(0.0, model.sigma);
    const double inv_var = 1.0 / (model.sigma * model.sigma);
    std::vector<std::vector<double>> post(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> logit(q);
        for (Elem a = 0; a < q; ++a) {
            const double r = (a == codeword[i] ? 1.0 : 0.0) + noise(rng);
            logit[a] = r * inv_var;
        }
        post[i] = softmax(logit);
    }
    tx.info = reliability_from_posteriors(std::move(post));
    tx.y = tx.info.hard;
    for (std::size_t i = 0; i < n; ++i)
        tx.error[i] = f.sub(tx.y[i], codeword[i]);
    return tx;
}

ChaseInput pick_unreliable(const ReliabilityInfo& info, unsigned eta, unsigned mu)
{
    const std::size_t n = info.hard.size();
    if (eta > n)
        throw std::invalid_argument("eta exceeds the code length");
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return info.score[a] < info.score[b]; });
    ChaseInput in;
    in.coords.assign(order.begin(), order.begin() + eta);
    in.hypotheses.resize(eta);
    for (unsigned k = 0; k < eta; ++k) {
        const unsigned i = in.coords[k];
        if (!info.alternatives.empty()) {
            for (Elem a : info.alternatives[i]) {
                if (in.hypotheses[k].size() + 1 >= mu)
                    break;
                const Elem diff = a ^ info.hard[i];
                if (diff != 0 && std::find(in.hypotheses[k].begin(), in.hypotheses[k].end(), diff) ==
                                     in.hypotheses[k].end())
                    in.hypotheses[k].push_back(diff);
            }
            continue;
        }
        if (info.posterior.empty()) {
            // Symmetric posteriors: a* first, the rest tie and go by value.
            for (Elem a = 0; a < info.q && in.hypotheses[k].size() + 1 < mu; ++a)
                if (a != info.hard[i])
                    in.hypotheses[k].push_back(a ^ info.hard[i]);
            continue;
        }
        const auto ranked = ranked_symbols(info.posterior[i]);
        for (unsigned s = 0; s < mu && s < ranked.size(); ++s) {
            const Elem diff = ranked[s] ^ info.hard[i];
            if (diff != 0)
                in.hypotheses[k].push_back(diff);
        }
    }
    return in;
}

std::optional<std::size_t> select_best(const CandidateList& candidates, std::span<const Elem> y,
                                       const ReliabilityInfo& info, const ChannelModel& model)
{
    if (candidates.empty())
        return std::nullopt;
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& e = candidates.items()[k].error.as_vector;
        double score = 0.0;
        if (model.kind == ChannelKind::Symmetric || info.posterior.empty()) {
            score = -static_cast<double>(candidates.items()[k].error.weight());
        } else {
            for (std::size_t i = 0; i < e.size(); ++i) {
                const Elem sym = y[i] ^ e[i];
                score += std::log(std::max(info.posterior[i][sym], 1e-300));
            }
        }
        if (!best || score > best_score) {
            best = k;
            best_score = score;
        }
    }
    return best;
}

std::vector<Elem> corrected_word(const GrsCode& code, std::span<const Elem> y, const ErrorEstimate& e)
{
    const FieldCtx& f = code.field();
    std::vector<Elem> c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        c[i] = f.sub(y[i], e.as_vector[i]);
    return c;
}

bool direct_hit_reachable(const GrsCode& code, std::span<const Elem> error, const ChaseInput& input,
                          unsigned r_max)
{
    const auto eps = static_cast<unsigned>(std::count_if(error.begin(), error.end(), [](Elem x) { return x; }));
    unsigned correct = 0;
    for (std::size_t k = 0; k < input.coords.size(); ++k) {
        const Elem e = error[input.coords[k]];
        const auto& a = input.hypotheses[k];
        if (e != 0 && std::find(a.begin(), a.end(), e) != a.end())
            ++correct;
    }
    return eps <= code.t() + std::min(correct, r_max);
}

} // namespace gfchase
