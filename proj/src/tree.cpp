#include "gfchase/tree.hpp"

#include <stdexcept>
#include <string>

namespace gfchase {

void ChaseConfig::validate() const
{
    if (mu < 1)
        throw std::invalid_argument("mu must be at least 1");
    if (r_max < 1 || r_max > eta)
        throw std::invalid_argument("r_max must satisfy 1 <= r_max <= eta (r_max=" + std::to_string(r_max) +
                                    ", eta=" + std::to_string(eta) + ")");
}

TestPattern parent_of(const TestPattern& p)
{
    if (p.empty())
        throw std::invalid_argument("the root has no parent");
    return TestPattern(p.begin(), p.end() - 1);
}

ChaseTree::ChaseTree(ChaseInput input, unsigned r_max) : input_(std::move(input)), r_max_(r_max)
{
    if (input_.coords.size() != input_.hypotheses.size())
        throw std::invalid_argument("one hypothesis set per unreliable coordinate");
    for (const auto& a : input_.hypotheses)
        for (Elem b : a)
            if (b == 0)
                throw std::invalid_argument("hypothesis sets must not contain zero");
}

std::uint64_t ChaseTree::node_count() const
{
    // count[r] = number of weight-r patterns, by elementary symmetric sums.
    std::vector<std::uint64_t> count(r_max_ + 1, 0);
    count[0] = 1;
    for (const auto& a : input_.hypotheses)
        for (unsigned r = r_max_; r >= 1; --r)
            count[r] += count[r - 1] * a.size();
    std::uint64_t total = 0;
    for (auto c : count)
        total += c;
    return total;
}

ChaseTree::Cursor::Cursor(const ChaseTree& tree) : tree_(&tree) {}

bool ChaseTree::Cursor::advance_sibling()
{
    // Move the deepest entry to its next hypothesis or next slot; pop levels
    // that are exhausted.
    const auto& in = tree_->input_;
    while (!path_.empty()) {
        PatternEntry& last = path_.back();
        std::size_t& ci = choice_.back();
        ++ci;
        if (ci >= in.hypotheses[last.slot].size()) {
            ci = 0;
            ++last.slot;
            while (last.slot < in.coords.size() && in.hypotheses[last.slot].empty())
                ++last.slot;
        }
        if (last.slot < in.coords.size()) {
            last.coord = in.coords[last.slot];
            last.beta = in.hypotheses[last.slot][ci];
            return true;
        }
        path_.pop_back();
        choice_.pop_back();
    }
    return false;
}

bool ChaseTree::Cursor::next()
{
    const auto& in = tree_->input_;
    if (!started_) {
        started_ = true;
        return true;
    }
    const bool descend = !skip_ && path_.size() < tree_->r_max_;
    skip_ = false;
    if (descend) {
        unsigned slot = path_.empty() ? 0 : path_.back().slot + 1;
        while (slot < in.coords.size() && in.hypotheses[slot].empty())
            ++slot;
        if (slot < in.coords.size()) {
            path_.push_back({slot, in.coords[slot], in.hypotheses[slot][0]});
            choice_.push_back(0);
            return true;
        }
    }
    return advance_sibling();
}

bool CandidateList::add(Candidate c)
{
    if (contains(c.error.as_vector))
        return false;
    items_.push_back(std::move(c));
    return true;
}

bool CandidateList::contains(const std::vector<Elem>& error_vector) const
{
    return std::any_of(items_.begin(), items_.end(),
                       [&](const Candidate& c) { return c.error.as_vector == error_vector; });
}

void TraversalStats::merge(const TraversalStats& o)
{
    nodes += o.nodes;
    edges += o.edges;
    pruned += o.pruned;
    candidate_checks += o.candidate_checks;
    heuristic_triggers += o.heuristic_triggers;
    false_triggers += o.false_triggers;
    rejected_inconsistent += o.rejected_inconsistent;
    edge_mults += o.edge_mults;
    edges_all_nonzero += o.edges_all_nonzero;
    if (max_mults_all_nonzero.size() < o.max_mults_all_nonzero.size())
        max_mults_all_nonzero.resize(o.max_mults_all_nonzero.size(), 0);
    for (std::size_t i = 0; i < o.max_mults_all_nonzero.size(); ++i)
        max_mults_all_nonzero[i] = std::max(max_mults_all_nonzero[i], o.max_mults_all_nonzero[i]);
    if (all_nonzero_by_depth.size() < o.all_nonzero_by_depth.size())
        all_nonzero_by_depth.resize(o.all_nonzero_by_depth.size(), 0);
    for (std::size_t i = 0; i < o.all_nonzero_by_depth.size(); ++i)
        all_nonzero_by_depth[i] += o.all_nonzero_by_depth[i];
    peak_states = std::max(peak_states, o.peak_states);
}

CandidateRule CandidateRule::for_node(const ChaseConfig& cfg, const TestPattern& p)
{
    CandidateRule r;
    r.depth = static_cast<unsigned>(p.size());
    if (cfg.gmd) {
        r.kind = Kind::Erasures;
        r.erased = p;
    } else {
        r.kind = p.empty() ? Kind::BoundedDistance : Kind::ExactDepth;
    }
    return r;
}

bool candidate_condition(const DecodeContext& ctx, Degree elp_degree, const EvalVector& elp_on_domain,
                         const CandidateRule& rule)
{
    if (elp_degree.is_minus_infinity())
        return false;
    const int deg = elp_degree.value();
    const int t = static_cast<int>(ctx.code->t());
    switch (rule.kind) {
    case CandidateRule::Kind::BoundedDistance:
        if (deg > t)
            return false;
        break;
    case CandidateRule::Kind::ExactDepth:
        if (deg != t + static_cast<int>(rule.depth))
            return false;
        break;
    case CandidateRule::Kind::Erasures:
        if (2 * deg > 2 * t + static_cast<int>(rule.erased.size()))
            return false;
        break;
    }
    const auto roots = std::count(elp_on_domain.begin(), elp_on_domain.end(), Elem{0});
    return roots == deg;
}

namespace detail {

void try_add_candidate(const DecodeContext& ctx, std::optional<ErrorEstimate> est, const TestPattern& p,
                       TraversalResult& out)
{
    if (!est)
        return;
    if (!syndrome_consistent(*ctx.code, ctx.syndrome, *est)) {
        ++out.stats.rejected_inconsistent;
        return;
    }
    out.candidates.add({std::move(*est), p});
}

} // namespace detail

TraversalResult traverse_with(const std::shared_ptr<const DecodeContext>& ctx, const ChaseTree& tree,
                              const ChaseConfig& cfg)
{
    switch (cfg.kernel) {
    case KernelKind::A:
        return traverse(ctx, KernelA(ctx), tree, cfg);
    case KernelKind::A2:
        return traverse(ctx, KernelA2(ctx), tree, cfg);
    case KernelKind::B:
        return traverse(ctx, KernelB(ctx, !cfg.gmd), tree, cfg);
    case KernelKind::C:
        return traverse(ctx, KernelC(ctx), tree, cfg);
    }
    throw std::logic_error("unknown kernel");
}

DecodeOutcome chase_decode(const GrsCode& code, std::span<const Elem> y, const ChaseInput& input,
                           const ChaseConfig& cfg, bool always_traverse)
{
    cfg.validate();
    DecodeOutcome out;
    const Syndrome s = syndrome(code, y);
    auto ctx = make_decode_context(code, s);
    const KernelA hd(ctx);
    const TestPattern root;
    ChaseConfig hd_cfg = cfg;
    hd_cfg.gmd = false;
    const auto est = extract_candidate(*ctx, hd, CandidateRule::for_node(hd_cfg, root));
    if (est && syndrome_consistent(code, s, *est)) {
        out.hd_success = true;
        if (!always_traverse) {
            out.result.candidates.add({*est, root});
            return out;
        }
    }
    ChaseInput tree_input = input;
    if (cfg.gmd)
        for (auto& a : tree_input.hypotheses)
            a = {1}; // erasures: the hypothesized value is never used
    out.result = traverse_with(ctx, ChaseTree(std::move(tree_input), cfg.r_max), cfg);
    return out;
}

} // namespace gfchase
