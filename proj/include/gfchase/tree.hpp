#pragma once

#include "gfchase/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace gfchase {

struct ChaseConfig {
    unsigned eta = 4;
    unsigned mu = 2;
    unsigned r_max = 2;
    KernelKind kernel = KernelKind::B;
    // Run the candidate search at every node instead of only where the
    // discrepancy-based stopping criterion fires.
    bool exhaustive = false;
    // Erasure-only tree: root iterations only, one child per coordinate.
    bool gmd = false;

    // Throws std::invalid_argument on 1 <= r_max <= eta, mu >= 1 violations.
    void validate() const;
};

// The eta least reliable coordinates and the nonzero hypothesized error
// values for each of them.
struct ChaseInput {
    std::vector<unsigned> coords;
    std::vector<std::vector<Elem>> hypotheses;
};

struct PatternEntry {
    unsigned slot;  // index into ChaseInput::coords
    unsigned coord;
    Elem beta;

    friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

// Nonzero positions of a test pattern, in increasing slot order.
using TestPattern = std::vector<PatternEntry>;

// Parent of a nonempty pattern: the largest-slot entry is zeroed.
TestPattern parent_of(const TestPattern& p);

// Depth-first enumeration of the weight <= r_max test patterns. A node's
// children set one slot beyond its last nonzero slot, so every node has the
// parent given by parent_of and is visited right after an ancestor chain.
class ChaseTree {
public:
    ChaseTree(ChaseInput input, unsigned r_max);

    const ChaseInput& input() const { return input_; }
    unsigned r_max() const { return r_max_; }
    std::uint64_t node_count() const;

    class Cursor {
    public:
        explicit Cursor(const ChaseTree& tree);
        // Advances to the next node in DFS order; the root is produced first.
        bool next();
        // Do not descend below the current node.
        void skip_subtree() { skip_ = true; }
        const TestPattern& pattern() const { return path_; }
        unsigned depth() const { return static_cast<unsigned>(path_.size()); }

    private:
        bool advance_sibling();

        const ChaseTree* tree_;
        TestPattern path_;
        std::vector<std::size_t> choice_; // hypothesis index per level
        bool started_ = false;
        bool skip_ = false;
    };

    Cursor cursor() const { return Cursor(*this); }

private:
    ChaseInput input_;
    unsigned r_max_;
};

struct Candidate {
    ErrorEstimate error;
    TestPattern pattern;
};

// Candidates deduplicated by error vector, in insertion order.
class CandidateList {
public:
    // Returns false for duplicates.
    bool add(Candidate c);
    const std::vector<Candidate>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains(const std::vector<Elem>& error_vector) const;

private:
    std::vector<Candidate> items_;
};

struct TraversalStats {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint64_t pruned = 0; // kernel state cannot be extended below this node
    std::uint64_t candidate_checks = 0;
    std::uint64_t heuristic_triggers = 0;
    std::uint64_t false_triggers = 0;         // trigger without a new consistent candidate
    std::uint64_t rejected_inconsistent = 0;  // passed the root/Forney tests, failed the syndrome
    std::uint64_t edge_mults = 0;
    std::uint64_t edges_all_nonzero = 0;
    // By depth of the child; index 0 unused.
    std::vector<std::uint64_t> max_mults_all_nonzero;
    std::vector<std::uint64_t> all_nonzero_by_depth;
    std::size_t peak_states = 0;

    void merge(const TraversalStats& o);
};

// Candidate acceptance rule for one node.
struct CandidateRule {
    enum class Kind {
        BoundedDistance, // deg <= t
        ExactDepth,      // deg == t + depth
        Erasures,        // 2 deg <= 2t + erased
    };
    Kind kind = Kind::BoundedDistance;
    unsigned depth = 0;
    TestPattern erased;

    static CandidateRule for_node(const ChaseConfig& cfg, const TestPattern& p);
};

// Degree and root-count part of the candidate test on the ELP evaluations.
bool candidate_condition(const DecodeContext& ctx, Degree elp_degree, const EvalVector& elp_on_domain,
                         const CandidateRule& rule);

// Condition 2 of the stopping criterion: the ELP and its derivative have no
// common root at the given pattern locations.
template <ChaseKernel K>
bool no_common_roots(const K& k, const TestPattern& p)
{
    return std::none_of(p.begin(), p.end(), [&](const PatternEntry& e) {
        return k.elp_at(e.coord) == 0 && k.elp_deriv_at(e.coord) == 0;
    });
}

// Condition 1 on the edge, then condition 2 on the parent's pattern.
template <ChaseKernel K>
bool stopping_criterion(const EdgeRecord& edge, const K& child, const TestPattern& parent_pattern)
{
    if (!edge.has_der || !edge.right_unchanged())
        return false;
    return no_common_roots(child, parent_pattern);
}

// Forney values for the roots of the kernel's ELP and the resulting error
// estimate; nullopt when the rule rejects it (zero values off the erasures).
template <ChaseKernel K>
std::optional<ErrorEstimate> extract_candidate(const DecodeContext& ctx, const K& k, const CandidateRule& rule)
{
    const GrsCode& code = *ctx.code;
    const FieldCtx& f = code.field();
    const EvalVector ev = k.elp_on_domain();
    if (!candidate_condition(ctx, k.elp_degree(), ev, rule))
        return std::nullopt;
    std::vector<Elem> e(code.n(), 0);
    for (unsigned i = 0; i < ev.size(); ++i) {
        if (ev[i] != 0)
            continue;
        const Elem alpha = code.locator(i);
        const Elem den = f.mul(code.a_tilde()[i], k.elp_deriv_at(i));
        if (den == 0)
            return std::nullopt;
        const Elem beta = f.neg(f.div(f.mul(alpha, k.eep_at(i)), den));
        if (beta == 0) {
            const bool erased = std::any_of(rule.erased.begin(), rule.erased.end(),
                                            [&](const PatternEntry& p) { return p.coord == i; });
            if (!erased)
                return std::nullopt;
        }
        e[i] = beta;
    }
    return ErrorEstimate::from_vector(code, std::move(e));
}

struct TraversalResult {
    CandidateList candidates;
    TraversalStats stats;
};

// Observer hook for tests: called once per visited edge with the parent and
// child states, the child pattern, the discrepancy record and the edge cost.
struct NoEdgeObserver {
    template <class K>
    void operator()(const K&, const K&, const TestPattern&, const EdgeRecord&, std::uint64_t) const
    {
    }
};

namespace detail {
void try_add_candidate(const DecodeContext& ctx, std::optional<ErrorEstimate> est, const TestPattern& p,
                       TraversalResult& out);
}

// Depth-first traversal with one saved kernel state per depth. Field
// operations on edges are tallied per edge and forwarded to any counter that
// is active in the caller.
template <ChaseKernel K, class Observer = NoEdgeObserver>
TraversalResult traverse(const std::shared_ptr<const DecodeContext>& ctx, const K& root, const ChaseTree& tree,
                         const ChaseConfig& cfg, Observer&& observe = {})
{
    TraversalResult out;
    TraversalStats& st = out.stats;
    st.max_mults_all_nonzero.assign(tree.r_max() + 1, 0);
    st.all_nonzero_by_depth.assign(tree.r_max() + 1, 0);
    OpCounter* const outer = gfchase::detail::active_counter();

    std::vector<K> stack;
    stack.reserve(tree.r_max() + 1);
    stack.push_back(root);
    auto cur = tree.cursor();
    while (cur.next()) {
        const TestPattern& pat = cur.pattern();
        const unsigned depth = cur.depth();
        ++st.nodes;
        if (depth == 0) {
            ++st.candidate_checks;
            detail::try_add_candidate(*ctx, extract_candidate(*ctx, stack[0], CandidateRule::for_node(cfg, pat)),
                                      pat, out);
            continue;
        }
        stack.erase(stack.begin() + depth, stack.end());
        stack.push_back(stack[depth - 1]);
        st.peak_states = std::max(st.peak_states, stack.size());
        K& child = stack.back();
        const EdgeMod e = EdgeMod::at(*ctx->code, pat.back().coord, pat.back().beta);
        OpCounter edge_ops;
        EdgeRecord rec;
        {
            CountScope scope(edge_ops);
            rec = cfg.gmd ? child.apply_gmd_edge(e) : child.apply_edge(e);
        }
        if (outer) {
            outer->mults += edge_ops.mults;
            outer->adds += edge_ops.adds;
        }
        ++st.edges;
        st.edge_mults += edge_ops.mults;
        if (rec.all_nonzero()) {
            ++st.edges_all_nonzero;
            ++st.all_nonzero_by_depth[depth];
            st.max_mults_all_nonzero[depth] = std::max(st.max_mults_all_nonzero[depth], edge_ops.mults);
        }
        observe(stack[depth - 1], child, pat, rec, edge_ops.mults);
        if (!child.valid()) {
            // The node itself can still be examined while its ELP is exact.
            ++st.pruned;
            cur.skip_subtree();
            if (!child.elp_valid())
                continue;
        }

        if (cfg.exhaustive || cfg.gmd) {
            ++st.candidate_checks;
            detail::try_add_candidate(*ctx, extract_candidate(*ctx, child, CandidateRule::for_node(cfg, pat)),
                                      pat, out);
            continue;
        }
        const TestPattern parent = parent_of(pat);
        if (!stopping_criterion(rec, child, parent))
            continue;
        ++st.heuristic_triggers;
        ++st.candidate_checks;
        // The right element is unchanged across the edge, so it is the
        // parent's and is tested against the parent's depth.
        const std::size_t before = out.candidates.size();
        detail::try_add_candidate(*ctx, extract_candidate(*ctx, child, CandidateRule::for_node(cfg, parent)),
                                  parent, out);
        if (out.candidates.size() == before)
            ++st.false_triggers;
    }
    return out;
}

// Traversal with the kernel named by cfg.kernel, starting from the key
// equation solution in ctx.
TraversalResult traverse_with(const std::shared_ptr<const DecodeContext>& ctx, const ChaseTree& tree,
                              const ChaseConfig& cfg);

struct DecodeOutcome {
    bool hd_success = false;
    TraversalResult result;
};

// Hard-decision decoding first; the tree is traversed only when it fails
// (or always, when `always_traverse` is set).
DecodeOutcome chase_decode(const GrsCode& code, std::span<const Elem> y, const ChaseInput& input,
                           const ChaseConfig& cfg, bool always_traverse = false);

} // namespace gfchase
