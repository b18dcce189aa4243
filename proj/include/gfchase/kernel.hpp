#pragma once

#include "gfchase/groebner.hpp"
#include "gfchase/grs.hpp"

#include <array>
#include <concepts>
#include <memory>
#include <span>
#include <string_view>

namespace gfchase {

// One adjoined coordinate modification: locator alpha, hypothesized error
// value beta, and the code multiplier at alpha's coordinate.
struct EdgeMod {
    Elem alpha = 0;
    Elem beta = 0;
    Elem a = 0;
    unsigned coord = 0;

    static EdgeMod at(const GrsCode& code, unsigned coord, Elem beta);
};

// Per-decode data shared by every kernel state of one traversal.
struct DecodeContext {
    const GrsCode* code = nullptr;
    Syndrome syndrome;
    GroebnerPairBasis root; // basis of the key-equation module
    EvalVector points;      // lambda^{-i}
    std::vector<Elem> point_pow_2t; // (lambda^{-i})^{2t}
    // Domain evaluations of the root basis, used by the coefficient kernel.
    EvalVector h00, h01, h10, h11, h01d, h11d;

    const FieldCtx& field() const { return code->field(); }
    unsigned two_t() const { return code->d() - 1; }
};

std::shared_ptr<const DecodeContext> make_decode_context(const GrsCode& code, const Syndrome& s,
                                                         const GroebnerPairBasis& root);
std::shared_ptr<const DecodeContext> make_decode_context(const GrsCode& code, const Syndrome& s);

struct IterationRecord {
    std::array<Elem, 2> delta{};
    int pivot = -1;
};

struct EdgeRecord {
    IterationRecord root;
    IterationRecord der;
    bool has_der = false;

    bool all_nonzero() const
    {
        return root.delta[0] && root.delta[1] && (!has_der || (der.delta[0] && der.delta[1]));
    }
    // Delta_1 vanished in every iteration of the edge.
    bool right_unchanged() const { return root.delta[1] == 0 && (!has_der || der.delta[1] == 0); }
};

// (S v mod X^{2t})(beta) for v(beta) = 0 and deg v <= 2t, given beta^{2t};
// exactly 2 deg(v) + 1 multiplications.
Elem truncated_eval_recursive(const FieldCtx& f, std::span<const Elem> S, const Poly& v, Elem beta,
                              Elem beta_pow_2t);

// Common surface used by the tree traversal.
template <class K>
concept ChaseKernel = requires(K k, const K ck, const EdgeMod& e, unsigned idx) {
    { k.apply_edge(e) } -> std::same_as<EdgeRecord>;
    { k.apply_gmd_edge(e) } -> std::same_as<EdgeRecord>;
    { ck.valid() } -> std::same_as<bool>;
    { ck.elp_valid() } -> std::same_as<bool>;
    { ck.elp_degree() } -> std::same_as<Degree>;
    { ck.elp_on_domain() } -> std::same_as<EvalVector>;
    { ck.elp_at(idx) } -> std::same_as<Elem>;
    { ck.elp_deriv_at(idx) } -> std::same_as<Elem>;
    { ck.eep_at(idx) } -> std::same_as<Elem>;
};

// Full pairs of polynomials.
class KernelA {
public:
    explicit KernelA(std::shared_ptr<const DecodeContext> ctx);

    IterationRecord root_iteration(const EdgeMod& e);
    IterationRecord derivative_iteration(const EdgeMod& e);
    EdgeRecord apply_edge(const EdgeMod& e);
    EdgeRecord apply_gmd_edge(const EdgeMod& e);

    const GroebnerPairBasis& basis() const { return G_; }
    bool valid() const { return true; }
    bool elp_valid() const { return true; }
    Degree elp_degree() const { return G_.g[1].v.degree(); }
    EvalVector elp_on_domain() const;
    Elem elp_at(unsigned idx) const;
    Elem elp_deriv_at(unsigned idx) const;
    Elem eep_at(unsigned idx) const;

private:
    std::shared_ptr<const DecodeContext> ctx_;
    GroebnerPairBasis G_;
};

// Right polynomials only; left evaluations recovered from the syndrome.
class KernelA2 {
public:
    explicit KernelA2(std::shared_ptr<const DecodeContext> ctx, Scaling scaling = Scaling::Inversion);

    IterationRecord root_iteration(const EdgeMod& e);
    IterationRecord derivative_iteration(const EdgeMod& e);
    EdgeRecord apply_edge(const EdgeMod& e);
    EdgeRecord apply_gmd_edge(const EdgeMod& e);

    const Poly& right(int j) const { return right_[static_cast<std::size_t>(j)]; }
    int left_degree0() const { return d0_; }
    // False once the left part of g0 can no longer be recovered; no further
    // edge can be applied in general.
    bool valid() const { return valid_; }
    // g1 is still exact. It stays so past the loss of g0 for as long as
    // every further discrepancy of g1 is zero.
    bool elp_valid() const { return elp_valid_; }
    Degree elp_degree() const { return right_[1].degree(); }
    EvalVector elp_on_domain() const;
    Elem elp_at(unsigned idx) const;
    Elem elp_deriv_at(unsigned idx) const;
    // Only meaningful where elp_at(idx) == 0.
    Elem eep_at(unsigned idx) const;

private:
    Monomial2 lm(int j) const;
    Elem left_at(int j, unsigned idx) const;
    void follow_elp_only(IterationRecord& rec, Elem delta1);

    std::shared_ptr<const DecodeContext> ctx_;
    std::array<Poly, 2> right_;
    int d0_ = 0;
    Elem lead0_ = 0; // leading coefficient of g00, its X^{2t} term once d0_ == 2t
    bool valid_ = true;
    bool elp_valid_ = true;
    Scaling scaling_;

    friend struct A2Updater;
};

// Evaluation vectors on the whole domain.
class KernelB {
public:
    explicit KernelB(std::shared_ptr<const DecodeContext> ctx, bool with_derivative = true);

    IterationRecord root_iteration(const EdgeMod& e);
    IterationRecord derivative_iteration(const EdgeMod& e);
    EdgeRecord apply_edge(const EdgeMod& e);
    EdgeRecord apply_gmd_edge(const EdgeMod& e);

    // vec(j, 0) = g_j0, vec(j, 1) = g_j1, vec(j, 2) = g_j1'.
    const EvalVector& vec(int j, int i) const
    {
        return v_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    const Monomial2& lm(int j) const { return m_[static_cast<std::size_t>(j)]; }
    bool tracks_derivative() const { return with_derivative_; }
    bool valid() const { return true; }
    bool elp_valid() const { return true; }
    Degree elp_degree() const { return m_[1].degree; }
    EvalVector elp_on_domain() const { return v_[1][1]; }
    Elem elp_at(unsigned idx) const { return v_[1][1][idx]; }
    Elem elp_deriv_at(unsigned idx) const;
    Elem eep_at(unsigned idx) const { return v_[1][0][idx]; }

private:
    std::shared_ptr<const DecodeContext> ctx_;
    std::array<std::array<EvalVector, 3>, 2> v_;
    std::array<Monomial2, 2> m_;
    bool with_derivative_;

    friend struct BUpdater;
};

// Coefficient polynomials over the fixed root basis, ordering <_w with
// w = deg h11 - deg h00 - 1.
class KernelC {
public:
    explicit KernelC(std::shared_ptr<const DecodeContext> ctx, Scaling scaling = Scaling::Inversion);

    IterationRecord root_iteration(const EdgeMod& e);
    IterationRecord derivative_iteration(const EdgeMod& e);
    EdgeRecord apply_edge(const EdgeMod& e);
    EdgeRecord apply_gmd_edge(const EdgeMod& e);

    const GroebnerPairBasis& coeffs() const { return F_; }
    int w() const { return F_.w; }
    // g_j = f_j0 h_0 + f_j1 h_1.
    PolyPair reconstruct(int j) const;
    bool valid() const { return true; }
    bool elp_valid() const { return true; }
    Degree elp_degree() const;
    EvalVector elp_on_domain() const;
    Elem elp_at(unsigned idx) const;
    Elem elp_deriv_at(unsigned idx) const;
    Elem eep_at(unsigned idx) const;

private:
    std::shared_ptr<const DecodeContext> ctx_;
    GroebnerPairBasis F_;
    Scaling scaling_;
};

static_assert(ChaseKernel<KernelA>);
static_assert(ChaseKernel<KernelA2>);
static_assert(ChaseKernel<KernelB>);
static_assert(ChaseKernel<KernelC>);

enum class KernelKind { A, A2, B, C };

const char* kernel_name(KernelKind k);
KernelKind parse_kernel(std::string_view name);

} // namespace gfchase
