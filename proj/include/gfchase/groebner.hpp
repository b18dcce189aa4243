#pragma once

#include "gfchase/grs.hpp"
#include "gfchase/poly.hpp"

#include <array>
#include <optional>

namespace gfchase {

enum class Side { Left, Right };

struct Monomial2 {
    Side side;
    int degree;

    friend bool operator==(const Monomial2&, const Monomial2&) = default;
};

// Strict total order <_w on monomials of F_q[X]^2:
// same side by degree, (X^i,0) <_w (0,X^j) iff i <= j + w.
std::strong_ordering compare_w(const Monomial2& a, const Monomial2& b, int w);

struct PolyPair {
    Poly u; // left
    Poly v; // right

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

// Leading monomial of a nonzero pair under <_w; throws on the zero pair.
Monomial2 lm_w(const PolyPair& p, int w);

// Leading monomial for the given component degrees (at least one finite).
Monomial2 lm_from_degrees(Degree du, Degree dv, int w);

PolyPair pp_sub_scaled(const FieldCtx& f, const PolyPair& a, Elem k, const PolyPair& b);
PolyPair pp_mul_linear(const FieldCtx& f, const PolyPair& p, Elem root);
PolyPair pp_scale(const FieldCtx& f, const PolyPair& p, Elem c);

// Two-element basis with lm(g[0]) on the left and lm(g[1]) on the right.
struct GroebnerPairBasis {
    std::array<PolyPair, 2> g;
    int w = -1;

    Monomial2 lm(int j) const { return lm_w(g[static_cast<std::size_t>(j)], w); }
};

enum class Scaling {
    Inversion, // g_j - (D_j / D_pivot) g_pivot
    Footnote,  // (D_pivot / D_j) g_j - g_pivot
};

// Outcome of the selection part of one Koetter step.
struct KoetterPlan {
    std::array<bool, 2> active{}; // Delta_j != 0
    int pivot = -1;               // j*, or -1 when no discrepancy is nonzero

    bool empty() const { return pivot < 0; }
};

KoetterPlan koetter_plan(const std::array<Elem, 2>& delta, const std::array<Monomial2, 2>& lm, int w);

// Shared update core. `State` supplies
//   void combine(int j, Elem k, int pivot)        // g_j -= k * g_pivot
//   void shift(int pivot, Elem root)              // g_pivot <- (X - root) g_pivot
// and, for Scaling::Footnote,
//   void scale_combine(int j, Elem k, int pivot)  // g_j <- k * g_j - g_pivot
// The non-pivot combination is applied first so it reads the old pivot.
template <class State>
void koetter_apply(const FieldCtx& f, State& s, const KoetterPlan& plan, const std::array<Elem, 2>& delta,
                   Elem root, Scaling scaling = Scaling::Inversion)
{
    if (plan.empty())
        return;
    const auto js = static_cast<std::size_t>(plan.pivot);
    const std::size_t other = 1 - js;
    if (plan.active[other]) {
        if constexpr (requires { s.scale_combine(0, Elem{}, 0); }) {
            if (scaling == Scaling::Footnote) {
                s.scale_combine(static_cast<int>(other), f.div(delta[js], delta[other]), plan.pivot);
                s.shift(plan.pivot, root);
                return;
            }
        }
        s.combine(static_cast<int>(other), f.div(delta[other], delta[js]), plan.pivot);
    }
    s.shift(plan.pivot, root);
}

// One Koetter step on a polynomial-pair basis: Delta_j = D(g_j) supplied by
// the caller, dx = D(X g_{j*}). The pivot update is X g - (dx/Delta_{j*}) g.
GroebnerPairBasis koetter_step(const FieldCtx& f, const GroebnerPairBasis& G, const std::array<Elem, 2>& delta,
                               Elem dx);

// Groebner basis of {(u,v) : u = S v mod X^{d-1}} under <_{-1}, from
// {(1,0),(0,1)} by one step per syndrome coefficient.
GroebnerPairBasis solve_key_equation(const GrsCode& code, const Syndrome& s);

} // namespace gfchase
