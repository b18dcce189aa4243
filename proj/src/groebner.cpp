#include "gfchase/groebner.hpp"

#include <cassert>

namespace gfchase {

std::strong_ordering compare_w(const Monomial2& a, const Monomial2& b, int w)
{
    if (a.side == b.side)
        return a.degree <=> b.degree;
    if (a.side == Side::Left)
        return a.degree <= b.degree + w ? std::strong_ordering::less : std::strong_ordering::greater;
    return b.degree <= a.degree + w ? std::strong_ordering::greater : std::strong_ordering::less;
}

Monomial2 lm_from_degrees(Degree du, Degree dv, int w)
{
    if (du.is_minus_infinity() && dv.is_minus_infinity())
        throw std::invalid_argument("leading monomial of the zero pair");
    if (dv.is_minus_infinity())
        return {Side::Left, du.value()};
    if (du.is_minus_infinity())
        return {Side::Right, dv.value()};
    if (du.value() <= dv.value() + w)
        return {Side::Right, dv.value()};
    return {Side::Left, du.value()};
}

Monomial2 lm_w(const PolyPair& p, int w) { return lm_from_degrees(p.u.degree(), p.v.degree(), w); }

PolyPair pp_sub_scaled(const FieldCtx& f, const PolyPair& a, Elem k, const PolyPair& b)
{
    return {p_sub(f, a.u, p_scale(f, b.u, k)), p_sub(f, a.v, p_scale(f, b.v, k))};
}

PolyPair pp_mul_linear(const FieldCtx& f, const PolyPair& p, Elem root)
{
    return {p_mul_linear(f, p.u, root), p_mul_linear(f, p.v, root)};
}

PolyPair pp_scale(const FieldCtx& f, const PolyPair& p, Elem c)
{
    return {p_scale(f, p.u, c), p_scale(f, p.v, c)};
}

KoetterPlan koetter_plan(const std::array<Elem, 2>& delta, const std::array<Monomial2, 2>& lm, int w)
{
    KoetterPlan plan;
    plan.active = {delta[0] != 0, delta[1] != 0};
    if (plan.active[0] && plan.active[1]) {
        const auto c = compare_w(lm[0], lm[1], w);
        // Leading monomials of a basis sit on distinct sides, so they never tie.
        assert(c != std::strong_ordering::equal);
        plan.pivot = c == std::strong_ordering::less ? 0 : 1;
    } else if (plan.active[0]) {
        plan.pivot = 0;
    } else if (plan.active[1]) {
        plan.pivot = 1;
    }
    return plan;
}

namespace {

struct PairState {
    const FieldCtx& f;
    GroebnerPairBasis& G;

    void combine(int j, Elem k, int pivot)
    {
        G.g[static_cast<std::size_t>(j)] =
            pp_sub_scaled(f, G.g[static_cast<std::size_t>(j)], k, G.g[static_cast<std::size_t>(pivot)]);
    }
    void shift(int pivot, Elem root)
    {
        G.g[static_cast<std::size_t>(pivot)] = pp_mul_linear(f, G.g[static_cast<std::size_t>(pivot)], root);
    }
};

} // namespace

GroebnerPairBasis koetter_step(const FieldCtx& f, const GroebnerPairBasis& G, const std::array<Elem, 2>& delta,
                               Elem dx)
{
    const KoetterPlan plan = koetter_plan(delta, {G.lm(0), G.lm(1)}, G.w);
    GroebnerPairBasis out = G;
    if (plan.empty())
        return out;
    PairState st{f, out};
    koetter_apply(f, st, plan, delta, f.div(dx, delta[static_cast<std::size_t>(plan.pivot)]));
    return out;
}

GroebnerPairBasis solve_key_equation(const GrsCode& code, const Syndrome& s)
{
    const FieldCtx& f = code.field();
    const Poly S = s.as_poly();
    GroebnerPairBasis G;
    G.w = -1;
    G.g[0] = {Poly::constant(1), Poly()};
    G.g[1] = {Poly(), Poly::constant(1)};

    // D_j(u,v) = coefficient j of u - S v.
    auto functional = [&](const PolyPair& p, std::size_t j) {
        Elem acc = p.u[j];
        const auto vc = p.v.coeffs();
        for (std::size_t i = 0; i < vc.size() && i <= j; ++i)
            acc = f.sub(acc, f.mul(S[j - i], vc[i]));
        return acc;
    };

    for (std::size_t j = 0; j + 1 < code.d(); ++j) {
        const std::array<Elem, 2> delta{functional(G.g[0], j), functional(G.g[1], j)};
        const KoetterPlan plan = koetter_plan(delta, {G.lm(0), G.lm(1)}, G.w);
        if (plan.empty())
            continue;
        // D_j(X g) is coefficient j-1 of (u - S v), already zero by the
        // earlier constraints, so the pivot update is X * g.
        const PolyPair& piv = G.g[static_cast<std::size_t>(plan.pivot)];
        const Elem dx = j == 0 ? Elem{0} : functional(piv, j - 1);
        G = koetter_step(f, G, delta, dx);
    }
    return G;
}

} // namespace gfchase
