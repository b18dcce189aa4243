#include "gfchase/kernel.hpp"

#include <stdexcept>
#include <string>

namespace gfchase {

EdgeMod EdgeMod::at(const GrsCode& code, unsigned coord, Elem beta)
{
    if (coord >= code.n())
        throw std::out_of_range("coordinate out of range");
    if (beta == 0)
        throw std::invalid_argument("hypothesized error value must be nonzero");
    return {code.locator(coord), beta, code.a_tilde()[coord], coord};
}

std::shared_ptr<const DecodeContext> make_decode_context(const GrsCode& code, const Syndrome& s,
                                                         const GroebnerPairBasis& root)
{
    const FieldCtx& f = code.field();
    auto ctx = std::make_shared<DecodeContext>();
    ctx->code = &code;
    ctx->syndrome = s;
    ctx->root = root;
    ctx->points = domain_points(f);
    ctx->point_pow_2t.resize(ctx->points.size());
    for (std::size_t i = 0; i < ctx->points.size(); ++i)
        ctx->point_pow_2t[i] = f.pow(ctx->points[i], code.d() - 1);
    const PolyPair& h0 = root.g[0];
    const PolyPair& h1 = root.g[1];
    ctx->h00 = p_eval_domain(f, h0.u);
    ctx->h01 = p_eval_domain(f, h0.v);
    ctx->h10 = p_eval_domain(f, h1.u);
    ctx->h11 = p_eval_domain(f, h1.v);
    ctx->h01d = p_eval_domain(f, p_deriv(f, h0.v));
    ctx->h11d = p_eval_domain(f, p_deriv(f, h1.v));
    return ctx;
}

std::shared_ptr<const DecodeContext> make_decode_context(const GrsCode& code, const Syndrome& s)
{
    return make_decode_context(code, s, solve_key_equation(code, s));
}

Elem truncated_eval_recursive(const FieldCtx& f, std::span<const Elem> S, const Poly& v, Elem beta,
                              Elem beta_pow_2t)
{
    if (v.is_zero())
        return 0;
    const int two_t = static_cast<int>(S.size());
    const int delta = v.degree().value();
    if (delta > two_t)
        throw std::invalid_argument("truncated evaluation needs deg v <= 2t");
    // ratio_j = A~_j / beta^{2t}; ratio_{2t-delta-1} = 0 because v(beta) = 0.
    Elem ratio = 0;
    Elem sum = 0;
    for (int j = two_t - delta - 1; j <= two_t - 2; ++j) {
        ratio = f.sub(f.mul(beta, ratio), v[static_cast<std::size_t>(two_t - 1 - j)]);
        sum = f.add(sum, f.mul(S[static_cast<std::size_t>(j + 1)], ratio));
    }
    return f.mul(sum, beta_pow_2t);
}

namespace {

struct PairUpdater {
    const FieldCtx& f;
    GroebnerPairBasis& G;

    PolyPair& g(int j) { return G.g[static_cast<std::size_t>(j)]; }
    void combine(int j, Elem k, int pivot) { g(j) = pp_sub_scaled(f, g(j), k, g(pivot)); }
    void scale_combine(int j, Elem k, int pivot)
    {
        const PolyPair scaled = pp_scale(f, g(j), k);
        g(j) = {p_sub(f, scaled.u, g(pivot).u), p_sub(f, scaled.v, g(pivot).v)};
    }
    void shift(int pivot, Elem root) { g(pivot) = pp_mul_linear(f, g(pivot), root); }
};

IterationRecord run_pair_step(const FieldCtx& f, GroebnerPairBasis& G, const std::array<Elem, 2>& delta,
                              Elem root, Scaling scaling = Scaling::Inversion)
{
    IterationRecord rec;
    rec.delta = delta;
    const KoetterPlan plan = koetter_plan(delta, {G.lm(0), G.lm(1)}, G.w);
    rec.pivot = plan.pivot;
    PairUpdater up{f, G};
    koetter_apply(f, up, plan, delta, root, scaling);
    return rec;
}

} // namespace

// ---------------------------------------------------------------- KernelA

KernelA::KernelA(std::shared_ptr<const DecodeContext> ctx) : ctx_(std::move(ctx)), G_(ctx_->root) {}

IterationRecord KernelA::root_iteration(const EdgeMod& e)
{
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const std::array<Elem, 2> delta{p_eval(f, G_.g[0].v, x), p_eval(f, G_.g[1].v, x)};
    return run_pair_step(f, G_, delta, x);
}

IterationRecord KernelA::derivative_iteration(const EdgeMod& e)
{
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const Elem ba = f.mul(e.beta, e.a);
    std::array<Elem, 2> delta{};
    for (std::size_t j = 0; j < 2; ++j) {
        const PolyPair& g = G_.g[j];
        delta[j] = f.add(f.mul(ba, p_eval(f, p_deriv(f, g.v), x)), f.mul(e.alpha, p_eval(f, g.u, x)));
    }
    return run_pair_step(f, G_, delta, x);
}

EdgeRecord KernelA::apply_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    r.der = derivative_iteration(e);
    r.has_der = true;
    return r;
}

EdgeRecord KernelA::apply_gmd_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    return r;
}

EvalVector KernelA::elp_on_domain() const { return p_eval_domain(ctx_->field(), G_.g[1].v); }

Elem KernelA::elp_at(unsigned idx) const { return p_eval(ctx_->field(), G_.g[1].v, ctx_->points[idx]); }

Elem KernelA::elp_deriv_at(unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    return p_eval(f, p_deriv(f, G_.g[1].v), ctx_->points[idx]);
}

Elem KernelA::eep_at(unsigned idx) const { return p_eval(ctx_->field(), G_.g[1].u, ctx_->points[idx]); }

// ---------------------------------------------------------------- KernelA2

struct A2Updater {
    const FieldCtx& f;
    KernelA2& k;

    bool top_active() const { return k.d0_ == static_cast<int>(k.ctx_->two_t()); }

    void combine(int j, Elem kk, int pivot)
    {
        // g10 would pick up the X^{2t} term of g00.
        if (j == 1 && top_active())
            k.valid_ = k.elp_valid_ = false;
        auto& r = k.right_;
        r[static_cast<std::size_t>(j)] =
            p_sub(f, r[static_cast<std::size_t>(j)], p_scale(f, r[static_cast<std::size_t>(pivot)], kk));
    }

    void scale_combine(int j, Elem kk, int pivot)
    {
        if (j == 1 && top_active())
            k.valid_ = k.elp_valid_ = false;
        if (j == 0 && k.scaling_ == Scaling::Footnote)
            k.lead0_ = f.mul(kk, k.lead0_);
        auto& r = k.right_;
        r[static_cast<std::size_t>(j)] =
            p_sub(f, p_scale(f, r[static_cast<std::size_t>(j)], kk), r[static_cast<std::size_t>(pivot)]);
    }

    // The leading coefficient of g00 survives the shift, and subtracting a
    // multiple of g1 never reaches it, so only the footnote rescaling above
    // touches it.
    void shift(int pivot, Elem root)
    {
        const int two_t = static_cast<int>(k.ctx_->two_t());
        auto& r = k.right_;
        if (pivot == 0) {
            if (k.d0_ >= two_t)
                k.valid_ = false;
            ++k.d0_;
        }
        r[static_cast<std::size_t>(pivot)] = p_mul_linear(f, r[static_cast<std::size_t>(pivot)], root);
        if (pivot == 1 && r[1].degree() > Degree(two_t))
            k.valid_ = k.elp_valid_ = false;
    }
};

KernelA2::KernelA2(std::shared_ptr<const DecodeContext> ctx, Scaling scaling)
    : ctx_(std::move(ctx)), right_{ctx_->root.g[0].v, ctx_->root.g[1].v}, scaling_(scaling)
{
    const Poly& h00 = ctx_->root.g[0].u;
    d0_ = h00.degree().value();
    const int two_t = static_cast<int>(ctx_->two_t());
    if (d0_ > two_t)
        valid_ = false;
    if (right_[1].degree() > Degree(two_t))
        valid_ = elp_valid_ = false;
    lead0_ = h00.leading();
}

Monomial2 KernelA2::lm(int j) const
{
    if (j == 0)
        return {Side::Left, d0_};
    return {Side::Right, right_[1].degree().value()};
}

Elem KernelA2::left_at(int j, unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    const Elem x = ctx_->points[idx];
    Elem u = truncated_eval_recursive(f, ctx_->syndrome.s, right_[static_cast<std::size_t>(j)], x,
                                      ctx_->point_pow_2t[idx]);
    if (j == 0 && d0_ == static_cast<int>(ctx_->two_t()))
        u = f.add(u, f.mul(lead0_, ctx_->point_pow_2t[idx]));
    return u;
}

// With g0 lost only g1 is followed: it is unchanged when its discrepancy
// vanishes, and becomes unknown otherwise. Delta_0 is reported as zero.
void KernelA2::follow_elp_only(IterationRecord& rec, Elem delta1)
{
    rec.delta = {0, delta1};
    if (delta1 != 0)
        elp_valid_ = false;
}

IterationRecord KernelA2::root_iteration(const EdgeMod& e)
{
    IterationRecord rec;
    if (!elp_valid_)
        return rec;
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    if (!valid_) {
        follow_elp_only(rec, p_eval(f, right_[1], x));
        return rec;
    }
    rec.delta = {p_eval(f, right_[0], x), p_eval(f, right_[1], x)};
    const KoetterPlan plan = koetter_plan(rec.delta, {lm(0), lm(1)}, -1);
    rec.pivot = plan.pivot;
    A2Updater up{f, *this};
    koetter_apply(f, up, plan, rec.delta, x, scaling_);
    return rec;
}

IterationRecord KernelA2::derivative_iteration(const EdgeMod& e)
{
    IterationRecord rec;
    if (!elp_valid_)
        return rec;
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const Elem ba = f.mul(e.beta, e.a);
    auto discrepancy = [&](int j) {
        const Poly& v = right_[static_cast<std::size_t>(j)];
        const Poly dv = p_deriv(f, v);
        const Elem t0 = dv.is_zero() ? 0 : f.mul(ba, p_eval(f, dv, x));
        const Elem t1 = v.is_zero() ? 0 : f.mul(e.alpha, left_at(j, e.coord));
        return f.add(t0, t1);
    };
    if (!valid_) {
        follow_elp_only(rec, discrepancy(1));
        return rec;
    }
    rec.delta = {discrepancy(0), discrepancy(1)};
    const KoetterPlan plan = koetter_plan(rec.delta, {lm(0), lm(1)}, -1);
    rec.pivot = plan.pivot;
    A2Updater up{f, *this};
    koetter_apply(f, up, plan, rec.delta, x, scaling_);
    return rec;
}

EdgeRecord KernelA2::apply_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    r.der = derivative_iteration(e);
    r.has_der = true;
    return r;
}

EdgeRecord KernelA2::apply_gmd_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    return r;
}

EvalVector KernelA2::elp_on_domain() const { return p_eval_domain(ctx_->field(), right_[1]); }

Elem KernelA2::elp_at(unsigned idx) const { return p_eval(ctx_->field(), right_[1], ctx_->points[idx]); }

Elem KernelA2::elp_deriv_at(unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    return p_eval(f, p_deriv(f, right_[1]), ctx_->points[idx]);
}

Elem KernelA2::eep_at(unsigned idx) const { return left_at(1, idx); }

// ---------------------------------------------------------------- KernelB

struct BUpdater {
    const FieldCtx& f;
    KernelB& k;
    unsigned idx;
    bool root_iteration;

    std::array<EvalVector, 3>& vecs(int j) { return k.v_[static_cast<std::size_t>(j)]; }

    void combine(int j, Elem kk, int pivot)
    {
        auto& dst = vecs(j);
        const auto& src = vecs(pivot);
        const std::size_t count = k.with_derivative_ ? 3 : 2;
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t e = 0; e < dst[i].size(); ++e) {
                // The combination is built to vanish there.
                if (root_iteration && i == 1 && e == idx) {
                    dst[i][e] = 0;
                    continue;
                }
                dst[i][e] = f.sub(dst[i][e], f.mul(kk, src[i][e]));
            }
        }
    }

    void shift(int pivot, Elem root)
    {
        auto& v = vecs(pivot);
        const auto& pts = k.ctx_->points;
        for (std::size_t e = 0; e < pts.size(); ++e) {
            const Elem factor = f.sub(pts[e], root);
            if (factor == 0) {
                if (k.with_derivative_)
                    v[2][e] = v[1][e];
                v[0][e] = 0;
                v[1][e] = 0;
                continue;
            }
            if (k.with_derivative_)
                v[2][e] = f.add(f.mul(factor, v[2][e]), v[1][e]);
            v[0][e] = f.mul(factor, v[0][e]);
            v[1][e] = f.mul(factor, v[1][e]);
        }
        ++k.m_[static_cast<std::size_t>(pivot)].degree;
    }
};

KernelB::KernelB(std::shared_ptr<const DecodeContext> ctx, bool with_derivative)
    : ctx_(std::move(ctx)), with_derivative_(with_derivative)
{
    const FieldCtx& f = ctx_->field();
    const GroebnerPairBasis& G = ctx_->root;
    for (std::size_t j = 0; j < 2; ++j) {
        v_[j][0] = p_eval_domain(f, G.g[j].u);
        v_[j][1] = p_eval_domain(f, G.g[j].v);
        if (with_derivative_)
            v_[j][2] = p_eval_domain(f, p_deriv(f, G.g[j].v));
        m_[j] = G.lm(static_cast<int>(j));
    }
}

IterationRecord KernelB::root_iteration(const EdgeMod& e)
{
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    IterationRecord rec;
    rec.delta = {v_[0][1][e.coord], v_[1][1][e.coord]};
    const KoetterPlan plan = koetter_plan(rec.delta, m_, -1);
    rec.pivot = plan.pivot;
    BUpdater up{f, *this, e.coord, true};
    koetter_apply(f, up, plan, rec.delta, x);
    return rec;
}

IterationRecord KernelB::derivative_iteration(const EdgeMod& e)
{
    if (!with_derivative_)
        throw std::logic_error("derivative iteration needs derivative vectors");
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const Elem ba = f.mul(e.beta, e.a);
    IterationRecord rec;
    for (std::size_t j = 0; j < 2; ++j)
        rec.delta[j] = f.add(f.mul(ba, v_[j][2][e.coord]), f.mul(e.alpha, v_[j][0][e.coord]));
    const KoetterPlan plan = koetter_plan(rec.delta, m_, -1);
    rec.pivot = plan.pivot;
    BUpdater up{f, *this, e.coord, false};
    koetter_apply(f, up, plan, rec.delta, x);
    return rec;
}

EdgeRecord KernelB::apply_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    r.der = derivative_iteration(e);
    r.has_der = true;
    return r;
}

EdgeRecord KernelB::apply_gmd_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    return r;
}

Elem KernelB::elp_deriv_at(unsigned idx) const
{
    if (with_derivative_)
        return v_[1][2][idx];
    // Without derivative vectors: sigma = c prod (X - x_k) over the zero
    // entries, so sigma'(x_i) = c prod_{k != i} (x_i - x_k).
    const FieldCtx& f = ctx_->field();
    const auto& pts = ctx_->points;
    const auto& ev = v_[1][1];
    std::vector<std::size_t> roots;
    std::size_t probe = pts.size();
    for (std::size_t e = 0; e < ev.size(); ++e) {
        if (ev[e] == 0)
            roots.push_back(e);
        else if (probe == pts.size())
            probe = e;
    }
    if (probe == pts.size() || static_cast<int>(roots.size()) != m_[1].degree)
        throw DecodeError("error locator does not split into distinct domain roots");
    Elem prod = 1;
    for (std::size_t r : roots)
        prod = f.mul(prod, f.sub(pts[probe], pts[r]));
    const Elem c = f.div(ev[probe], prod);
    Elem d = c;
    for (std::size_t r : roots)
        if (r != idx)
            d = f.mul(d, f.sub(pts[idx], pts[r]));
    return d;
}

// ---------------------------------------------------------------- KernelC

namespace {

// w * p(x), free when p is the zero polynomial.
Elem weighted_eval(const FieldCtx& f, Elem w, const Poly& p, Elem x)
{
    return p.is_zero() ? Elem{0} : f.mul(w, p_eval(f, p, x));
}

} // namespace

KernelC::KernelC(std::shared_ptr<const DecodeContext> ctx, Scaling scaling)
    : ctx_(std::move(ctx)), scaling_(scaling)
{
    const GroebnerPairBasis& H = ctx_->root;
    F_.g[0] = {Poly::constant(1), Poly()};
    F_.g[1] = {Poly(), Poly::constant(1)};
    F_.w = H.g[1].v.degree().value() - H.g[0].u.degree().value() - 1;
}

IterationRecord KernelC::root_iteration(const EdgeMod& e)
{
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const Elem b0 = ctx_->h01[e.coord];
    const Elem b1 = ctx_->h11[e.coord];
    std::array<Elem, 2> delta{};
    for (std::size_t j = 0; j < 2; ++j) {
        const PolyPair& g = F_.g[j];
        delta[j] = f.add(weighted_eval(f, b0, g.u, x), weighted_eval(f, b1, g.v, x));
    }
    return run_pair_step(f, F_, delta, x, scaling_);
}

IterationRecord KernelC::derivative_iteration(const EdgeMod& e)
{
    const FieldCtx& f = ctx_->field();
    const Elem x = f.inv(e.alpha);
    const unsigned i = e.coord;
    const Elem b0 = ctx_->h01[i];
    const Elem b1 = ctx_->h11[i];
    const Elem ratio = f.div(e.alpha, f.mul(e.beta, e.a));
    const Elem c0 = f.add(ctx_->h01d[i], f.mul(ratio, ctx_->h00[i]));
    const Elem c1 = f.add(ctx_->h11d[i], f.mul(ratio, ctx_->h10[i]));
    std::array<Elem, 2> delta{};
    for (std::size_t j = 0; j < 2; ++j) {
        const PolyPair& g = F_.g[j];
        const Elem s0 = f.add(weighted_eval(f, b0, p_deriv(f, g.u), x), weighted_eval(f, c0, g.u, x));
        const Elem s1 = f.add(weighted_eval(f, b1, p_deriv(f, g.v), x), weighted_eval(f, c1, g.v, x));
        delta[j] = f.add(s0, s1);
    }
    return run_pair_step(f, F_, delta, x, scaling_);
}

EdgeRecord KernelC::apply_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    r.der = derivative_iteration(e);
    r.has_der = true;
    return r;
}

EdgeRecord KernelC::apply_gmd_edge(const EdgeMod& e)
{
    EdgeRecord r;
    r.root = root_iteration(e);
    return r;
}

PolyPair KernelC::reconstruct(int j) const
{
    const FieldCtx& f = ctx_->field();
    const PolyPair& fj = F_.g[static_cast<std::size_t>(j)];
    const PolyPair& h0 = ctx_->root.g[0];
    const PolyPair& h1 = ctx_->root.g[1];
    return {p_add(f, p_mul(f, fj.u, h0.u), p_mul(f, fj.v, h1.u)),
            p_add(f, p_mul(f, fj.u, h0.v), p_mul(f, fj.v, h1.v))};
}

Degree KernelC::elp_degree() const { return F_.g[1].v.degree() + ctx_->root.g[1].v.degree(); }

EvalVector KernelC::elp_on_domain() const
{
    EvalVector out(ctx_->points.size());
    for (unsigned e = 0; e < out.size(); ++e)
        out[e] = elp_at(e);
    return out;
}

Elem KernelC::elp_at(unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    const Elem x = ctx_->points[idx];
    const PolyPair& f1 = F_.g[1];
    return f.add(f.mul(p_eval(f, f1.u, x), ctx_->h01[idx]), f.mul(p_eval(f, f1.v, x), ctx_->h11[idx]));
}

Elem KernelC::elp_deriv_at(unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    const Elem x = ctx_->points[idx];
    const PolyPair& f1 = F_.g[1];
    const Elem a = f.add(f.mul(p_eval(f, p_deriv(f, f1.u), x), ctx_->h01[idx]),
                         f.mul(p_eval(f, f1.u, x), ctx_->h01d[idx]));
    const Elem b = f.add(f.mul(p_eval(f, p_deriv(f, f1.v), x), ctx_->h11[idx]),
                         f.mul(p_eval(f, f1.v, x), ctx_->h11d[idx]));
    return f.add(a, b);
}

Elem KernelC::eep_at(unsigned idx) const
{
    const FieldCtx& f = ctx_->field();
    const Elem x = ctx_->points[idx];
    const PolyPair& f1 = F_.g[1];
    return f.add(f.mul(p_eval(f, f1.u, x), ctx_->h00[idx]), f.mul(p_eval(f, f1.v, x), ctx_->h10[idx]));
}

// ----------------------------------------------------------------

const char* kernel_name(KernelKind k)
{
    switch (k) {
    case KernelKind::A:
        return "A";
    case KernelKind::A2:
        return "A2";
    case KernelKind::B:
        return "B";
    case KernelKind::C:
        return "C";
    }
    return "?";
}

KernelKind parse_kernel(std::string_view name)
{
    if (name == "A" || name == "a")
        return KernelKind::A;
    if (name == "A2" || name == "a2")
        return KernelKind::A2;
    if (name == "B" || name == "b")
        return KernelKind::B;
    if (name == "C" || name == "c")
        return KernelKind::C;
    throw std::invalid_argument("unknown kernel '" + std::string(name) + "' (expected A, A2, B or C)");
}

} // namespace gfchase
