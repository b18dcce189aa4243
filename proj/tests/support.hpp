#pragma once

#include "gfchase/channel.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace gfchase;

inline std::shared_ptr<const FieldCtx> field(unsigned m)
{
    return std::make_shared<const FieldCtx>(m, default_prim_poly(m));
}

inline GrsCode code(unsigned m, unsigned d, std::vector<Elem> a = {}) { return GrsCode(field(m), d, std::move(a)); }

inline Elem nonzero(const FieldCtx& f, std::mt19937_64& rng)
{
    return std::uniform_int_distribution<Elem>(1, f.q() - 1)(rng);
}

inline Elem any(const FieldCtx& f, std::mt19937_64& rng)
{
    return std::uniform_int_distribution<Elem>(0, f.q() - 1)(rng);
}

inline std::vector<Elem> random_multipliers(const FieldCtx& f, std::mt19937_64& rng)
{
    std::vector<Elem> a(f.order());
    for (auto& x : a)
        x = nonzero(f, rng);
    return a;
}

inline std::vector<unsigned> shuffled_coords(unsigned n, std::mt19937_64& rng)
{
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<Elem> random_codeword(const GrsCode& c, std::mt19937_64& rng)
{
    std::vector<Elem> msg(c.k());
    for (auto& x : msg)
        x = any(c.field(), rng);
    return encode(c, msg);
}

inline std::vector<Elem> add(const FieldCtx& f, std::span<const Elem> a, std::span<const Elem> b)
{
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = f.add(a[i], b[i]);
    return out;
}

// A received word with eps errors, r_on_I of them inside I with the true
// value among the mu hypotheses of their slot; the other slots of I are
// error-free with random hypotheses.
struct Planted {
    std::vector<Elem> codeword;
    std::vector<Elem> error;
    std::vector<Elem> y;
    ChaseInput input;
};

inline Planted plant(const GrsCode& c, unsigned r_on_I, unsigned eps, unsigned eta, std::mt19937_64& rng,
                     unsigned mu = 1)
{
    const FieldCtx& f = c.field();
    Planted p;
    p.codeword = random_codeword(c, rng);
    p.error.assign(c.n(), 0);
    const auto perm = shuffled_coords(c.n(), rng);
    for (unsigned k = 0; k < eta; ++k) {
        const unsigned coord = perm[k];
        p.input.coords.push_back(coord);
        std::vector<Elem> hyps{nonzero(f, rng)};
        while (hyps.size() < mu) {
            const Elem x = nonzero(f, rng);
            if (std::find(hyps.begin(), hyps.end(), x) == hyps.end())
                hyps.push_back(x);
        }
        if (k < r_on_I)
            p.error[coord] = hyps[0];
        if (mu > 1)
            std::shuffle(hyps.begin(), hyps.end(), rng);
        p.input.hypotheses.push_back(std::move(hyps));
    }
    for (unsigned k = 0; k + r_on_I < eps; ++k)
        p.error[perm[eta + k]] = nonzero(f, rng);
    // Slots in random order so the correct ones are not always first.
    std::vector<std::size_t> order(eta);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    ChaseInput shuffled;
    for (auto k : order) {
        shuffled.coords.push_back(p.input.coords[k]);
        shuffled.hypotheses.push_back(p.input.hypotheses[k]);
    }
    p.input = std::move(shuffled);
    p.y = add(f, p.codeword, p.error);
    return p;
}

// Pattern for the correct (coordinate, value) pairs of `error` on I, in slot order.
inline TestPattern correct_pattern(const Planted& p)
{
    TestPattern pat;
    for (unsigned s = 0; s < p.input.coords.size(); ++s) {
        const unsigned c = p.input.coords[s];
        const auto& a = p.input.hypotheses[s];
        if (p.error[c] != 0 && std::find(a.begin(), a.end(), p.error[c]) != a.end())
            pat.push_back({s, c, p.error[c]});
    }
    return pat;
}

// u * k == v for some nonzero k.
inline bool proportional(const FieldCtx& f, const Poly& u, const Poly& v)
{
    if (u.degree() != v.degree())
        return false;
    if (u.is_zero())
        return true;
    const Elem k = f.div(v.leading(), u.leading());
    return p_scale(f, u, k) == v;
}

inline bool proportional(const FieldCtx& f, const PolyPair& a, const PolyPair& b)
{
    // One common scalar for both components.
    const Poly& ra = a.v.is_zero() ? a.u : a.v;
    const Poly& rb = a.v.is_zero() ? b.u : b.v;
    if (ra.is_zero() || rb.is_zero() || ra.degree() != rb.degree())
        return a.is_zero() && b.is_zero();
    const Elem k = f.div(rb.leading(), ra.leading());
    return pp_scale(f, a, k) == b;
}

} // namespace testsupport
