#include "gfchase/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gfchase {

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(Elem c, int degree)
{
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly p_add(const FieldCtx& f, const Poly& a, const Poly& b)
{
    std::vector<Elem> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(a[i], b[i]);
    return Poly(std::move(out));
}

Poly p_sub(const FieldCtx& f, const Poly& a, const Poly& b)
{
    std::vector<Elem> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.sub(a[i], b[i]);
    return Poly(std::move(out));
}

Poly p_mul(const FieldCtx& f, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Elem> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return Poly(std::move(out));
}

Poly p_scale(const FieldCtx& f, const Poly& p, Elem c)
{
    std::vector<Elem> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = f.mul(p[i], c);
    return Poly(std::move(out));
}

Poly p_mul_linear(const FieldCtx& f, const Poly& p, Elem root)
{
    if (p.is_zero())
        return {};
    std::vector<Elem> out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] = f.add(out[i + 1], p[i]);
        out[i] = f.sub(out[i], f.mul(root, p[i]));
    }
    return Poly(std::move(out));
}

Poly p_deriv(const FieldCtx& f, const Poly& p)
{
    if (p.size() <= 1)
        return {};
    std::vector<Elem> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        out[i - 1] = f.times_int(p[i], i);
    return Poly(std::move(out));
}

Elem p_eval(const FieldCtx& f, const Poly& p, Elem x)
{
    if (p.is_zero())
        return 0;
    Elem acc = p.leading();
    for (std::size_t i = p.size() - 1; i-- > 0;)
        acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

EvalVector domain_points(const FieldCtx& f)
{
    EvalVector pts(f.order());
    for (std::uint32_t i = 0; i < f.order(); ++i)
        pts[i] = f.exp(-static_cast<std::int64_t>(i));
    return pts;
}

EvalVector p_eval_domain(const FieldCtx& f, const Poly& p)
{
    EvalVector out(f.order());
    for (std::uint32_t i = 0; i < f.order(); ++i)
        out[i] = p_eval(f, p, f.exp(-static_cast<std::int64_t>(i)));
    return out;
}

Poly p_truncate(const Poly& p, std::size_t k)
{
    auto c = p.coeffs();
    return Poly(std::vector<Elem>(c.begin(), c.begin() + std::min(k, c.size())));
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || p[i] != 1)
            os << p[i];
        if (i > 0)
            os << (p[i] != 1 ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

} // namespace gfchase
