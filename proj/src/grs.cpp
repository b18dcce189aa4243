#include "gfchase/grs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gfchase {

GrsCode::GrsCode(std::shared_ptr<const FieldCtx> field, unsigned d, std::vector<Elem> a_tilde)
    : field_(std::move(field)), n_(field_->order()), d_(d), a_(std::move(a_tilde))
{
    if (d_ % 2 == 0)
        throw std::invalid_argument("design distance must be odd, got " + std::to_string(d_));
    if (d_ < 3 || d_ > n_)
        throw std::invalid_argument("design distance must be in [3, n], got " + std::to_string(d_));
    if (a_.empty())
        a_.assign(n_, 1);
    if (a_.size() != n_)
        throw std::invalid_argument("multiplier vector must have length n");
    for (Elem a : a_)
        if (a == 0 || !field_->contains(a))
            throw std::invalid_argument("multipliers must be nonzero field elements");
}

bool Syndrome::is_zero() const
{
    return std::all_of(s.begin(), s.end(), [](Elem x) { return x == 0; });
}

ErrorEstimate ErrorEstimate::from_vector(const GrsCode& code, std::vector<Elem> e)
{
    if (e.size() != code.n())
        throw std::invalid_argument("error vector length mismatch");
    ErrorEstimate est;
    for (unsigned i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
            est.locators.push_back(code.locator(i));
            est.values.push_back(e[i]);
        }
    est.as_vector = std::move(e);
    return est;
}

ErrorEstimate ErrorEstimate::from_pairs(const GrsCode& code, std::vector<Elem> locators,
                                        std::vector<Elem> values)
{
    if (locators.size() != values.size())
        throw std::invalid_argument("locator/value count mismatch");
    ErrorEstimate est;
    est.as_vector.assign(code.n(), 0);
    for (std::size_t k = 0; k < locators.size(); ++k) {
        const unsigned i = code.coordinate(locators[k]);
        if (est.as_vector[i] != 0)
            throw std::invalid_argument("repeated locator");
        if (values[k] == 0)
            throw std::invalid_argument("error values must be nonzero");
        est.as_vector[i] = values[k];
    }
    est.locators = std::move(locators);
    est.values = std::move(values);
    return est;
}

std::vector<Elem> encode(const GrsCode& code, std::span<const Elem> message)
{
    if (message.size() != code.k())
        throw std::invalid_argument("message length must be n-d+1 = " + std::to_string(code.k()));
    const FieldCtx& f = code.field();
    const Poly msg(std::vector<Elem>(message.begin(), message.end()));
    std::vector<Elem> c(code.n());
    for (unsigned i = 0; i < code.n(); ++i) {
        const Elem x = code.locator(i);
        c[i] = f.mul(f.mul(f.inv(code.a_tilde()[i]), x), p_eval(f, msg, x));
    }
    return c;
}

Syndrome syndrome(const GrsCode& code, std::span<const Elem> y)
{
    if (y.size() != code.n())
        throw std::invalid_argument("received word length mismatch");
    const FieldCtx& f = code.field();
    // S(X) coefficients are (a~ . y)(lambda^j): evaluate the twisted word polynomial.
    std::vector<Elem> twisted(code.n());
    for (unsigned i = 0; i < code.n(); ++i)
        twisted[i] = f.mul(code.a_tilde()[i], y[i]);
    const Poly w(std::move(twisted));
    Syndrome s;
    s.s.resize(code.d() - 1);
    for (unsigned j = 0; j + 1 < code.d(); ++j)
        s.s[j] = p_eval(f, w, f.exp(j));
    return s;
}

ElpEep elp_eep_of(const GrsCode& code, const ErrorEstimate& error)
{
    const FieldCtx& f = code.field();
    ElpEep out{Poly::constant(1), Poly()};
    const std::size_t eps = error.locators.size();
    for (std::size_t i = 0; i < eps; ++i)
        out.sigma = p_mul(f, out.sigma, Poly{1, f.neg(error.locators[i])});
    for (std::size_t i = 0; i < eps; ++i) {
        Poly term = Poly::constant(f.mul(error.values[i], code.multiplier(error.locators[i])));
        for (std::size_t j = 0; j < eps; ++j)
            if (j != i)
                term = p_mul(f, term, Poly{1, f.neg(error.locators[j])});
        out.omega = p_add(f, out.omega, term);
    }
    return out;
}

std::vector<Elem> forney_values(const GrsCode& code, const Poly& sigma, const Poly& omega,
                                std::span<const Elem> locators)
{
    const FieldCtx& f = code.field();
    const Poly dsigma = p_deriv(f, sigma);
    std::vector<Elem> values;
    values.reserve(locators.size());
    for (Elem alpha : locators) {
        const Elem x = f.inv(alpha);
        if (p_eval(f, sigma, x) != 0)
            throw DecodeError("locator is not a root of the error locator");
        const Elem den = f.mul(code.multiplier(alpha), p_eval(f, dsigma, x));
        if (den == 0)
            throw DecodeError("error locator derivative vanishes at a root");
        values.push_back(f.neg(f.div(f.mul(alpha, p_eval(f, omega, x)), den)));
    }
    return values;
}

bool syndrome_consistent(const GrsCode& code, const Syndrome& s, const ErrorEstimate& candidate)
{
    if (candidate.as_vector.size() != code.n())
        return false;
    return syndrome(code, candidate.as_vector) == s;
}

} // namespace gfchase
