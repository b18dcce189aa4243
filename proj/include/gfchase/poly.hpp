#pragma once

#include "gfchase/gf.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gfchase {

// Polynomial degree with an explicit state for the zero polynomial.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr Degree(int d) : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const { return !finite_; }
    // Only meaningful when finite.
    constexpr int value() const { return value_; }
    // Finite value, or `fallback` for the zero polynomial.
    constexpr int value_or(int fallback) const { return finite_ ? value_ : fallback; }

    friend constexpr Degree operator+(Degree a, Degree b)
    {
        if (!a.finite_ || !b.finite_)
            return minus_infinity();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b)
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b)
    {
        if (!a.finite_ || !b.finite_)
            return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() : finite_(false), value_(0) {}
    bool finite_;
    int value_;
};

// Dense polynomial, coefficient i is the coefficient of X^i. Never stores
// trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);
    Poly(std::initializer_list<Elem> coeffs);

    static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
    static Poly monomial(Elem c, int degree);

    Degree degree() const
    {
        return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1);
    }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of X^i, zero beyond the degree.
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    std::span<const Elem> coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Elem> c_;
};

using EvalVector = std::vector<Elem>;

Poly p_add(const FieldCtx& f, const Poly& a, const Poly& b);
Poly p_sub(const FieldCtx& f, const Poly& a, const Poly& b);
Poly p_mul(const FieldCtx& f, const Poly& a, const Poly& b);
// Every coefficient multiplied by c; one multiplication per coefficient.
Poly p_scale(const FieldCtx& f, const Poly& p, Elem c);
// (X - root) * p with deg(p)+1 multiplications.
Poly p_mul_linear(const FieldCtx& f, const Poly& p, Elem root);
Poly p_deriv(const FieldCtx& f, const Poly& p);
// Horner; exactly deg(p) multiplications for nonzero p.
Elem p_eval(const FieldCtx& f, const Poly& p, Elem x);
// Entry i is p(lambda^{-i}), i = 0..q-2.
EvalVector p_eval_domain(const FieldCtx& f, const Poly& p);
// The vector lambda^{-i}, i = 0..q-2.
EvalVector domain_points(const FieldCtx& f);
// p mod X^k.
Poly p_truncate(const Poly& p, std::size_t k);

std::string to_string(const Poly& p);

} // namespace gfchase
