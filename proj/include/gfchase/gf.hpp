#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gfchase {

using Elem = std::uint32_t;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Multiplication/addition tally. Inverses come from a table and are free;
// a division is one multiplication.
struct OpCounter {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;

    void reset() { mults = adds = 0; }
};

// Installs a counter for the current thread for the lifetime of the scope.
// Nested scopes restore the outer counter on exit.
class CountScope {
public:
    explicit CountScope(OpCounter& c);
    ~CountScope();
    CountScope(const CountScope&) = delete;
    CountScope& operator=(const CountScope&) = delete;

private:
    OpCounter* prev_;
};

namespace detail {
OpCounter*& active_counter();

inline void count_mult(std::uint64_t k = 1)
{
    if (auto* c = active_counter())
        c->mults += k;
}
inline void count_add(std::uint64_t k = 1)
{
    if (auto* c = active_counter())
        c->adds += k;
}
} // namespace detail

// GF(2^m), 3 <= m <= 16, as exp/log tables over a fixed primitive element.
class FieldCtx {
public:
    FieldCtx(unsigned m, std::uint32_t prim_poly);

    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return q_ - 1; }
    std::uint32_t prim_poly() const { return prim_poly_; }
    unsigned characteristic() const { return 2; }
    // Chosen primitive element; the class of X unless that is not primitive.
    Elem lambda() const { return lambda_; }
    // Discrete log base lambda, a != 0.
    std::uint32_t log(Elem a) const;
    // lambda^k for any integer k.
    Elem exp(std::int64_t k) const;

    Elem add(Elem a, Elem b) const
    {
        detail::count_add();
        return a ^ b;
    }
    Elem sub(Elem a, Elem b) const { return add(a, b); }
    Elem neg(Elem a) const { return a; }

    Elem mul(Elem a, Elem b) const
    {
        detail::count_mult();
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw FieldError("inverse of zero");
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const
    {
        if (b == 0)
            throw FieldError("division by zero");
        detail::count_mult();
        if (a == 0)
            return 0;
        return exp_[log_[a] + order() - log_[b]];
    }
    // Square-and-multiply; every squaring and multiplication is counted.
    Elem pow(Elem a, std::uint64_t e) const;

    // n * a for an integer n (repeated addition, uncounted).
    Elem times_int(Elem a, std::uint64_t n) const { return (n & 1u) ? a : 0; }

    bool contains(Elem a) const { return a < q_; }

private:
    unsigned m_;
    std::uint32_t q_;
    std::uint32_t prim_poly_;
    Elem lambda_ = 2;
    std::vector<Elem> exp_; // length 2(q-1), doubled to avoid a modulo
    std::vector<std::uint32_t> log_;
    std::vector<Elem> inv_;
};

// Standard primitive polynomials for m = 3..16.
std::uint32_t default_prim_poly(unsigned m);

// True iff the bit-mask polynomial of degree m has no factor of degree <= m/2.
bool is_irreducible(std::uint32_t poly, unsigned m);

} // namespace gfchase
