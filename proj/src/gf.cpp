#include "gfchase/gf.hpp"

#include <bit>
#include <string>

namespace gfchase {

namespace detail {
OpCounter*& active_counter()
{
    thread_local OpCounter* counter = nullptr;
    return counter;
}
} // namespace detail

CountScope::CountScope(OpCounter& c) : prev_(detail::active_counter())
{
    detail::active_counter() = &c;
}

CountScope::~CountScope() { detail::active_counter() = prev_; }

namespace {

unsigned bit_degree(std::uint64_t p) { return p ? 63u - std::countl_zero(p) : 0; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b)
{
    const unsigned db = bit_degree(b);
    while (a && bit_degree(a) >= db)
        a ^= b << (bit_degree(a) - db);
    return a;
}

} // namespace

bool is_irreducible(std::uint32_t poly, unsigned m)
{
    if (bit_degree(poly) != m || (poly & 1u) == 0)
        return false;
    // Trial division by every polynomial of degree 1..m/2.
    for (unsigned d = 1; d <= m / 2; ++d)
        for (std::uint64_t f = (1ull << d); f < (2ull << d); ++f)
            if (poly_mod(poly, f) == 0)
                return false;
    return true;
}

std::uint32_t default_prim_poly(unsigned m)
{
    static constexpr std::uint32_t table[] = {
        0,       0,       0,
        0xB,     // x^3+x+1
        0x13,    // x^4+x+1
        0x25,    // x^5+x^2+1
        0x43,    // x^6+x+1
        0x89,    // x^7+x^3+1
        0x11D,   // x^8+x^4+x^3+x^2+1
        0x211,   // x^9+x^4+1
        0x409,   // x^10+x^3+1
        0x805,   // x^11+x^2+1
        0x1053,  // x^12+x^6+x^4+x+1
        0x201B,  // x^13+x^4+x^3+x+1
        0x4443,  // x^14+x^10+x^6+x+1
        0x8003,  // x^15+x+1
        0x1100B, // x^16+x^12+x^3+x+1
    };
    if (m < 3 || m > 16)
        throw FieldError("extension degree must be in [3,16], got " + std::to_string(m));
    return table[m];
}

FieldCtx::FieldCtx(unsigned m, std::uint32_t prim_poly)
    : m_(m), q_(1u << m), prim_poly_(prim_poly)
{
    if (m < 3 || m > 16)
        throw FieldError("extension degree must be in [3,16], got " + std::to_string(m));
    if (!is_irreducible(prim_poly, m))
        throw FieldError("polynomial " + std::to_string(prim_poly) + " is not irreducible of degree " +
                         std::to_string(m));

    auto mulmod = [&](std::uint32_t a, std::uint32_t b) {
        std::uint64_t r = 0;
        for (std::uint64_t x = a; b; b >>= 1, x <<= 1)
            if (b & 1u)
                r ^= x;
        return static_cast<std::uint32_t>(poly_mod(r, prim_poly));
    };
    auto order_of = [&](std::uint32_t g) {
        std::uint32_t x = g;
        std::uint32_t k = 1;
        while (x != 1) {
            x = mulmod(x, g);
            ++k;
        }
        return k;
    };

    lambda_ = 2;
    if (order_of(lambda_) != q_ - 1) {
        for (lambda_ = 3; lambda_ < q_; ++lambda_)
            if (order_of(lambda_) == q_ - 1)
                break;
    }

    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    inv_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        exp_[k] = x;
        log_[x] = k;
        x = mulmod(x, lambda_);
    }
    for (std::uint32_t k = n; k < 2 * n; ++k)
        exp_[k] = exp_[k - n];
    for (std::uint32_t a = 1; a < q_; ++a)
        inv_[a] = exp_[(n - log_[a]) % n];
}

std::uint32_t FieldCtx::log(Elem a) const
{
    if (a == 0 || a >= q_)
        throw FieldError("log of zero or out-of-range element");
    return log_[a];
}

Elem FieldCtx::exp(std::int64_t k) const
{
    const std::int64_t n = order();
    return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    Elem acc = a;
    for (int bit = 62 - std::countl_zero(e); bit >= 0; --bit) {
        acc = mul(acc, acc);
        if ((e >> bit) & 1u)
            acc = mul(acc, a);
    }
    return acc;
}

} // namespace gfchase
