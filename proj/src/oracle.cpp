#include "gfchase/oracle.hpp"

#include <string>

namespace gfchase::oracle {

namespace {

void check_size(const GrsCode& code, int deg_cap)
{
    if (code.field().q() > max_field_size)
        throw OracleError("oracle limited to q <= " + std::to_string(max_field_size));
    if (deg_cap < 0 || deg_cap > max_degree_cap)
        throw OracleError("oracle degree cap must be in [0, " + std::to_string(max_degree_cap) + "]");
}

// Column of a monomial in increasing <_{-1} order:
// (0,1) < (1,0) < (0,X) < (X,0) < ...
std::size_t col_v(int k) { return 2 * static_cast<std::size_t>(k); }
std::size_t col_u(int k) { return 2 * static_cast<std::size_t>(k) + 1; }

// One row per linear condition on the coefficient vector.
std::vector<std::vector<Elem>> constraint_rows(const GrsCode& code, const Syndrome& s, const TestPattern& pattern,
                                               int cap)
{
    const FieldCtx& f = code.field();
    const std::size_t ncols = 2 * static_cast<std::size_t>(cap + 1);
    std::vector<std::vector<Elem>> rows;
    const int two_t = static_cast<int>(code.d() - 1);
    for (int j = 0; j < two_t; ++j) {
        std::vector<Elem> r(ncols, 0);
        if (j <= cap)
            r[col_u(j)] = 1;
        for (int i = 0; i <= std::min(j, cap); ++i)
            r[col_v(i)] = f.add(r[col_v(i)], s.s[static_cast<std::size_t>(j - i)]);
        rows.push_back(std::move(r));
    }
    for (const PatternEntry& p : pattern) {
        const Elem alpha = code.locator(p.coord);
        const Elem x = f.inv(alpha);
        const Elem ba = f.mul(p.beta, code.a_tilde()[p.coord]);
        std::vector<Elem> root(ncols, 0);
        std::vector<Elem> der(ncols, 0);
        for (int i = 0; i <= cap; ++i) {
            root[col_v(i)] = f.pow(x, static_cast<std::uint64_t>(i));
            if (i >= 1)
                der[col_v(i)] = f.times_int(f.mul(ba, f.pow(x, static_cast<std::uint64_t>(i - 1))),
                                            static_cast<std::uint64_t>(i));
            der[col_u(i)] = f.mul(alpha, f.pow(x, static_cast<std::uint64_t>(i)));
        }
        rows.push_back(std::move(root));
        rows.push_back(std::move(der));
    }
    return rows;
}

PolyPair from_columns(const std::vector<Elem>& x, int cap)
{
    std::vector<Elem> u(static_cast<std::size_t>(cap + 1)), v(static_cast<std::size_t>(cap + 1));
    for (int k = 0; k <= cap; ++k) {
        v[static_cast<std::size_t>(k)] = x[col_v(k)];
        u[static_cast<std::size_t>(k)] = x[col_u(k)];
    }
    return {Poly(std::move(u)), Poly(std::move(v))};
}

PolyPair normalized(const FieldCtx& f, const PolyPair& p)
{
    const Monomial2 m = lm_w(p, -1);
    const Elem lead = m.side == Side::Left ? p.u.leading() : p.v.leading();
    return pp_scale(f, p, f.inv(lead));
}

} // namespace

PolyPair brute_min_module_element(const GrsCode& code, const Syndrome& s, const TestPattern& pattern, int deg_cap)
{
    check_size(code, deg_cap);
    const FieldCtx& f = code.field();
    auto rows = constraint_rows(code, s, pattern, deg_cap);
    const std::size_t ncols = 2 * static_cast<std::size_t>(deg_cap + 1);

    // Forward elimination in column order; the first column that is not a
    // pivot is the smallest leading monomial of a solution.
    std::vector<std::size_t> pivot_row_of(ncols, SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        std::size_t r = next_row;
        while (r < rows.size() && rows[r][c] == 0)
            ++r;
        if (r == rows.size()) {
            std::vector<Elem> x(ncols, 0);
            x[c] = 1;
            for (std::size_t cc = c; cc-- > 0;) {
                const auto& row = rows[pivot_row_of[cc]];
                Elem acc = 0;
                for (std::size_t k = cc + 1; k <= c; ++k)
                    acc = f.add(acc, f.mul(row[k], x[k]));
                x[cc] = f.neg(f.div(acc, row[cc]));
            }
            return normalized(f, from_columns(x, deg_cap));
        }
        std::swap(rows[r], rows[next_row]);
        const auto& piv = rows[next_row];
        for (std::size_t rr = next_row + 1; rr < rows.size(); ++rr) {
            if (rows[rr][c] == 0)
                continue;
            const Elem k = f.div(rows[rr][c], piv[c]);
            for (std::size_t cc = c; cc < ncols; ++cc)
                rows[rr][cc] = f.sub(rows[rr][cc], f.mul(k, piv[cc]));
        }
        pivot_row_of[c] = next_row++;
    }
    throw OracleError("no nonzero module element within degree cap " + std::to_string(deg_cap));
}

PolyPair enumerate_min_module_element(const GrsCode& code, const Syndrome& s, const TestPattern& pattern,
                                      int deg_cap)
{
    check_size(code, deg_cap);
    const FieldCtx& f = code.field();
    const auto rows = constraint_rows(code, s, pattern, deg_cap);
    const std::size_t ncols = 2 * static_cast<std::size_t>(deg_cap + 1);
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < ncols; ++c) {
        total *= f.q();
        if (total > max_enumeration)
            throw OracleError("literal enumeration too large; lower the degree cap");
    }

    std::optional<PolyPair> best;
    std::vector<Elem> x(ncols, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t c = 0; c < ncols; ++c) {
            x[c] = static_cast<Elem>(rest % f.q());
            rest /= f.q();
        }
        bool ok = true;
        for (const auto& row : rows) {
            Elem acc = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                acc = f.add(acc, f.mul(row[c], x[c]));
            if (acc != 0) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        const PolyPair p = normalized(f, from_columns(x, deg_cap));
        if (!best) {
            best = p;
            continue;
        }
        const auto cmp = compare_w(lm_w(p, -1), lm_w(*best, -1), -1);
        if (cmp == std::strong_ordering::less)
            best = p;
        else if (cmp == std::strong_ordering::equal && !(p == *best))
            throw OracleError("minimal leading monomial attained by independent elements");
    }
    if (!best)
        throw OracleError("no nonzero module element within degree cap " + std::to_string(deg_cap));
    return *best;
}

std::optional<ErrorEstimate> hd_decode(const GrsCode& code, std::span<const Elem> y)
{
    const FieldCtx& f = code.field();
    const Syndrome s = syndrome(code, y);
    if (s.is_zero())
        return ErrorEstimate::from_vector(code, std::vector<Elem>(code.n(), 0));
    const GroebnerPairBasis G = solve_key_equation(code, s);
    const Poly& sigma = G.g[1].v;
    const Poly& omega = G.g[1].u;
    if (sigma.is_zero() || sigma.degree() > Degree(static_cast<int>(code.t())))
        return std::nullopt;
    std::vector<Elem> locators;
    for (unsigned i = 0; i < code.n(); ++i)
        if (p_eval(f, sigma, f.inv(code.locator(i))) == 0)
            locators.push_back(code.locator(i));
    if (static_cast<int>(locators.size()) != sigma.degree().value())
        return std::nullopt;
    std::vector<Elem> values;
    try {
        values = forney_values(code, sigma, omega, locators);
    } catch (const DecodeError&) {
        return std::nullopt;
    }
    for (Elem v : values)
        if (v == 0)
            return std::nullopt;
    auto est = ErrorEstimate::from_pairs(code, std::move(locators), std::move(values));
    if (!syndrome_consistent(code, s, est))
        return std::nullopt;
    return est;
}

namespace {

void naive_rec(const GrsCode& code, std::span<const Elem> y, const ChaseInput& input, unsigned r_max,
               unsigned from_slot, TestPattern& pat, CandidateList& out)
{
    const FieldCtx& f = code.field();
    if (pat.empty()) {
        if (auto e = hd_decode(code, y))
            out.add({*e, pat});
    } else {
        std::vector<Elem> z(y.begin(), y.end());
        for (const auto& p : pat)
            z[p.coord] = f.sub(z[p.coord], p.beta);
        if (auto e = hd_decode(code, z)) {
            bool disjoint = true;
            for (const auto& p : pat)
                disjoint = disjoint && e->as_vector[p.coord] == 0;
            if (disjoint && e->weight() == code.t()) {
                std::vector<Elem> full = e->as_vector;
                for (const auto& p : pat)
                    full[p.coord] = p.beta;
                out.add({ErrorEstimate::from_vector(code, std::move(full)), pat});
            }
        }
    }
    if (pat.size() == r_max)
        return;
    for (unsigned slot = from_slot; slot < input.coords.size(); ++slot) {
        for (Elem b : input.hypotheses[slot]) {
            pat.push_back({slot, input.coords[slot], b});
            naive_rec(code, y, input, r_max, slot + 1, pat, out);
            pat.pop_back();
        }
    }
}

} // namespace

CandidateList naive_chase(const GrsCode& code, std::span<const Elem> y, const ChaseInput& input, unsigned r_max)
{
    CandidateList out;
    TestPattern pat;
    naive_rec(code, y, input, r_max, 0, pat, out);
    return out;
}

Elem naive_truncated_eval(const FieldCtx& f, std::span<const Elem> S, const Poly& v, Elem beta, unsigned two_t)
{
    const Poly Sp(std::vector<Elem>(S.begin(), S.end()));
    return p_eval(f, p_truncate(p_mul(f, Sp, v), two_t), beta);
}

} // namespace gfchase::oracle
