#include "twd/fm.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace twd {

namespace {

struct Ineq {
    std::vector<Rational> a;  // a . x  >= b  (or > b when strict)
    Rational b;
    bool strict = false;
};

// Scale so that the first nonzero coefficient has absolute value 1, for
// deduplication.
void normalize(Ineq& q)
{
    for (const Rational& c : q.a)
        if (c != 0) {
            Rational s = c < 0 ? Rational(-c) : c;
            for (Rational& v : q.a)
                v /= s;
            q.b /= s;
            return;
        }
}

bool trivial(const Ineq& q)
{
    return std::all_of(q.a.begin(), q.a.end(), [](const Rational& c) { return c == 0; });
}

bool constant_ok(const Ineq& q) { return q.strict ? (0 > q.b) : (0 >= q.b); }

using Key = std::tuple<std::vector<Rational>, Rational, bool>;

void push_unique(std::vector<Ineq>& out, std::set<Key>& seen, Ineq q)
{
    normalize(q);
    Key k{q.a, q.b, q.strict};
    if (seen.insert(k).second)
        out.push_back(std::move(q));
}

}  // namespace

std::optional<std::vector<Rational>> fm_solve(std::size_t n, const std::vector<LinConstraint>& cs)
{
    // Equalities: reduced row echelon form, recording pivots for back-substitution.
    std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
    std::vector<Ineq> ineqs;
    for (const auto& c : cs) {
        if (c.coeffs.size() != n)
            throw DomainError("fm_solve: coefficient count mismatch");
        if (c.rel == LinConstraint::Rel::Eq)
            eqs.emplace_back(c.coeffs, c.rhs);
        else
            ineqs.push_back({c.coeffs, c.rhs, c.rel == LinConstraint::Rel::Gt});
    }

    std::vector<std::pair<std::size_t, std::pair<std::vector<Rational>, Rational>>> pivots;
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        auto& [a, b] = eqs[r];
        std::size_t p = n;
        for (std::size_t j = 0; j < n; ++j)
            if (a[j] != 0) {
                p = j;
                break;
            }
        if (p == n) {
            if (b != 0)
                return std::nullopt;
            continue;
        }
        Rational s = a[p];
        for (auto& v : a)
            v /= s;
        b /= s;
        auto eliminate = [&](std::vector<Rational>& a2, Rational& b2) {
            if (a2[p] == 0)
                return;
            Rational f = a2[p];
            for (std::size_t j = 0; j < n; ++j)
                a2[j] -= f * a[j];
            b2 -= f * b;
        };
        for (std::size_t r2 = r + 1; r2 < eqs.size(); ++r2)
            eliminate(eqs[r2].first, eqs[r2].second);
        for (auto& [pv, e] : pivots)
            eliminate(e.first, e.second);
        for (auto& q : ineqs)
            eliminate(q.a, q.b);
        pivots.push_back({p, {a, b}});
    }
    std::vector<bool> pivot_var(n, false);
    for (auto& [p, e] : pivots)
        pivot_var[p] = true;

    // Fourier-Motzkin over the free variables, keeping every stage.
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot_var[j])
            order.push_back(j);

    std::vector<std::vector<Ineq>> stages;
    {
        std::vector<Ineq> cur;
        std::set<Key> seen;
        for (auto& q : ineqs) {
            if (trivial(q)) {
                if (!constant_ok(q))
                    return std::nullopt;
                continue;
            }
            push_unique(cur, seen, q);
        }
        stages.push_back(std::move(cur));
    }
    for (std::size_t v : order) {
        const auto& cur = stages.back();
        std::vector<Ineq> next, lo, hi;
        std::set<Key> seen;
        for (const auto& q : cur) {
            if (q.a[v] > 0)
                lo.push_back(q);
            else if (q.a[v] < 0)
                hi.push_back(q);
            else
                push_unique(next, seen, q);
        }
        for (const auto& l : lo)
            for (const auto& h : hi) {
                // l: a_v x_v + rest_l >= b_l ; h: a_v' x_v + rest_h >= b_h (a_v' < 0)
                Rational fl = -h.a[v], fh = l.a[v];
                Ineq c;
                c.a.resize(n);
                for (std::size_t j = 0; j < n; ++j)
                    c.a[j] = fl * l.a[j] + fh * h.a[j];
                c.a[v] = 0;
                c.b = fl * l.b + fh * h.b;
                c.strict = l.strict || h.strict;
                if (trivial(c)) {
                    if (!constant_ok(c))
                        return std::nullopt;
                    continue;
                }
                push_unique(next, seen, std::move(c));
            }
        stages.push_back(std::move(next));
    }
    for (const auto& q : stages.back())
        if (!constant_ok(q))
            return std::nullopt;

    // Back-substitution: the last eliminated variable is chosen first.
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t v = order[k];
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& q : stages[k]) {
            if (q.a[v] == 0)
                continue;
            Rational rest = q.b;
            for (std::size_t j = 0; j < n; ++j)
                if (j != v && q.a[j] != 0)
                    rest -= q.a[j] * x[j];
            Rational bound = rest / q.a[v];
            if (q.a[v] > 0) {
                if (!lo || bound > *lo || (bound == *lo && q.strict)) {
                    lo = bound;
                    lo_strict = q.strict;
                }
            } else {
                if (!hi || bound < *hi || (bound == *hi && q.strict)) {
                    hi = bound;
                    hi_strict = q.strict;
                }
            }
        }
        Rational val;
        if (lo && hi) {
            if (*lo == *hi && !lo_strict && !hi_strict)
                val = *lo;
            else
                val = (*lo + *hi) / 2;
        } else if (lo) {
            val = lo_strict ? Rational(*lo + 1) : *lo;
        } else if (hi) {
            val = hi_strict ? Rational(*hi - 1) : *hi;
        } else {
            val = 0;
        }
        x[v] = val;
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        auto& [p, e] = pivots[r];
        Rational val = e.second;
        for (std::size_t j = 0; j < n; ++j)
            if (j != p && e.first[j] != 0)
                val -= e.first[j] * x[j];
        x[p] = val;
    }

    // Defensive verification of the witness.
    for (const auto& c : cs) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j)
            lhs += c.coeffs[j] * x[j];
        bool ok = c.rel == LinConstraint::Rel::Eq ? lhs == c.rhs
                : c.rel == LinConstraint::Rel::Gt ? lhs > c.rhs
                                                  : lhs >= c.rhs;
        if (!ok)
            throw std::logic_error("fm_solve: witness failed verification");
    }
    return x;
}

}  // namespace twd
