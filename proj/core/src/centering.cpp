#include "twd/centering.hpp"

#include "twd/fan.hpp"
#include "twd/fm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace twd {

IntVec2 slope_at(const HalfSpacePolytope& p, std::size_t vertex)
{
    return p.facet(vertex).normal - p.facet(vertex + 1).normal;
}

Ray ray_at(const HalfSpacePolytope& p, std::size_t vertex)
{
    IntVec2 s = slope_at(p, vertex);
    IntVec2 dir{-s.y, s.x};
    IntVec2 edges_sum = edge_direction(p.facet(vertex + 1).normal) - edge_direction(p.facet(vertex).normal);
    if (dir != edges_sum)
        throw std::logic_error("ray_at: rotated slope disagrees with edge-vector sum");
    return {facet_intersection(p.facet(vertex), p.facet(vertex + 1)), dir};
}

bool is_centered(const CenterVerdict& v) { return std::holds_alternative<verdict::Centered>(v); }

std::string verdict_name(const CenterVerdict& v)
{
    static const char* names[] = {"centered", "parallel_rays", "three_ray_failure", "no_intersection",
                                  "intersection_outside"};
    return names[v.index()];
}

namespace {

Rational cross(const RatVec2& a, const IntVec2& b) { return a.x * Rational(b.y) - a.y * Rational(b.x); }

RatVec2 point_on(const Ray& r, const Rational& tau)
{
    return {r.base.x + tau * Rational(r.direction.x), r.base.y + tau * Rational(r.direction.y)};
}

bool same_line(const Ray& a, const Ray& b)
{
    RatVec2 d{b.base.x - a.base.x, b.base.y - a.base.y};
    return cross(d, a.direction) == 0;
}

bool on_line(const Ray& r, const RatVec2& c)
{
    return cross(RatVec2{c.x - r.base.x, c.y - r.base.y}, r.direction) == 0;
}

// Parameters (tau_a, tau_b) of the intersection of two non-parallel lines.
std::pair<Rational, Rational> line_params(const Ray& a, const Ray& b)
{
    Rational det(twd::cross(a.direction, b.direction));
    RatVec2 d{b.base.x - a.base.x, b.base.y - a.base.y};
    // a.base + ta da = b.base + tb db
    Rational ta = cross(d, b.direction) / det;
    Rational tb = cross(d, a.direction) / det;
    return {ta, tb};
}

// Parameter interval of the open chord of p along the line of r.
std::pair<std::optional<Rational>, std::optional<Rational>> chord(const HalfSpacePolytope& p, const Ray& r)
{
    std::optional<Rational> lo, hi;
    for (const auto& f : p.facets) {
        // <base + tau d, nu> > offset
        Rational c(dot(r.direction, f.normal));
        Rational rest = f.offset - dot(r.base, f.normal);
        if (c > 0) {
            Rational b = rest / c;
            if (!lo || b > *lo)
                lo = b;
        } else if (c < 0) {
            Rational b = rest / c;
            if (!hi || b < *hi)
                hi = b;
        }
    }
    return {lo, hi};
}

}  // namespace

CenterVerdict center_check(const HalfSpacePolytope& p, const std::vector<std::size_t>& chosen_in)
{
    require_valid(p);
    if (chosen_in.empty())
        throw DomainError("center_check: no vertices chosen");
    std::vector<std::size_t> chosen;
    for (std::size_t v : chosen_in) {
        if (v >= p.size())
            throw DomainError("center_check: vertex " + std::to_string(v) + " out of range");
        if (std::find(chosen.begin(), chosen.end(), v) == chosen.end())
            chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    const std::size_t m = chosen.size();
    std::vector<Ray> rays;
    for (std::size_t v : chosen)
        rays.push_back(ray_at(p, v));
    auto parallel = [&](std::size_t i, std::size_t j) {
        return twd::cross(rays[i].direction, rays[j].direction) == 0;
    };

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (parallel(i, j) && !same_line(rays[i], rays[j]))
                return verdict::ParallelRays{chosen[i], chosen[j]};

    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
            if (parallel(j, k))
                continue;
            auto [tj, tk] = line_params(rays[j], rays[k]);
            if (tj < 0 || tk < 0)
                continue;
            RatVec2 c = point_on(rays[j], tj);
            if (!strictly_inside(p, c))
                continue;
            for (std::size_t i = 0; i < m; ++i)
                if (i != j && i != k && !on_line(rays[i], c))
                    return verdict::ThreeRayFailure{chosen[i], chosen[j], chosen[k]};
        }

    std::optional<RatVec2> common;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (parallel(i, j))
                continue;
            auto [ti, tj] = line_params(rays[i], rays[j]);
            if (ti < 0 || tj < 0)
                return verdict::NoIntersection{chosen[i], chosen[j]};
            if (!common)
                common = point_on(rays[i], ti);
        }

    if (!common) {
        // All rays lie on one line: intersect their half-lines with the open chord.
        const Ray& r0 = rays[0];
        auto [lo, hi] = chord(p, r0);
        for (const Ray& r : rays) {
            Rational tau = r.direction.x != 0 ? (r.base.x - r0.base.x) / Rational(r0.direction.x)
                                              : (r.base.y - r0.base.y) / Rational(r0.direction.y);
            if (r.direction == r0.direction) {
                if (!lo || tau > *lo)
                    lo = tau;
            } else if (!hi || tau < *hi) {
                hi = tau;
            }
        }
        if (!lo || !hi)
            throw std::logic_error("center_check: unbounded chord in a compact polygon");
        RatVec2 c = point_on(r0, (*lo + *hi) / 2);
        if (*lo < *hi && strictly_inside(p, c))
            return verdict::Centered{c};
        return verdict::IntersectionOutside{c};
    }

    const RatVec2& c = *common;
    bool on_all = true;
    for (const Ray& r : rays) {
        if (!on_line(r, c)) {
            on_all = false;
            break;
        }
        Rational tau = r.direction.x != 0 ? (c.x - r.base.x) / Rational(r.direction.x)
                                          : (c.y - r.base.y) / Rational(r.direction.y);
        if (tau < 0) {
            on_all = false;
            break;
        }
    }
    if (on_all && strictly_inside(p, c))
        return verdict::Centered{c};
    return verdict::IntersectionOutside{c};
}

std::optional<RatVec2> lambda_center_criterion(const HalfSpacePolytope& p, const std::vector<std::size_t>& chosen)
{
    require_valid(p);
    std::vector<LinConstraint> cs;
    for (std::size_t v : chosen) {
        if (v >= p.size())
            throw DomainError("lambda_center_criterion: vertex " + std::to_string(v) + " out of range");
        IntVec2 s = slope_at(p, v);
        cs.push_back({{Rational(s.x), Rational(s.y)},
                      LinConstraint::Rel::Eq,
                      p.facet(v + 1).offset - p.facet(v).offset});
    }
    for (const auto& f : p.facets)
        // offset + <t, nu> < 0
        cs.push_back({{Rational(-f.normal.x), Rational(-f.normal.y)}, LinConstraint::Rel::Gt, f.offset});
    auto t = fm_solve(2, cs);
    if (!t)
        return std::nullopt;
    return RatVec2{(*t)[0], (*t)[1]};
}

bool is_monotone(const HalfSpacePolytope& p)
{
    require_valid(p);
    // Unknowns t_x, t_y, mu:  offset + <t, nu> = mu < 0.
    std::vector<LinConstraint> cs;
    for (const auto& f : p.facets)
        cs.push_back({{Rational(f.normal.x), Rational(f.normal.y), Rational(-1)}, LinConstraint::Rel::Eq, -f.offset});
    cs.push_back({{0, 0, -1}, LinConstraint::Rel::Gt, 0});
    return fm_solve(3, cs).has_value();
}

HalfSpacePolytope centered_pair(const IntVec2& s1, const IntVec2& s2)
{
    if (!s1.primitive() || !s2.primitive())
        throw DomainError("centered_pair: slopes must be primitive");
    if (cross(s1, s2) != 1)
        throw DomainError("centered_pair: det(" + to_string(s1) + ", " + to_string(s2) + ") = " +
                          to_string(cross(s1, s2)) + ", expected 1");
    // Monotone one-point blow-up of CP^2; vertices 0 and 1 have slopes (0,-1), (1,0).
    HalfSpacePolytope base{{{{1, 0}, -1}, {{1, 1}, -1}, {{0, 1}, -1}, {{-1, -1}, -1}}};
    UniMat2 G(s2.x, -s1.x, s2.y, -s1.y);
    HalfSpacePolytope out = apply_sl2z(base, G);
    require_valid(out);
    return out;
}

CenteredFamily centered_family(unsigned k)
{
    if (k == 0)
        throw DomainError("centered_family: k must be positive");
    // Offsets decrease fast enough for the required strict inequalities.
    std::vector<Rational> lam(k + 1);
    lam[0] = -1;
    for (unsigned j = 1; j <= k; ++j) {
        int factor = (j == 1 || j == k) ? 2 : 3;
        lam[j] = factor * lam[j - 1] - 1;
    }
    Rational last = Rational(k) * lam[k] - 1;

    CenteredFamily out;
    auto& fs = out.polytope.facets;
    fs.push_back({{1, 0}, lam[0]});
    fs.push_back({{1, 1}, lam[0]});
    out.vertices.push_back(0);
    for (unsigned j = 1; j < k; ++j) {
        fs.push_back({{2, Int(2 * j + 1)}, lam[j]});
        fs.push_back({{1, Int(j + 1)}, lam[j]});
        out.vertices.push_back(fs.size() - 2);
    }
    fs.push_back({{1, Int(k + 1)}, lam[k]});
    fs.push_back({{0, 1}, lam[k]});
    out.vertices.push_back(fs.size() - 2);
    fs.push_back({{-1, 0}, last});
    fs.push_back({{0, -1}, lam[0]});
    out.vertices.push_back(fs.size() - 1);
    require_valid(out.polytope);
    return out;
}

namespace {

// Self-intersection numbers read off a regular fan.
std::vector<Int> fan_self_intersections(const Fan2D& f)
{
    const std::size_t n = f.rays.size();
    std::vector<Int> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntVec2 s = f.rays[(k + n - 1) % n] + f.rays[(k + 1) % n];
        const IntVec2& nu = f.rays[k];
        d[k] = nu.x != 0 ? Int(-s.x / nu.x) : Int(-s.y / nu.y);
    }
    return d;
}

// Offsets for `fan` making each chosen vertex centered at the origin, if any.
std::optional<std::vector<Rational>> solve_offsets(const Fan2D& fan, const std::vector<std::size_t>& chosen)
{
    const std::size_t n = fan.rays.size();
    auto d = fan_self_intersections(fan);
    std::vector<LinConstraint> cs;
    for (std::size_t v : chosen) {
        LinConstraint eq{std::vector<Rational>(n), LinConstraint::Rel::Eq, 0};
        eq.coeffs[v] = 1;
        eq.coeffs[(v + 1) % n] = -1;
        cs.push_back(eq);
    }
    for (std::size_t k = 0; k < n; ++k) {
        LinConstraint neg{std::vector<Rational>(n), LinConstraint::Rel::Gt, 0};
        neg.coeffs[k] = -1;
        cs.push_back(neg);
        // Lattice length of edge k: -(lam_{k-1} + d_k lam_k + lam_{k+1}) > 0.
        LinConstraint len{std::vector<Rational>(n), LinConstraint::Rel::Gt, 0};
        len.coeffs[(k + n - 1) % n] -= 1;
        len.coeffs[k] -= Rational(d[k]);
        len.coeffs[(k + 1) % n] -= 1;
        cs.push_back(len);
    }
    return fm_solve(n, cs);
}

// Calls visit(assignment) for every injective choice of vertices with the
// requested slopes, in lexicographic order; stops when visit returns true.
template <class F>
bool for_each_assignment(const std::vector<IntVec2>& vertex_slopes, const std::vector<IntVec2>& slopes, F&& visit)
{
    std::vector<std::size_t> pick(slopes.size());
    std::vector<bool> used(vertex_slopes.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == slopes.size())
            return visit(pick);
        for (std::size_t v = 0; v < vertex_slopes.size(); ++v) {
            if (used[v] || vertex_slopes[v] != slopes[i])
                continue;
            // Equal requested slopes take increasing vertices to avoid repeats.
            if (i > 0 && slopes[i - 1] == slopes[i] && v < pick[i - 1])
                continue;
            used[v] = true;
            pick[i] = v;
            if (self(self, i + 1))
                return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::optional<CenteredWitness> search_centered(const std::vector<IntVec2>& slopes_in, unsigned budget)
{
    if (slopes_in.empty())
        return std::nullopt;
    for (const auto& s : slopes_in)
        if (!s.primitive())
            throw DomainError("search_centered: " + to_string(s) + " is not primitive");
    // Group equal slopes next to each other, keeping first-appearance order.
    std::vector<IntVec2> slopes;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < slopes_in.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            seen = seen || slopes_in[j] == slopes_in[i];
        if (seen)
            continue;
        for (std::size_t j = i; j < slopes_in.size(); ++j)
            if (slopes_in[j] == slopes_in[i]) {
                slopes.push_back(slopes_in[j]);
                origin.push_back(j);
            }
    }
    // Parallel rays can never be centered; skip the search entirely.
    for (std::size_t i = 0; i < slopes.size(); ++i)
        for (std::size_t j = i + 1; j < slopes.size(); ++j)
            if (cross(slopes[i], slopes[j]) == 0 && slopes[i] != -slopes[j])
                return std::nullopt;

    Fan2D start = fan_of(realize_slopes(slopes_in));
    std::deque<Fan2D> queue{start};
    std::set<std::vector<std::pair<std::string, std::string>>> seen;
    auto key = [](const Fan2D& f) {
        std::vector<std::pair<std::string, std::string>> k;
        for (const auto& r : f.rays)
            k.emplace_back(to_string(r.x), to_string(r.y));
        return k;
    };
    seen.insert(key(start));
    unsigned solved = 0;
    std::optional<CenteredWitness> found;
    while (!queue.empty() && solved < budget && !found) {
        Fan2D fan = std::move(queue.front());
        queue.pop_front();
        const std::size_t n = fan.rays.size();
        std::vector<IntVec2> vslopes(n);
        for (std::size_t k = 0; k < n; ++k)
            vslopes[k] = fan.rays[k] - fan.rays[(k + 1) % n];
        for_each_assignment(vslopes, slopes, [&](const std::vector<std::size_t>& pick) {
            if (solved >= budget)
                return true;
            ++solved;
            auto lam = solve_offsets(fan, pick);
            if (!lam)
                return false;
            HalfSpacePolytope p;
            for (std::size_t k = 0; k < n; ++k)
                p.facets.push_back({fan.rays[k], (*lam)[k]});
            CenterVerdict v = center_check(p, pick);
            if (!is_centered(v))
                throw std::logic_error("search_centered: offsets do not give a centered polygon");
            CenteredWitness w{p, std::vector<std::size_t>(slopes_in.size()), std::get<verdict::Centered>(v).point};
            for (std::size_t i = 0; i < pick.size(); ++i)
                w.vertices[origin[i]] = pick[i];
            found = std::move(w);
            return true;
        });
        for (std::size_t k = 0; k < n && !found; ++k) {
            Fan2D b;
            for (std::size_t j = 0; j < n; ++j) {
                b.rays.push_back(fan.rays[j]);
                if (j == k)
                    b.rays.push_back(fan.rays[k] + fan.rays[(k + 1) % n]);
            }
            if (seen.insert(key(b)).second)
                queue.push_back(std::move(b));
        }
    }
    return found;
}

}  // namespace twd
