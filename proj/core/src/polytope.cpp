#include "twd/polytope.hpp"

#include <optional>

namespace twd {

IntVec2 edge_direction(const IntVec2& n) { return {n.y, -n.x}; }

RatVec2 facet_intersection(const Facet& f, const Facet& g)
{
    Int det = cross(f.normal, g.normal);
    if (det == 0)
        throw DomainError("parallel facets have no vertex");
    Rational d(det);
    const IntVec2& u = g.normal;
    const IntVec2& v = f.normal;
    return {(f.offset * Rational(u.y) - g.offset * Rational(v.y)) / d,
            (g.offset * Rational(v.x) - f.offset * Rational(u.x)) / d};
}

namespace {

// Ratio r with   delta = r * dir   (dir nonzero), or nullopt if not parallel.
std::optional<Rational> ratio_along(const RatVec2& delta, const IntVec2& dir)
{
    if (delta.x * Rational(dir.y) != delta.y * Rational(dir.x))
        return std::nullopt;
    return dir.x != 0 ? delta.x / Rational(dir.x) : delta.y / Rational(dir.y);
}

}  // namespace

ValidationReport validate(const HalfSpacePolytope& p)
{
    ValidationReport r;
    const std::size_t n = p.size();
    if (n < 3) {
        r.violations.push_back("polytope needs at least 3 facets");
        return r;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (!p.facets[k].normal.primitive())
            r.violations.push_back("facet " + std::to_string(k) + ": normal " +
                                   to_string(p.facets[k].normal) + " is not primitive");
    if (!r.ok())
        return r;

    // Counterclockwise order with exactly one turn around the origin.
    const IntVec2& first = p.facets[0].normal;
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!angle_less_from(first, p.facets[k].normal, p.facets[k + 1].normal))
            r.violations.push_back("facet " + std::to_string(k + 1) +
                                   ": normals are not in counterclockwise order");
    for (std::size_t k = 0; k < n; ++k) {
        const IntVec2& a = p.facets[k].normal;
        const IntVec2& b = p.facets[(k + 1) % n].normal;
        Int det = cross(a, b);
        if (det <= 0)
            r.violations.push_back("vertex " + std::to_string(k) + ": normals " + to_string(a) + ", " +
                                   to_string(b) + " do not turn counterclockwise");
        else if (det != 1)
            r.violations.push_back("vertex " + std::to_string(k) + ": smoothness fails, det(" +
                                   to_string(a) + ", " + to_string(b) + ") = " + to_string(det));
    }
    if (!r.ok())
        return r;

    std::vector<RatVec2> vs(n);
    for (std::size_t k = 0; k < n; ++k)
        vs[k] = facet_intersection(p.facets[k], p.facets[(k + 1) % n]);
    for (std::size_t k = 0; k < n; ++k) {
        RatVec2 delta{vs[k].x - vs[(k + n - 1) % n].x, vs[k].y - vs[(k + n - 1) % n].y};
        auto len = ratio_along(delta, edge_direction(p.facets[k].normal));
        if (!len || *len <= 0)
            r.violations.push_back("facet " + std::to_string(k) + ": edge has non-positive length");
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || j == (k + 1) % n)
                continue;
            if (dot(vs[k], p.facets[j].normal) <= p.facets[j].offset) {
                r.violations.push_back("vertex " + std::to_string(k) + ": violates facet " +
                                       std::to_string(j) + " (not strictly inside)");
                break;
            }
        }
    return r;
}

void require_valid(const HalfSpacePolytope& p)
{
    auto r = validate(p);
    if (r.ok())
        return;
    std::string msg = "invalid polytope:";
    for (const auto& v : r.violations)
        msg += " " + v + ";";
    throw DomainError(msg);
}

std::vector<Vertex> vertices(const HalfSpacePolytope& p)
{
    require_valid(p);
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < p.size(); ++k)
        out.push_back({k, facet_intersection(p.facet(k), p.facet(k + 1))});
    return out;
}

std::vector<Int> self_intersections(const HalfSpacePolytope& p)
{
    require_valid(p);
    const std::size_t n = p.size();
    std::vector<Int> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntVec2 s = p.facet(k + n - 1).normal + p.facet(k + 1).normal;
        const IntVec2& nu = p.facet(k).normal;
        // s = -d nu
        Int dk = nu.x != 0 ? Int(-s.x / nu.x) : Int(-s.y / nu.y);
        if (s.x != -dk * nu.x || s.y != -dk * nu.y)
            throw std::logic_error("self_intersections: neighbour relation has no integer solution");
        d[k] = dk;
    }
    return d;
}

std::vector<Edge> edges(const HalfSpacePolytope& p)
{
    auto vs = vertices(p);
    auto d = self_intersections(p);
    const std::size_t n = p.size();
    std::vector<Edge> out;
    for (std::size_t k = 0; k < n; ++k) {
        const RatVec2& a = vs[(k + n - 1) % n].position;
        const RatVec2& b = vs[k].position;
        auto len = ratio_along({b.x - a.x, b.y - a.y}, edge_direction(p.facets[k].normal));
        out.push_back({k, a, b, *len, d[k]});
    }
    return out;
}

HalfSpacePolytope apply_sl2z(const HalfSpacePolytope& p, const UniMat2& G)
{
    HalfSpacePolytope q;
    for (const auto& f : p.facets)
        q.facets.push_back({G.apply(f.normal), f.offset});
    return q;
}

HalfSpacePolytope translate(const HalfSpacePolytope& p, const RatVec2& t)
{
    HalfSpacePolytope q;
    for (const auto& f : p.facets)
        q.facets.push_back({f.normal, f.offset + dot(t, f.normal)});
    return q;
}

HalfSpacePolytope blow_up(const HalfSpacePolytope& p, std::size_t vertex, const Rational& eps)
{
    require_valid(p);
    if (eps <= 0)
        throw DomainError("blow_up: size must be positive");
    const std::size_t n = p.size();
    const std::size_t k = vertex % n;
    const Facet& f = p.facet(k);
    const Facet& g = p.facet(k + 1);
    HalfSpacePolytope q;
    for (std::size_t j = 0; j < n; ++j) {
        q.facets.push_back(p.facets[j]);
        if (j == k)
            q.facets.push_back({f.normal + g.normal, f.offset + g.offset + eps});
    }
    if (!validate(q).ok())
        throw DomainError("blow_up: size " + to_string(eps) + " too large at vertex " + std::to_string(k));
    return q;
}

bool strictly_inside(const HalfSpacePolytope& p, const RatVec2& x)
{
    for (const auto& f : p.facets)
        if (dot(x, f.normal) <= f.offset)
            return false;
    return true;
}

namespace polytopes {

HalfSpacePolytope cp2(const Rational& side)
{
    return {{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -side}}};
}

HalfSpacePolytope cp1xcp1(const Rational& a, const Rational& b)
{
    return {{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -a}, {{0, -1}, -b}}};
}

}  // namespace polytopes

}  // namespace twd
