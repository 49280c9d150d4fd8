#include "twd/fan.hpp"

#include "twd/fm.hpp"

#include <algorithm>
#include <map>

namespace twd {

bool Fan2D::is_complete() const
{
    if (rays.size() < 3)
        return false;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (cross(rays[k], rays[(k + 1) % rays.size()]) <= 0)
            return false;
    // Convex consecutive cones must wind exactly once.
    for (std::size_t k = 0; k + 1 < rays.size(); ++k)
        if (!angle_less_from(rays[0], rays[k], rays[k + 1]))
            return false;
    return true;
}

bool Fan2D::is_regular() const
{
    if (rays.size() < 3)
        return false;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (cross(rays[k], rays[(k + 1) % rays.size()]) != 1)
            return false;
    return true;
}

namespace {

const IntVec2 kAxes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::size_t find_ray(const std::vector<IntVec2>& rays, const IntVec2& v)
{
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (rays[k] == v)
            return k;
    return rays.size();
}

}  // namespace

Fan2D complete_fan(const std::vector<IntVec2>& vectors)
{
    if (vectors.empty())
        throw DomainError("complete_fan: no vectors given");
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!vectors[i].primitive())
            throw DomainError("complete_fan: " + to_string(vectors[i]) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (vectors[i] == vectors[j])
                throw DomainError("complete_fan: duplicate vector " + to_string(vectors[i]));
    }
    const IntVec2 start = vectors.front();
    std::vector<IntVec2> rays = vectors;

    if (rays.size() == 1) {
        // Image of the standard triangle fan under [[a,q],[b,p]], ap - bq = 1.
        const Int& a = start.x;
        const Int& b = start.y;
        Bezout bz = bezout(a, b);
        Int p = bz.p, q = -bz.q;
        rays = {start, {q, p}, {-a - q, -b - p}};
    }
    auto sort_rays = [&] {
        std::sort(rays.begin(), rays.end(),
                  [&](const IntVec2& u, const IntVec2& v) { return angle_less_from(start, u, v); });
    };
    sort_rays();

    // Split non-convex gaps with the counterclockwise-last axis vector that
    // still makes a strictly convex cone with the gap's first ray.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            const IntVec2 w = rays[k];
            const IntVec2 z = rays[(k + 1) % rays.size()];
            if (rays.size() > 1 && cross(w, z) > 0)
                continue;
            const IntVec2* pick = nullptr;
            for (const IntVec2& e : kAxes) {
                if (cross(w, e) <= 0)
                    continue;
                if (!pick || angle_less_from(w, *pick, e))
                    pick = &e;
            }
            rays.push_back(*pick);
            sort_rays();
            changed = true;
            break;
        }
    }

    // Convex non-basis cones: add the primitive lattice points of the
    // spanned triangle in counterclockwise order.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            const IntVec2 w = rays[k];
            const IntVec2 z = rays[(k + 1) % rays.size()];
            if (cross(w, z) == 1)
                continue;
            TriangleCensus c = triangle_lattice_census(w, z);
            for (const IntVec2& p : c.primitive_points)
                if (p != w && p != z && find_ray(rays, p) == rays.size())
                    rays.push_back(p);
            sort_rays();
            changed = true;
            break;
        }
    }
    return {rays};
}

Fan2D blow_up_chain(const Fan2D& fan, const IntVec2& s, unsigned N)
{
    std::size_t k = find_ray(fan.rays, s);
    if (k == fan.rays.size())
        throw DomainError("blow_up_chain: " + to_string(s) + " is not a ray of the fan");
    if (!fan.is_complete() || !fan.is_regular())
        throw DomainError("blow_up_chain: fan is not complete and regular");
    const IntVec2 u = fan.rays[(k + 1) % fan.rays.size()];
    Fan2D out;
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        out.rays.push_back(fan.rays[j]);
        if (j == k)
            for (unsigned m = N; m >= 1; --m)
                out.rays.push_back(Int(m) * s + u);
    }
    return out;
}

HalfSpacePolytope polytope_from_fan(const Fan2D& fan)
{
    if (!fan.is_complete() || !fan.is_regular())
        throw DomainError("polytope_from_fan: fan is not complete and regular");
    const std::size_t n = fan.rays.size();
    std::vector<LinConstraint> cs;
    LinConstraint ex{std::vector<Rational>(n), LinConstraint::Rel::Eq, 0};
    LinConstraint ey = ex;
    for (std::size_t k = 0; k < n; ++k) {
        ex.coeffs[k] = Rational(fan.rays[k].x);
        ey.coeffs[k] = Rational(fan.rays[k].y);
        LinConstraint pos{std::vector<Rational>(n), LinConstraint::Rel::Ge, 1};
        pos.coeffs[k] = 1;
        cs.push_back(pos);
    }
    cs.push_back(ex);
    cs.push_back(ey);
    auto w = fm_solve(n, cs);
    if (!w)
        throw std::logic_error("polytope_from_fan: no closing weights for a complete fan");
    Int l = 1;
    for (const Rational& r : *w) {
        const Int& d = boost::multiprecision::denominator(r);
        l = l / gcd(l, d) * d;
    }
    // Walk the boundary from vertex n-1, placed at the origin.
    HalfSpacePolytope p;
    RatVec2 v{0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        Rational len = (*w)[k] * Rational(l);
        IntVec2 e = edge_direction(fan.rays[k]);
        p.facets.push_back({fan.rays[k], dot(v, fan.rays[k])});
        v = {v.x + len * Rational(e.x), v.y + len * Rational(e.y)};
    }
    require_valid(p);
    return p;
}

HalfSpacePolytope realize_slopes(const std::vector<IntVec2>& slopes)
{
    if (slopes.empty())
        throw DomainError("realize_slopes: empty slope multiset");
    std::vector<IntVec2> distinct;
    std::map<std::size_t, unsigned> mult;
    for (const IntVec2& s : slopes) {
        if (!s.primitive())
            throw DomainError("realize_slopes: " + to_string(s) + " is not primitive");
        std::size_t k = find_ray(distinct, s);
        if (k == distinct.size())
            distinct.push_back(s);
        ++mult[k];
    }
    Fan2D fan = complete_fan(distinct);
    for (std::size_t k = 0; k < distinct.size(); ++k)
        fan = blow_up_chain(fan, distinct[k], mult[k]);
    return polytope_from_fan(fan);
}

Fan2D fan_of(const HalfSpacePolytope& p)
{
    Fan2D f;
    for (const auto& fc : p.facets)
        f.rays.push_back(fc.normal);
    return f;
}

}  // namespace twd
