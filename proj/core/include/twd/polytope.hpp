#pragma once

#include "twd/lattice.hpp"

#include <string>
#include <vector>

namespace twd {

struct Facet {
    IntVec2 normal;  ///< primitive inward normal
    Rational offset;  ///< the facet is { x : <x, normal> >= offset }
    friend bool operator==(const Facet& a, const Facet& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Polygon  { x : <x, nu_k> >= lambda_k }, facets listed counterclockwise.
struct HalfSpacePolytope {
    std::vector<Facet> facets;

    std::size_t size() const { return facets.size(); }
    const Facet& facet(std::size_t k) const { return facets[k % facets.size()]; }
    friend bool operator==(const HalfSpacePolytope& a, const HalfSpacePolytope& b)
    {
        return a.facets == b.facets;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Vertex k is the corner where facet k meets facet k+1 (indices mod n).
struct Vertex {
    std::size_t index = 0;
    RatVec2 position;
};

/// Edge k lies on facet k and runs from vertex k-1 to vertex k.
struct Edge {
    std::size_t facet = 0;
    RatVec2 start;
    RatVec2 end;
    Rational lattice_length;
    Int self_intersection;
};

ValidationReport validate(const HalfSpacePolytope& p);
/// Throws DomainError listing the violations if p is not a valid Delzant polygon.
void require_valid(const HalfSpacePolytope& p);

/// Intersection of the lines of two facets; the normals must be independent.
RatVec2 facet_intersection(const Facet& f, const Facet& g);

std::vector<Vertex> vertices(const HalfSpacePolytope& p);
std::vector<Edge> edges(const HalfSpacePolytope& p);
std::vector<Int> self_intersections(const HalfSpacePolytope& p);

/// Primitive direction of edge k traversed counterclockwise.
IntVec2 edge_direction(const IntVec2& normal);

HalfSpacePolytope apply_sl2z(const HalfSpacePolytope& p, const UniMat2& G);
HalfSpacePolytope translate(const HalfSpacePolytope& p, const RatVec2& t);
/// Cuts vertex `vertex` by a new facet with normal nu_k + nu_{k+1} whose
/// edge has lattice length eps.
HalfSpacePolytope blow_up(const HalfSpacePolytope& p, std::size_t vertex, const Rational& eps);

/// Strict interior test.
bool strictly_inside(const HalfSpacePolytope& p, const RatVec2& x);

namespace polytopes {

/// Triangle with normals (1,0),(0,1),(-1,-1) and side length `side`.
HalfSpacePolytope cp2(const Rational& side = 1);
/// Rectangle [0,a] x [0,b].
HalfSpacePolytope cp1xcp1(const Rational& a, const Rational& b);

}  // namespace polytopes

}  // namespace twd
