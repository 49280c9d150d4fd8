#pragma once

#include "twd/lattice.hpp"
#include "twd/polytope.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace twd {

/// Half-line  base + tau * direction,  tau >= 0.
struct Ray {
    RatVec2 base;
    IntVec2 direction;
};

/// Difference nu_k - nu_{k+1} of the inward normals meeting at vertex k.
IntVec2 slope_at(const HalfSpacePolytope& p, std::size_t vertex);
/// Ray from vertex k along the sum of its two primitive edge vectors.
Ray ray_at(const HalfSpacePolytope& p, std::size_t vertex);

namespace verdict {

struct Centered {
    RatVec2 point;
};
/// Two rays on distinct parallel (or antiparallel) lines.
struct ParallelRays {
    std::size_t i, j;
};
/// Rays j and k meet at an interior point that is off the line of ray i.
struct ThreeRayFailure {
    std::size_t i, j, k;
};
/// Two non-parallel rays whose half-lines do not meet.
struct NoIntersection {
    std::size_t i, j;
};
struct IntersectionOutside {
    RatVec2 point;
};

}  // namespace verdict

using CenterVerdict = std::variant<verdict::Centered, verdict::ParallelRays, verdict::ThreeRayFailure,
                                   verdict::NoIntersection, verdict::IntersectionOutside>;

bool is_centered(const CenterVerdict& v);
/// "centered", "parallel_rays", "three_ray_failure", "no_intersection", "intersection_outside".
std::string verdict_name(const CenterVerdict& v);

/// Classifies the rays of the chosen vertices. Failure modes are reported
/// in the fixed priority parallel > three-ray > non-meeting > outside.
CenterVerdict center_check(const HalfSpacePolytope& p, const std::vector<std::size_t>& chosen);

/// Translation t such that translate(p, t) has equal offsets on both facets
/// of every chosen vertex and all offsets negative.
std::optional<RatVec2> lambda_center_criterion(const HalfSpacePolytope& p,
                                               const std::vector<std::size_t>& chosen);

bool is_monotone(const HalfSpacePolytope& p);

/// Blown-up square mapped by SL(2,Z) so that vertices 0 and 1 have slopes
/// s1 and s2 and are centered. Requires det(s1, s2) = 1.
HalfSpacePolytope centered_pair(const IntVec2& s1, const IntVec2& s2);

struct CenteredFamily {
    HalfSpacePolytope polytope;
    std::vector<std::size_t> vertices;  ///< slopes (0,-1),(1,1),...,(1,k),(-1,-1)
};
CenteredFamily centered_family(unsigned k);

struct CenteredWitness {
    HalfSpacePolytope polytope;
    std::vector<std::size_t> vertices;  ///< in the order of the requested slopes
    RatVec2 center;
};

/// Bounded search for a Delzant polygon centered at vertices with the
/// requested slopes. `budget` caps the number of linear systems solved.
/// nullopt only means that no witness was found within the budget.
std::optional<CenteredWitness> search_centered(const std::vector<IntVec2>& slopes, unsigned budget = 64);

}  // namespace twd
