#pragma once

#include "twd/lattice.hpp"
#include "twd/polytope.hpp"

#include <vector>

namespace twd {

struct Fan2D {
    std::vector<IntVec2> rays;  ///< counterclockwise

    bool is_complete() const;
    bool is_regular() const;
    friend bool operator==(const Fan2D& a, const Fan2D& b) { return a.rays == b.rays; }
};

/// Complete regular fan containing `vectors`, listed counterclockwise from
/// the first input vector.
Fan2D complete_fan(const std::vector<IntVec2>& vectors);

/// Inserts j*s + u (j = 1..N) after s, where u is the ray following s.
Fan2D blow_up_chain(const Fan2D& fan, const IntVec2& s, unsigned N);

/// Delzant polygon whose facet normals are exactly the fan rays in order.
HalfSpacePolytope polytope_from_fan(const Fan2D& fan);

/// Delzant polygon with at least N_i vertices of slope s_i for each
/// requested slope (with multiplicity).
HalfSpacePolytope realize_slopes(const std::vector<IntVec2>& slopes);

/// Fan of normals of a polytope.
Fan2D fan_of(const HalfSpacePolytope& p);

}  // namespace twd
