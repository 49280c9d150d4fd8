#pragma once

#include "twd/centering.hpp"
#include "twd/lattice.hpp"
#include "twd/polytope.hpp"
#include "twd/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twd {

using SlopeSet = std::vector<IntVec2>;

/// Polytope together with the vertices whose nodes are smoothed.
struct SmoothingSpec {
    HalfSpacePolytope polytope;
    std::vector<std::size_t> smoothed;
};

/// Validates the polytope and returns the smoothed vertices sorted and
/// deduplicated. Throws DomainError on out-of-range indices.
std::vector<std::size_t> normalized_vertices(const SmoothingSpec& spec);

SlopeSet slopes_of(const SmoothingSpec& spec);

struct WHomology {
    AbelianGroup H1;
    AbelianGroup H2;
    Presentation pi1;
};

/// 2 x (n+1) matrix: a zero column for the base 2-handle, then the slopes.
IntMatrix slope_matrix(const SlopeSet& c);
WHomology homology_W(const SlopeSet& c);

/// tb of the normalized attaching sphere for slope (a,b).
Int tb_formula(const Int& a, const Int& b);

/// Some G with G.c1 = c2 as multisets, or nullopt when no such G exists.
std::optional<UniMat2> sl2z_equivalent(const SlopeSet& c1, const SlopeSet& c2);

struct DivisorComponents {
    std::vector<std::vector<std::size_t>> components;  ///< edge indices, in boundary order
    IntMatrix Q;
    std::vector<Rational> areas;
};

/// Components are listed by the unsmoothed vertex at which they start.
DivisorComponents divisor_components(const SmoothingSpec& spec);

struct ConcaveResult {
    bool admits = false;
    std::vector<Rational> z;  ///< positive solution when admits
    /// The unique solution of Qz = a when Q is nonsingular.
    std::optional<std::vector<Rational>> affine_solution;
};

ConcaveResult concave_obstruction(const IntMatrix& Q, const std::vector<Rational>& a);

enum class Exactness { WeinsteinCentered, NotExact, Inconclusive };

struct ExactnessVerdict {
    Exactness kind = Exactness::Inconclusive;
    int case_number = 0;  ///< 1..4 for the failure cases, 0 when centered
    std::optional<RatVec2> center;
    CenterVerdict rays;
    std::string reason;
    std::optional<ConcaveResult> concave;
};

std::string exactness_name(Exactness e);
ExactnessVerdict exactness_verdict(const SmoothingSpec& spec);

}  // namespace twd
