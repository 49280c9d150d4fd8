#pragma once

#include "twd/lattice.hpp"

#include <optional>
#include <vector>

namespace twd {

/// One linear constraint  coeffs . x  (rel)  rhs.
struct LinConstraint {
    enum class Rel { Ge, Gt, Eq };
    std::vector<Rational> coeffs;
    Rel rel = Rel::Ge;
    Rational rhs;
};

/// Exact rational feasibility by Gaussian elimination of the equalities
/// followed by Fourier-Motzkin elimination. Returns a witness when the system
/// is feasible; the witness is chosen deterministically (midpoints of the
/// admissible interval, unit steps past one-sided bounds).
std::optional<std::vector<Rational>> fm_solve(std::size_t nvars, const std::vector<LinConstraint>& cs);

}  // namespace twd
