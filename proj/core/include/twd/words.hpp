#pragma once

#include "twd/lattice.hpp"

#include <string>
#include <vector>

namespace twd {

/// One passage through a 1-handle; sign +1 or -1.
struct Letter {
    std::size_t handle = 0;
    int sign = 1;
    friend bool operator==(const Letter& a, const Letter& b) { return a.handle == b.handle && a.sign == b.sign; }
};

/// Cyclic word of handle passages. On T^2, handle 0 is B and handle 1 is C.
struct CurveWord {
    std::vector<Letter> letters;
    int offset = 0;  ///< parallel-copy index

    /// Signed passage count through each of `handles` handles.
    std::vector<Int> exponent_sums(std::size_t handles) const;
    friend bool operator==(const CurveWord& a, const CurveWord& b)
    {
        return a.letters == b.letters && a.offset == b.offset;
    }
};

/// "B+ C-" on T^2 (two handles), "H1+ H2-" otherwise.
std::string to_string(const CurveWord& w, std::size_t handles = 2);
/// Inverse of to_string; throws DomainError on unknown tokens.
CurveWord parse_curve_word(const std::string& s, std::size_t handles = 2);

/// Edge-crossing sequence of the straight line of slope (a,b) on the unit
/// square, cut at x = 1/2 and started at height 1/2 + eps.
CurveWord torus_word(const Int& a, const Int& b);

/// Group presentation with relators as syllable lists (generator, exponent).
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<std::pair<std::size_t, Int>>> relators;

    /// Relation matrix of the abelianization (generators x relators).
    IntMatrix abelianization() const;
    std::string to_string() const;
};

}  // namespace twd
