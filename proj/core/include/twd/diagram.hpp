#pragma once

#include "twd/front.hpp"
#include "twd/lattice.hpp"
#include "twd/words.hpp"

#include <vector>

namespace twd {

struct DiagramOptions {
    /// Cancel crossing pairs next to cusps after the cusps are hoisted.
    bool bigon_removal = true;
    /// Use the simplified front for slopes with a < 0. When false, those
    /// components carry the two extra twists and the double pass that the
    /// simplification removes.
    bool move6 = true;
};

/// Standard-form diagram of the disk cotangent bundle: handle_count()
/// 1-handles and the single 2-handle attached along the base curve.
FrontDiagram gompf_base(const Ambient& F);

/// Base diagram plus one component per word, in input order. On T^2 a word
/// that is a rotation of torus_word(a, b) gets the band front of slope
/// (a, b); any other valid word is routed generically.
FrontDiagram generate_diagram(const Ambient& F, const std::vector<CurveWord>& words,
                              const DiagramOptions& opt = {});

/// T^2 shorthand: one torus word per slope.
FrontDiagram generate_diagram(const std::vector<IntVec2>& slopes, const DiagramOptions& opt = {});

/// tb of the component with the two extra twists and double pass of the
/// unsimplified front, for a < 0 <= b: -2b^2 - 3|ab| + 2a^2 - 2|a|.
Int tb_before_move6(const Int& a, const Int& b);

/// True when w is a cyclic rotation of v (offsets ignored).
bool is_rotation(const CurveWord& w, const CurveWord& v);

}  // namespace twd
