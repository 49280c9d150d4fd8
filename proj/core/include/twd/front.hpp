#pragma once

#include "twd/lattice.hpp"
#include "twd/words.hpp"

#include <string>
#include <vector>

namespace twd {

/// Closed surface: genus-g orientable, or a connected sum of `genus` RP^2's.
struct Ambient {
    unsigned genus = 1;
    bool orientable = true;

    /// 2g for orientable surfaces, n for #n RP^2.
    std::size_t handle_count() const { return orientable ? 2 * genus : genus; }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

enum class EventKind { LeftCusp, RightCusp, Crossing, Wall };
enum class WallSide { Left, Right };

/// One column of the front, acting on the strand stack (position 0 on top).
/// A left cusp inserts two strands at `pos`, a right cusp joins the strands
/// at pos and pos+1, a crossing swaps them. A wall covers `count` strands
/// starting at `pos`.
struct Event {
    EventKind kind = EventKind::Crossing;
    std::size_t pos = 0;
    std::size_t handle = 0;
    WallSide side = WallSide::Left;
    std::size_t count = 0;

    static Event lcusp(std::size_t p) { return {EventKind::LeftCusp, p}; }
    static Event rcusp(std::size_t p) { return {EventKind::RightCusp, p}; }
    static Event crossing(std::size_t p) { return {EventKind::Crossing, p}; }
    static Event wall(std::size_t h, WallSide s, std::size_t p, std::size_t n)
    {
        return {EventKind::Wall, p, h, s, n};
    }
    friend bool operator==(const Event&, const Event&) = default;
};

/// Orientation of a component, given by one of its segments. Segments are
/// numbered in creation order (left wall strands, then cusp branches, upper
/// branch first); direction +1 runs left to right.
struct OrientationSeed {
    std::size_t segment = 0;
    int direction = 1;
    friend bool operator==(const OrientationSeed&, const OrientationSeed&) = default;
};

struct ComponentInfo {
    std::string label;
    OrientationSeed seed;
    friend bool operator==(const ComponentInfo&, const ComponentInfo&) = default;
};

/// Legendrian front in Gompf standard form. All left walls come first in
/// handle order, all right walls last; strand j of a right wall is glued to
/// strand j of the same handle's left wall.
struct FrontDiagram {
    Ambient ambient;
    std::size_t handles = 0;
    std::vector<Event> events;
    std::vector<ComponentInfo> components;
    friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

struct FrontReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

FrontReport validate(const FrontDiagram& d);
void require_valid(const FrontDiagram& d);

struct SegmentInfo {
    std::size_t component = 0;
    int direction = 1;
};

struct CrossingInfo {
    std::size_t event = 0;
    std::size_t upper = 0;  ///< segment at pos before the crossing; it moves down
    std::size_t lower = 0;
};

struct FrontAnalysis {
    std::vector<SegmentInfo> segments;
    std::vector<CrossingInfo> crossings;
    std::vector<std::size_t> right_cusps;  ///< component of each right cusp
    /// Passage words per component, read from the orientation seed.
    std::vector<CurveWord> words;
    /// letter_seeds[c][k] starts the trace of component c at its letter k.
    std::vector<std::vector<OrientationSeed>> letter_seeds;
    /// Stack of segment ids just before each event, plus the final stack.
    std::vector<std::vector<std::size_t>> stacks;
};

/// Traces segments into components. Throws DomainError on malformed input.
FrontAnalysis analyze(const FrontDiagram& d);

/// Crossing sign: product of the two strand directions.
int crossing_sign(const FrontAnalysis& a, const CrossingInfo& c);

Int writhe_of(const FrontDiagram& d, std::size_t component);
Int right_cusps_of(const FrontDiagram& d, std::size_t component);
/// writhe - right cusps.
Int tb_of(const FrontDiagram& d, std::size_t component);
/// Sum of crossing signs between two distinct components.
Int signed_crossings(const FrontDiagram& d, std::size_t c1, std::size_t c2);

/// phi[h][c]: signed passages of component c through handle h.
IntMatrix passage_matrix(const FrontDiagram& d);

struct ClosedFrontDiagram {
    FrontDiagram diagram;           ///< no walls
    std::vector<Int> framings;      ///< per component of `diagram`
    std::size_t original_components = 0;
};

/// Each 1-handle becomes a 0-framed unknot around its strands; strand ends
/// are joined by nested arcs over the top. Original components keep their
/// indices and get framing tb - 1.
ClosedFrontDiagram canonical_closure(const FrontDiagram& d);

/// Framings on the diagonal, half the signed crossing count elsewhere.
IntMatrix linking_matrix(const ClosedFrontDiagram& cd);

struct XHomology {
    AbelianGroup H1, H2;
    Presentation pi1;
};

/// Handlebody homology from the passage matrix: H1 = coker, H2 = ker.
XHomology homology_X(const FrontDiagram& d);

struct BoundaryHomology {
    AbelianGroup H1, H2;
};

BoundaryHomology boundary_homology(const ClosedFrontDiagram& cd);

/// Pushes every left cusp as far left and every right cusp as far right as
/// the walls and nested cusps allow, inserting a cancelling crossing pair
/// whenever a cusp passes a neighbouring crossing.
FrontDiagram hoist_cusps(const FrontDiagram& d);

/// Removes cancelling crossing pairs next to cusps (the inverse of the
/// pairs created by hoist_cusps), until none is left.
FrontDiagram remove_bigons(const FrontDiagram& d);

std::size_t crossing_count(const FrontDiagram& d);

}  // namespace twd
