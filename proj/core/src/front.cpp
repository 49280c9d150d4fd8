#include "twd/front.hpp"

#include <optional>
#include <stdexcept>

namespace twd {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct End {
    std::size_t seg = npos;
    bool right = false;
    std::size_t handle = npos;  ///< set when the link is a wall passage
};

struct Sim {
    std::vector<std::string> errors;
    std::vector<End> left, right;  // partner of each segment end
    std::vector<std::vector<std::size_t>> stacks;
    std::vector<std::pair<std::size_t, std::size_t>> crossings;  // (event, upper), lower from stack
    std::vector<std::size_t> crossing_lower;
    std::vector<std::size_t> rcusp_seg;
    std::size_t nseg = 0;
};

std::size_t new_segment(Sim& s)
{
    s.left.emplace_back();
    s.right.emplace_back();
    return s.nseg++;
}

void link(Sim& s, std::size_t a, bool ar, std::size_t b, bool br, std::size_t h = npos)
{
    (ar ? s.right[a] : s.left[a]) = {b, br, h};
    (br ? s.right[b] : s.left[b]) = {a, ar, h};
}

std::string at(std::size_t e) { return "event " + std::to_string(e) + ": "; }

Sim simulate(const FrontDiagram& d)
{
    Sim s;
    auto fail = [&](std::string m) { s.errors.push_back(std::move(m)); };
    const std::size_t H = d.handles;
    if (H != 0 && H != d.ambient.handle_count())
        fail("ambient surface has " + std::to_string(d.ambient.handle_count()) + " 1-handles, diagram declares " +
             std::to_string(H));
    if (d.ambient.genus == 0 && !d.ambient.orientable)
        fail("non-orientable surface needs at least one RP^2 summand");

    std::vector<std::size_t> stack;
    std::vector<std::size_t> counts(H, 0);
    std::vector<std::vector<std::size_t>> left_wall(H);
    const std::size_t n = d.events.size();
    std::size_t e = 0;
    for (std::size_t h = 0; h < H; ++h, ++e) {
        if (e >= n || d.events[e].kind != EventKind::Wall || d.events[e].side != WallSide::Left ||
            d.events[e].handle != h) {
            fail(at(e) + "expected left wall of handle " + std::to_string(h));
            return s;
        }
        s.stacks.push_back(stack);
        const Event& w = d.events[e];
        if (w.pos != stack.size()) {
            fail(at(e) + "left wall position " + std::to_string(w.pos) + " is not " + std::to_string(stack.size()));
            return s;
        }
        counts[h] = w.count;
        for (std::size_t j = 0; j < w.count; ++j) {
            std::size_t g = new_segment(s);
            stack.push_back(g);
            left_wall[h].push_back(g);
        }
    }
    std::size_t body_end = n;
    if (H > 0) {
        if (n < 2 * H) {
            fail("missing right walls");
            return s;
        }
        body_end = n - H;
    }
    for (; e < body_end; ++e) {
        const Event& ev = d.events[e];
        s.stacks.push_back(stack);
        const std::size_t p = ev.pos;
        switch (ev.kind) {
        case EventKind::Wall:
            fail(at(e) + "wall inside the diagram body");
            return s;
        case EventKind::LeftCusp: {
            if (p > stack.size()) {
                fail(at(e) + "left cusp position " + std::to_string(p) + " out of range");
                return s;
            }
            std::size_t a = new_segment(s), b = new_segment(s);
            link(s, a, false, b, false);
            stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(p), {a, b});
            break;
        }
        case EventKind::RightCusp:
            if (p + 1 >= stack.size()) {
                fail(at(e) + "right cusp position " + std::to_string(p) + " out of range");
                return s;
            }
            link(s, stack[p], true, stack[p + 1], true);
            s.rcusp_seg.push_back(stack[p]);
            stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.begin() + static_cast<std::ptrdiff_t>(p) + 2);
            break;
        case EventKind::Crossing:
            if (p + 1 >= stack.size()) {
                fail(at(e) + "crossing position " + std::to_string(p) + " out of range");
                return s;
            }
            s.crossings.push_back({e, stack[p]});
            s.crossing_lower.push_back(stack[p + 1]);
            std::swap(stack[p], stack[p + 1]);
            break;
        }
    }
    std::size_t offset = 0;
    for (std::size_t h = 0; h < H; ++h, ++e) {
        const Event& w = d.events[e];
        if (w.kind != EventKind::Wall || w.side != WallSide::Right || w.handle != h) {
            fail(at(e) + "expected right wall of handle " + std::to_string(h));
            return s;
        }
        s.stacks.push_back(stack);
        if (w.pos != offset || w.count != counts[h]) {
            fail(at(e) + "right wall of handle " + std::to_string(h) + " does not match its left wall");
            return s;
        }
        offset += w.count;
    }
    if (offset != stack.size()) {
        fail("strand count " + std::to_string(stack.size()) + " at the right walls differs from the left walls");
        return s;
    }
    offset = 0;
    for (std::size_t h = 0; h < H; ++h)
        for (std::size_t j = 0; j < counts[h]; ++j, ++offset)
            link(s, stack[offset], true, left_wall[h][j], false, h);
    s.stacks.push_back(stack);
    return s;
}

}  // namespace

namespace {

struct Traced {
    std::vector<std::string> errors;
    FrontAnalysis a;
};

Traced trace(const FrontDiagram& d)
{
    Traced t;
    Sim s = simulate(d);
    if (!s.errors.empty()) {
        t.errors = std::move(s.errors);
        return t;
    }
    FrontAnalysis& a = t.a;
    std::vector<std::size_t> comp(s.nseg, npos);
    a.segments.assign(s.nseg, {});
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const OrientationSeed& seed = d.components[c].seed;
        CurveWord w;
        std::vector<OrientationSeed> seeds;
        if (seed.segment >= s.nseg || (seed.direction != 1 && seed.direction != -1)) {
            t.errors.push_back("component " + std::to_string(c) + ": invalid orientation seed");
            a.words.emplace_back();
            a.letter_seeds.emplace_back();
            continue;
        }
        std::size_t cur = seed.segment;
        int dir = seed.direction;
        bool ok = true;
        do {
            if (comp[cur] != npos) {
                t.errors.push_back("component " + std::to_string(c) + ": segment " + std::to_string(cur) +
                                   " already belongs to component " + std::to_string(comp[cur]));
                ok = false;
                break;
            }
            comp[cur] = c;
            a.segments[cur] = {c, dir};
            const End& nx = dir > 0 ? s.right[cur] : s.left[cur];
            if (nx.seg == npos) {
                t.errors.push_back("segment " + std::to_string(cur) + " has a free end");
                ok = false;
                break;
            }
            if (nx.handle != npos) {
                w.letters.push_back({nx.handle, dir});
                seeds.push_back({cur, dir});
            }
            cur = nx.seg;
            dir = nx.right ? -1 : 1;
        } while (cur != seed.segment);
        if (ok && dir != seed.direction)
            t.errors.push_back("component " + std::to_string(c) + ": orientation is inconsistent");
        a.words.push_back(std::move(w));
        a.letter_seeds.push_back(std::move(seeds));
    }
    for (std::size_t g = 0; g < s.nseg; ++g)
        if (comp[g] == npos) {
            t.errors.push_back("segment " + std::to_string(g) + " belongs to no component");
            break;
        }
    for (std::size_t k = 0; k < s.crossings.size(); ++k)
        a.crossings.push_back({s.crossings[k].first, s.crossings[k].second, s.crossing_lower[k]});
    for (std::size_t g : s.rcusp_seg)
        a.right_cusps.push_back(comp[g]);
    a.stacks = std::move(s.stacks);
    return t;
}

}  // namespace

FrontReport validate(const FrontDiagram& d) { return {trace(d).errors}; }

void require_valid(const FrontDiagram& d)
{
    auto r = validate(d);
    if (r.ok())
        return;
    std::string msg = "invalid diagram:";
    for (const auto& v : r.violations)
        msg += " " + v + ";";
    throw DomainError(msg);
}

FrontAnalysis analyze(const FrontDiagram& d)
{
    Traced t = trace(d);
    if (!t.errors.empty()) {
        std::string msg = "invalid diagram:";
        for (const auto& v : t.errors)
            msg += " " + v + ";";
        throw DomainError(msg);
    }
    return std::move(t.a);
}

int crossing_sign(const FrontAnalysis& a, const CrossingInfo& c)
{
    return a.segments[c.upper].direction * a.segments[c.lower].direction;
}

namespace {

void check_component(const FrontDiagram& d, std::size_t c)
{
    if (c >= d.components.size())
        throw DomainError("component " + std::to_string(c) + " does not exist");
}

}  // namespace

Int writhe_of(const FrontDiagram& d, std::size_t c)
{
    check_component(d, c);
    FrontAnalysis a = analyze(d);
    Int w = 0;
    for (const CrossingInfo& x : a.crossings)
        if (a.segments[x.upper].component == c && a.segments[x.lower].component == c)
            w += crossing_sign(a, x);
    return w;
}

Int right_cusps_of(const FrontDiagram& d, std::size_t c)
{
    check_component(d, c);
    FrontAnalysis a = analyze(d);
    Int r = 0;
    for (std::size_t k : a.right_cusps)
        if (k == c)
            ++r;
    return r;
}

Int tb_of(const FrontDiagram& d, std::size_t c) { return writhe_of(d, c) - right_cusps_of(d, c); }

Int signed_crossings(const FrontDiagram& d, std::size_t c1, std::size_t c2)
{
    check_component(d, c1);
    check_component(d, c2);
    FrontAnalysis a = analyze(d);
    Int s = 0;
    for (const CrossingInfo& x : a.crossings) {
        std::size_t u = a.segments[x.upper].component, l = a.segments[x.lower].component;
        if ((u == c1 && l == c2) || (u == c2 && l == c1))
            s += crossing_sign(a, x);
    }
    return s;
}

IntMatrix passage_matrix(const FrontDiagram& d)
{
    FrontAnalysis a = analyze(d);
    IntMatrix phi(d.handles, d.components.size());
    for (std::size_t c = 0; c < a.words.size(); ++c)
        for (const Letter& l : a.words[c].letters)
            phi(l.handle, c) += l.sign;
    return phi;
}

ClosedFrontDiagram canonical_closure(const FrontDiagram& d)
{
    require_valid(d);
    const std::size_t H = d.handles;
    std::vector<std::size_t> count(H), off(H);
    std::size_t N = 0;
    for (std::size_t h = 0; h < H; ++h) {
        off[h] = N;
        count[h] = d.events[h].count;
        N += count[h];
    }
    ClosedFrontDiagram cd;
    cd.original_components = d.components.size();
    FrontDiagram& out = cd.diagram;
    out.ambient = d.ambient;
    out.handles = 0;
    // Nested return arcs, outermost first: stack r_{N-1} .. r_0 w_0 .. w_{N-1}.
    for (std::size_t m = 0; m < N; ++m)
        out.events.push_back(Event::lcusp(m));
    // Unknot around handle h: lcusp above its block of return strands, the
    // lower branch dips through the block and comes back.
    for (std::size_t h = 0; h < H; ++h) {
        const std::size_t p0 = N - off[h] - count[h];
        out.events.push_back(Event::lcusp(p0));
        for (std::size_t j = 0; j < count[h]; ++j)
            out.events.push_back(Event::crossing(p0 + 1 + j));
        for (std::size_t j = count[h]; j-- > 0;)
            out.events.push_back(Event::crossing(p0 + 1 + j));
        out.events.push_back(Event::rcusp(p0));
    }
    for (std::size_t e = H; e + H < d.events.size(); ++e) {
        Event ev = d.events[e];
        ev.pos += N;
        out.events.push_back(ev);
    }
    for (std::size_t m = N; m-- > 0;)
        out.events.push_back(Event::rcusp(m));

    auto remap = [&](std::size_t g) { return g < N ? 2 * (N - 1 - g) + 1 : g + N + 2 * H; };
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        ComponentInfo ci = d.components[c];
        ci.seed.segment = remap(ci.seed.segment);
        out.components.push_back(ci);
        cd.framings.push_back(tb_of(d, c) - 1);
    }
    for (std::size_t h = 0; h < H; ++h) {
        out.components.push_back({"U" + std::to_string(h + 1), {2 * N + 2 * h + 1, -1}});
        cd.framings.push_back(0);
    }
    require_valid(out);
    return cd;
}

IntMatrix linking_matrix(const ClosedFrontDiagram& cd)
{
    FrontAnalysis a = analyze(cd.diagram);
    const std::size_t n = cd.diagram.components.size();
    if (cd.framings.size() != n)
        throw DomainError("linking_matrix: framing count does not match component count");
    IntMatrix M(n, n);
    for (const CrossingInfo& x : a.crossings) {
        std::size_t u = a.segments[x.upper].component, l = a.segments[x.lower].component;
        if (u != l) {
            M(u, l) += crossing_sign(a, x);
            M(l, u) += crossing_sign(a, x);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (M(i, j) % 2 != 0)
                throw std::logic_error("linking_matrix: odd signed crossing count between components");
            M(i, j) /= 2;
        }
    for (std::size_t i = 0; i < n; ++i)
        M(i, i) = cd.framings[i];
    return M;
}

XHomology homology_X(const FrontDiagram& d)
{
    FrontAnalysis a = analyze(d);
    IntMatrix phi(d.handles, d.components.size());
    for (std::size_t c = 0; c < a.words.size(); ++c)
        for (const Letter& l : a.words[c].letters)
            phi(l.handle, c) += l.sign;
    CokerKer ck = coker_ker(phi);
    XHomology x{ck.coker, AbelianGroup::free(ck.ker_rank), {}};
    if (d.handles == 2 && d.ambient.orientable)
        x.pi1.generators = {"x", "y"};
    else
        for (std::size_t h = 0; h < d.handles; ++h)
            x.pi1.generators.push_back("h" + std::to_string(h + 1));
    for (const CurveWord& w : a.words) {
        std::vector<std::pair<std::size_t, Int>> rel;
        for (const Letter& l : w.letters) {
            if (!rel.empty() && rel.back().first == l.handle)
                rel.back().second += l.sign;
            else
                rel.push_back({l.handle, Int(l.sign)});
            if (!rel.empty() && rel.back().second == 0)
                rel.pop_back();
        }
        x.pi1.relators.push_back(rel);
    }
    return x;
}

BoundaryHomology boundary_homology(const ClosedFrontDiagram& cd)
{
    CokerKer ck = coker_ker(linking_matrix(cd));
    return {ck.coker, AbelianGroup::free(ck.ker_rank)};
}

std::size_t crossing_count(const FrontDiagram& d)
{
    std::size_t n = 0;
    for (const Event& e : d.events)
        n += e.kind == EventKind::Crossing;
    return n;
}

// ---------------------------------------------------------------------------
// Cusp moves. Every left cusp carries its original ordinal so that
// orientation seeds can be carried over after reordering.

namespace {

struct Work {
    std::vector<Event> ev;
    std::vector<long> tag;  // lcusp ordinal, -1 otherwise
};

Work make_work(const FrontDiagram& d)
{
    Work w;
    long k = 0;
    for (const Event& e : d.events) {
        w.ev.push_back(e);
        w.tag.push_back(e.kind == EventKind::LeftCusp ? k++ : -1);
    }
    return w;
}

FrontDiagram finish(const FrontDiagram& d, const Work& w)
{
    std::size_t N = 0;
    for (std::size_t h = 0; h < d.handles; ++h)
        N += d.events[h].count;
    std::vector<std::size_t> place;
    for (long t : w.tag)
        if (t >= 0) {
            if (place.size() <= static_cast<std::size_t>(t))
                place.resize(static_cast<std::size_t>(t) + 1);
        }
    std::size_t ord = 0;
    for (long t : w.tag)
        if (t >= 0)
            place[static_cast<std::size_t>(t)] = ord++;
    FrontDiagram out = d;
    out.events = w.ev;
    for (ComponentInfo& c : out.components) {
        std::size_t g = c.seed.segment;
        if (g >= N)
            c.seed.segment = N + 2 * place[(g - N) / 2] + (g - N) % 2;
    }
    return out;
}

bool is_x(const Event& e, std::size_t p) { return e.kind == EventKind::Crossing && e.pos == p; }

void splice(Work& w, std::size_t at, std::size_t len, const std::vector<Event>& es, long lcusp_tag)
{
    w.ev.erase(w.ev.begin() + static_cast<std::ptrdiff_t>(at), w.ev.begin() + static_cast<std::ptrdiff_t>(at + len));
    w.tag.erase(w.tag.begin() + static_cast<std::ptrdiff_t>(at), w.tag.begin() + static_cast<std::ptrdiff_t>(at + len));
    std::vector<long> tags;
    for (const Event& e : es)
        tags.push_back(e.kind == EventKind::LeftCusp ? lcusp_tag : -1);
    w.ev.insert(w.ev.begin() + static_cast<std::ptrdiff_t>(at), es.begin(), es.end());
    w.tag.insert(w.tag.begin() + static_cast<std::ptrdiff_t>(at), tags.begin(), tags.end());
}

void swap_at(Work& w, std::size_t i)
{
    std::swap(w.ev[i], w.ev[i + 1]);
    std::swap(w.tag[i], w.tag[i + 1]);
}

// Left cusp at i moves one event to the left. Returns its new index or npos.
std::size_t lcusp_left(Work& w, std::size_t i)
{
    if (i == 0)
        return npos;
    Event& e = w.ev[i - 1];
    const std::size_t k = w.ev[i].pos, j = e.pos;
    switch (e.kind) {
    case EventKind::Wall:
        return npos;
    case EventKind::Crossing:
        if (j + 1 == k) {
            long t = w.tag[i];
            splice(w, i - 1, 2,
                   {Event::lcusp(k + 1), Event::crossing(k - 1), Event::crossing(k), Event::crossing(k + 1)}, t);
            return i - 1;
        }
        if (j >= k)
            e.pos += 2;
        break;
    case EventKind::LeftCusp:
        if (k == j + 1)
            return npos;
        if (k <= j)
            e.pos += 2;
        else
            w.ev[i].pos -= 2;
        break;
    case EventKind::RightCusp:
        if (k <= j)
            e.pos += 2;
        else
            w.ev[i].pos += 2;
        break;
    }
    swap_at(w, i - 1);
    return i - 1;
}

std::size_t rcusp_right(Work& w, std::size_t i)
{
    if (i + 1 >= w.ev.size())
        return npos;
    Event& e = w.ev[i + 1];
    const std::size_t k = w.ev[i].pos, j = e.pos;
    switch (e.kind) {
    case EventKind::Wall:
        return npos;
    case EventKind::Crossing:
        if (j + 1 == k) {
            splice(w, i, 2,
                   {Event::crossing(k - 1), Event::crossing(k), Event::crossing(k + 1), Event::rcusp(k - 1)}, -1);
            return i + 3;
        }
        if (j >= k)
            e.pos += 2;
        break;
    case EventKind::LeftCusp:
        if (j <= k)
            w.ev[i].pos += 2;
        else
            e.pos += 2;
        break;
    case EventKind::RightCusp:
        if (j + 1 == k)
            return npos;
        if (j + 1 < k)
            w.ev[i].pos -= 2;
        else
            e.pos += 2;
        break;
    }
    swap_at(w, i);
    return i + 1;
}

// Commuting neighbours in a run of left cusps end up ordered by the slot
// they occupy after the run, right cusps by the slot they close before it.
void sort_cusp_runs(Work& w)
{
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < w.ev.size(); ++i) {
            Event &a = w.ev[i], &b = w.ev[i + 1];
            if (a.kind != b.kind)
                continue;
            if (a.kind == EventKind::LeftCusp && b.pos <= a.pos)
                a.pos += 2;
            else if (a.kind == EventKind::RightCusp && b.pos + 1 < a.pos)
                a.pos -= 2;
            else
                continue;
            swap_at(w, i);
            swapped = true;
        }
    }
}

enum class Step { Moved, Removed, Blocked };

// Left cusp at i moves right past the next event or absorbs a crossing pair.
Step lcusp_right(Work& w, std::size_t& i)
{
    if (i + 1 >= w.ev.size())
        return Step::Blocked;
    Event& e = w.ev[i + 1];
    const std::size_t k = w.ev[i].pos, j = e.pos;
    switch (e.kind) {
    case EventKind::Wall:
        return Step::Blocked;
    case EventKind::Crossing:
        if (j + 1 == k || j == k + 1) {
            if (i + 2 < w.ev.size() && is_x(w.ev[i + 2], k)) {
                long t = w.tag[i];
                splice(w, i, 3, {Event::lcusp(j + 1 == k ? k - 1 : k + 1)}, t);
                return Step::Removed;
            }
            return Step::Blocked;
        }
        if (j == k)
            return Step::Blocked;
        if (j >= k + 2)
            e.pos -= 2;
        break;
    case EventKind::LeftCusp:
        if (j == k + 1)
            return Step::Blocked;
        if (j <= k)
            w.ev[i].pos += 2;
        else
            e.pos -= 2;
        break;
    case EventKind::RightCusp:
        if (j + 2 <= k)
            w.ev[i].pos -= 2;
        else if (j >= k + 2)
            e.pos -= 2;
        else
            return Step::Blocked;
        break;
    }
    swap_at(w, i);
    ++i;
    return Step::Moved;
}

Step rcusp_left(Work& w, std::size_t& i)
{
    if (i == 0)
        return Step::Blocked;
    Event& e = w.ev[i - 1];
    const std::size_t k = w.ev[i].pos, j = e.pos;
    switch (e.kind) {
    case EventKind::Wall:
        return Step::Blocked;
    case EventKind::Crossing:
        if (j == k + 1 || j + 1 == k) {
            if (i >= 2 && is_x(w.ev[i - 2], k)) {
                splice(w, i - 2, 3, {Event::rcusp(j == k + 1 ? k + 1 : k - 1)}, -1);
                i -= 2;
                return Step::Removed;
            }
            return Step::Blocked;
        }
        if (j == k)
            return Step::Blocked;
        if (j >= k + 2)
            e.pos -= 2;
        break;
    case EventKind::LeftCusp:
        if (j + 2 <= k)
            w.ev[i].pos -= 2;
        else if (j >= k + 2)
            e.pos -= 2;
        else
            return Step::Blocked;
        break;
    case EventKind::RightCusp:
        if (k + 1 == j)
            return Step::Blocked;
        if (k >= j)
            w.ev[i].pos += 2;
        else
            e.pos -= 2;
        break;
    }
    swap_at(w, i - 1);
    --i;
    return Step::Moved;
}

}  // namespace

FrontDiagram hoist_cusps(const FrontDiagram& d)
{
    require_valid(d);
    Work w = make_work(d);
    for (std::size_t i = 0; i < w.ev.size(); ++i) {
        if (w.ev[i].kind != EventKind::LeftCusp)
            continue;
        // The cusp only moves left, so later events keep their order.
        std::size_t at = i, after = w.ev.size() - i;
        while ((at = lcusp_left(w, at)) != npos) {
        }
        i = w.ev.size() - after;
    }
    for (std::size_t i = w.ev.size(); i-- > 0;) {
        if (w.ev[i].kind != EventKind::RightCusp)
            continue;
        std::size_t at = i;
        while ((at = rcusp_right(w, at)) != npos) {
        }
    }
    sort_cusp_runs(w);
    return finish(d, w);
}

FrontDiagram remove_bigons(const FrontDiagram& d)
{
    require_valid(d);
    Work w = make_work(d);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < w.ev.size() && !changed; ++i) {
            EventKind kind = w.ev[i].kind;
            if (kind != EventKind::LeftCusp && kind != EventKind::RightCusp)
                continue;
            Work trial = w;
            std::size_t at = i;
            for (;;) {
                Step s = kind == EventKind::LeftCusp ? lcusp_right(trial, at) : rcusp_left(trial, at);
                if (s == Step::Blocked)
                    break;
                if (s == Step::Removed) {
                    w = std::move(trial);
                    changed = true;
                    break;
                }
            }
        }
    }
    return finish(d, w);
}

}  // namespace twd
