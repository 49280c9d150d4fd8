#include "twd/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

namespace twd {

bool is_rotation(const CurveWord& w, const CurveWord& v)
{
    const std::size_t n = w.letters.size();
    if (n != v.letters.size())
        return false;
    if (n == 0)
        return true;
    for (std::size_t r = 0; r < n; ++r) {
        bool eq = true;
        for (std::size_t k = 0; k < n && eq; ++k)
            eq = w.letters[(k + r) % n] == v.letters[k];
        if (eq)
            return true;
    }
    return false;
}

Int tb_before_move6(const Int& a, const Int& b)
{
    if (a < 0 && b >= 0) {
        Int p = abs(a);
        return -2 * b * b - 3 * p * b + 2 * p * p - 2 * p;
    }
    if (gcd(a, b) != 1)
        throw DomainError("tb_before_move6: (" + to_string(a) + "," + to_string(b) + ") is not primitive");
    return b >= 0 ? Int(-2 * b * b - abs(a * b)) : Int(a * b);
}

namespace {

using Ids = std::vector<std::size_t>;

Ids cat(Ids a, const Ids& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Emits events while tracking segment ids, which match the numbering used
// by analyze() as long as every event goes through here.
class Builder {
public:
    std::vector<Event> events;
    Ids stack;

    void wall(std::size_t h, WallSide side, std::size_t pos, std::size_t count)
    {
        events.push_back(Event::wall(h, side, pos, count));
        if (side == WallSide::Left)
            for (std::size_t j = 0; j < count; ++j)
                stack.push_back(next_++);
    }
    void cross(std::size_t p)
    {
        events.push_back(Event::crossing(p));
        std::swap(stack.at(p), stack.at(p + 1));
    }
    std::pair<std::size_t, std::size_t> lcusp(std::size_t p)
    {
        events.push_back(Event::lcusp(p));
        std::size_t u = next_++, v = next_++;
        stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(p), {u, v});
        return {u, v};
    }
    void rcusp(std::size_t p)
    {
        events.push_back(Event::rcusp(p));
        stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    }
    Ids slice(std::size_t lo, std::size_t n) const
    {
        return Ids(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(lo + n));
    }
    // Adjacent transpositions taking stack[lo..] to `target`; each pair of
    // strands crosses at most once.
    void permute(std::size_t lo, const Ids& target)
    {
        for (std::size_t k = 0; k < target.size(); ++k) {
            std::size_t c = lo + k;
            while (stack.at(c) != target[k])
                ++c;
            for (; c > lo + k; --c)
                cross(c - 1);
        }
    }

private:
    std::size_t next_ = 0;
};

// n nested-free left cusps at p, unshuffled into [U][W].
std::pair<Ids, Ids> cups(Builder& b, std::size_t p, std::size_t n)
{
    Ids U, W;
    for (std::size_t j = 0; j < n; ++j) {
        auto [u, w] = b.lcusp(p + 2 * j);
        U.push_back(u);
        W.push_back(w);
    }
    b.permute(p, cat(U, W));
    return {U, W};
}

// Joins the band [p, p+n) with the band below it, strand by strand.
void caps(Builder& b, std::size_t p, std::size_t n)
{
    Ids P = b.slice(p, n), Q = b.slice(p + n, n), mix;
    for (std::size_t j = 0; j < n; ++j) {
        mix.push_back(P[j]);
        mix.push_back(Q[j]);
    }
    b.permute(p, mix);
    for (std::size_t j = 0; j < n; ++j)
        b.rcusp(p);
}

// Zigzag on the band [s, s+n). The m strands just above it end up below
// the band, crossing only the returning stroke.
void zigzag(Builder& b, std::size_t s, std::size_t n, std::size_t m)
{
    const std::size_t top = s - m;
    Ids A = b.slice(top, m);
    auto [U, V] = cups(b, top, n);
    b.permute(top + n, cat(A, V));
    caps(b, s + n, n);
}

void swap_blocks(Builder& b, std::size_t lo, std::size_t n1, std::size_t n2)
{
    b.permute(lo, cat(b.slice(lo + n1, n2), b.slice(lo, n1)));
}

// A band of p strands at s against a band of q opposite strands below it.
void mixed(Builder& b, std::size_t s, std::size_t p, std::size_t q)
{
    if (p <= q) {
        const std::size_t r = q - p;
        b.permute(s, cat(b.slice(s + p, r), b.slice(s, p)));
        caps(b, s + r, p);
        cups(b, s, p);
    } else {
        const std::size_t r = p - q;
        b.permute(s + q, cat(b.slice(s + p, q), b.slice(s + q, r)));
        caps(b, s, q);
        cups(b, s + r, q);
    }
}

void full_twist(Builder& b, std::size_t s, std::size_t n)
{
    Ids band = b.slice(s, n), rev(band.rbegin(), band.rend());
    b.permute(s, rev);
    b.permute(s, band);
}

// Front of the slope (a, b) on its strands [B slots][C slots] at s.
void torus_tangle(Builder& bd, std::size_t s, const Int& a, const Int& b, bool move6)
{
    const std::size_t p = static_cast<std::size_t>(abs(a)), q = static_cast<std::size_t>(abs(b));
    if (a < 0 && b >= 0 && !move6) {
        full_twist(bd, s, p);
        full_twist(bd, s, p);
        swap_blocks(bd, s, p, q);
        swap_blocks(bd, s, q, p);
    }
    if (b > 0 && a >= 0) {
        zigzag(bd, s + p, q, p);
        zigzag(bd, s, q, 0);
    } else if (b < 0 && a < 0) {
        swap_blocks(bd, s, p, q);
    } else if (b != 0 && a != 0) {
        if (b > 0) {
            zigzag(bd, s + p, q, 0);
            zigzag(bd, s + p, q, 0);
        }
        mixed(bd, s, p, q);
    }
}

// Generic front for an arbitrary word on local slots laid out by handle,
// letters of one handle in word order.
void routed_tangle(Builder& bd, std::size_t s, const CurveWord& w, std::size_t handles)
{
    const std::size_t m = w.letters.size();
    std::vector<std::size_t> slot(m), base(handles + 1, 0);
    for (const Letter& l : w.letters)
        ++base[l.handle + 1];
    for (std::size_t h = 0; h < handles; ++h)
        base[h + 1] += base[h];
    {
        std::vector<std::size_t> used(handles, 0);
        for (std::size_t t = 0; t < m; ++t)
            slot[t] = base[w.letters[t].handle] + used[w.letters[t].handle]++;
    }
    // Body piece t runs from passage t to passage t+1.
    std::vector<long> left_owner(m), right_owner(m);
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t u = (t + 1) % m;
        if (w.letters[t].sign > 0)
            left_owner[slot[t]] = static_cast<long>(t);
        else
            right_owner[slot[t]] = static_cast<long>(t);
        if (w.letters[u].sign > 0)
            right_owner[slot[u]] = static_cast<long>(t);
        else
            left_owner[slot[u]] = static_cast<long>(t);
    }
    const Ids strands = bd.slice(s, m);
    auto owner_of = [&](std::size_t id) {
        for (std::size_t k = 0; k < m; ++k)
            if (strands[k] == id)
                return left_owner[k];
        return -1L;
    };
    // Close the pieces that start and end on the left.
    std::size_t live = m;
    for (bool found = true; found;) {
        found = false;
        for (std::size_t x = s; x < s + live && !found; ++x) {
            const long o = owner_of(bd.stack[x]);
            for (std::size_t y = x + 1; y < s + live && !found; ++y)
                if (owner_of(bd.stack[y]) == o) {
                    for (std::size_t c = y; c > x + 1; --c)
                        bd.cross(c - 1);
                    bd.rcusp(x);
                    live -= 2;
                    found = true;
                }
        }
    }
    // Open the pieces that start and end on the right, then sort.
    Ids right_id(m, SIZE_MAX);
    for (std::size_t k = 0; k < m; ++k) {
        if (right_id[k] != SIZE_MAX)
            continue;
        const long o = right_owner[k];
        for (std::size_t j = 0; j < m; ++j)
            if (left_owner[j] == o)
                right_id[k] = strands[j];
        if (right_id[k] != SIZE_MAX)
            continue;
        for (std::size_t j = k + 1; j < m; ++j)
            if (right_owner[j] == o) {
                auto [u, v] = bd.lcusp(s + live);
                right_id[k] = u;
                right_id[j] = v;
                live += 2;
                break;
            }
    }
    bd.permute(s, right_id);
}

struct Piece {
    std::string label;
    std::vector<std::size_t> counts;  // strands per handle
    CurveWord expected;
    std::function<void(Builder&, std::size_t)> tangle;
};

struct Op {
    EventKind kind;
    std::size_t pos;
};

// T^2 block on slots [B B][C C]: word B+ C+ B- C-, tb 1. The RP^2 block is
// the single crossing of its two slots plus one zigzag, tb 0.
const std::vector<Op> kTorusBlock{{EventKind::Crossing, 1}, {EventKind::Crossing, 0}, {EventKind::Crossing, 2},
                                  {EventKind::Crossing, 0}, {EventKind::LeftCusp, 3},  {EventKind::Crossing, 0},
                                  {EventKind::Crossing, 1}, {EventKind::RightCusp, 1}};
const std::vector<Op> kProjectiveBlock{{EventKind::Crossing, 0}, {EventKind::LeftCusp, 2}, {EventKind::RightCusp, 1}};

// One block per handle pair (or per cross-cap), stacked from s down. The
// right cusp of each block and the left cusp of the next are replaced by a
// band, a Legendrian connected sum that adds 1 to tb.
void surface_base(Builder& b, std::size_t s, const Ambient& F)
{
    const std::vector<Op>& ops = F.orientable ? kTorusBlock : kProjectiveBlock;
    const std::size_t width = F.orientable ? 4 : 2, n = F.genus;
    std::size_t band = SIZE_MAX;  // position of a pending band's upper strand
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t base = s + width * k;
        std::size_t off = band != SIZE_MAX ? base + 2 : base;
        for (const Op& op : ops) {
            switch (op.kind) {
            case EventKind::Crossing:
                b.cross(off + op.pos);
                break;
            case EventKind::LeftCusp:
                if (band != SIZE_MAX) {
                    Ids order = b.slice(band + 2, off + op.pos - band - 2);
                    order.push_back(b.stack[band]);
                    order.push_back(b.stack[band + 1]);
                    b.permute(band, order);
                    band = SIZE_MAX;
                    off = base;
                } else {
                    b.lcusp(off + op.pos);
                }
                break;
            case EventKind::RightCusp:
                if (k + 1 < n)
                    band = off + op.pos;
                else
                    b.rcusp(off + op.pos);
                break;
            case EventKind::Wall:
                break;
            }
        }
    }
}

std::vector<std::size_t> letter_counts(const CurveWord& w, std::size_t handles)
{
    std::vector<std::size_t> c(handles, 0);
    for (const Letter& l : w.letters)
        ++c[l.handle];
    return c;
}

Piece base_piece(const Ambient& F)
{
    const std::size_t H = F.handle_count();
    Piece p;
    p.label = "base";
    p.counts.assign(H, 2);
    p.tangle = [F](Builder& b, std::size_t s) { surface_base(b, s, F); };
    return p;
}

void check_word(const CurveWord& w, std::size_t handles)
{
    if (w.letters.empty())
        throw DomainError("generate_diagram: empty curve word");
    for (const Letter& l : w.letters) {
        if (l.handle >= handles)
            throw DomainError("generate_diagram: letter names handle " + std::to_string(l.handle + 1) + " of " +
                              std::to_string(handles));
        if (l.sign != 1 && l.sign != -1)
            throw DomainError("generate_diagram: letter sign must be +1 or -1");
    }
}

Piece curve_piece(const Ambient& F, const CurveWord& w, const DiagramOptions& opt)
{
    const std::size_t H = F.handle_count();
    check_word(w, H);
    Piece p;
    p.expected = w;
    p.expected.offset = 0;
    p.counts = letter_counts(w, H);
    if (F.orientable && F.genus == 1) {
        auto e = w.exponent_sums(2);
        Int a = e[0], b = e[1];
        if (gcd(a, b) == 1 && p.counts[0] == abs(a) && p.counts[1] == abs(b) && is_rotation(torus_word(a, b), w)) {
            p.label = "(" + to_string(a) + "," + to_string(b) + ")";
            bool move6 = opt.move6;
            p.tangle = [a, b, move6](Builder& bd, std::size_t s) { torus_tangle(bd, s, a, b, move6); };
            return p;
        }
    }
    p.label = to_string(w, F.orientable && F.genus == 1 ? 2 : H + 1);
    p.tangle = [w, H](Builder& b, std::size_t s) { routed_tangle(b, s, w, H); };
    return p;
}

// Among both orientations and all starting letters, the seed whose word is
// smallest with letters ordered by handle, + before -.
void canonical_seed(FrontDiagram& d, std::size_t c)
{
    auto key = [](const CurveWord& w) {
        std::vector<std::pair<std::size_t, int>> k;
        for (const Letter& l : w.letters)
            k.emplace_back(l.handle, -l.sign);
        return k;
    };
    std::optional<std::vector<std::pair<std::size_t, int>>> best;
    OrientationSeed pick = d.components[c].seed;
    for (int dir : {1, -1}) {
        FrontDiagram t = d;
        t.components[c].seed.direction = dir;
        FrontAnalysis a = analyze(t);
        for (const OrientationSeed& seed : a.letter_seeds[c]) {
            t.components[c].seed = seed;
            auto k = key(analyze(t).words[c]);
            if (!best || k < *best) {
                best = k;
                pick = seed;
            }
        }
    }
    d.components[c].seed = pick;
}

// Wall blocks per handle in input order with the base last; pieces are
// drawn left to right, base first, each gathered into one block and then
// spread back out.
FrontDiagram assemble(const Ambient& F, const std::vector<Piece>& pieces)
{
    const std::size_t H = F.handle_count();
    const std::size_t P = pieces.size();
    std::vector<std::size_t> wall_order(P);
    for (std::size_t i = 0; i < P; ++i)
        wall_order[i] = (i + 1) % P;
    Builder b;
    std::vector<std::size_t> totals(H, 0);
    std::vector<Ids> own(P);  // left wall ids per piece, in stack order
    for (std::size_t h = 0; h < H; ++h) {
        for (std::size_t i : wall_order)
            totals[h] += pieces[i].counts[h];
        std::size_t first = b.stack.size();
        b.wall(h, WallSide::Left, first, totals[h]);
        std::size_t k = first;
        for (std::size_t i : wall_order)
            for (std::size_t j = 0; j < pieces[i].counts[h]; ++j)
                own[i].push_back(b.stack[k++]);
    }
    for (std::size_t i = 0; i < P; ++i) {
        std::vector<bool> mine(b.stack.size(), false);
        std::size_t lo = b.stack.size(), hi = 0;
        for (std::size_t x = 0; x < b.stack.size(); ++x)
            if (std::find(own[i].begin(), own[i].end(), b.stack[x]) != own[i].end()) {
                mine[x] = true;
                lo = std::min(lo, x);
                hi = x;
            }
        if (own[i].empty())
            lo = hi = 0;
        Ids others;
        if (!own[i].empty())
            for (std::size_t x = lo; x <= hi; ++x)
                if (!mine[x])
                    others.push_back(b.stack[x]);
        const std::size_t n = own[i].size();
        b.permute(lo, cat(own[i], others));
        pieces[i].tangle(b, lo);
        if (n == 0)
            continue;
        Ids done = b.slice(lo, n), back;
        std::size_t u = 0, v = 0;
        for (std::size_t x = lo; x <= hi; ++x)
            back.push_back(mine[x] ? done[u++] : others[v++]);
        b.permute(lo, back);
    }
    std::size_t pos = 0;
    for (std::size_t h = 0; h < H; ++h) {
        b.wall(h, WallSide::Right, pos, totals[h]);
        pos += totals[h];
    }

    FrontDiagram d;
    d.ambient = F;
    d.handles = H;
    d.events = std::move(b.events);
    for (std::size_t i = 0; i < P; ++i) {
        std::size_t first = own[i].empty() ? 0 : own[i].front();
        d.components.push_back({pieces[i].label, {first, 1}});
    }
    // Orient each component and start its trace at the first letter.
    FrontAnalysis a = analyze(d);
    for (std::size_t i = 0; i < P; ++i) {
        if (pieces[i].expected.letters.empty()) {
            canonical_seed(d, i);
            a = analyze(d);
            continue;
        }
        bool ok = false;
        for (int pass = 0; pass < 2 && !ok; ++pass) {
            const CurveWord& got = a.words[i];
            const std::size_t m = got.letters.size();
            for (std::size_t r = 0; r < m && !ok; ++r) {
                bool eq = m == pieces[i].expected.letters.size();
                for (std::size_t k = 0; k < m && eq; ++k)
                    eq = got.letters[(k + r) % m] == pieces[i].expected.letters[k];
                if (eq) {
                    d.components[i].seed = a.letter_seeds[i][r];
                    ok = true;
                }
            }
            if (!ok) {
                d.components[i].seed.direction = -d.components[i].seed.direction;
                a = analyze(d);
            }
        }
        if (!ok)
            throw std::logic_error("generate_diagram: front of '" + pieces[i].label + "' traces the word " +
                                   to_string(a.words[i], H == 2 ? 2 : H + 1));
    }
    return d;
}

}  // namespace

FrontDiagram gompf_base(const Ambient& F)
{
    if (F.genus == 0)
        throw DomainError("gompf_base: the sphere has no 1-handles; genus must be positive");
    FrontDiagram d = assemble(F, {base_piece(F)});
#ifndef NDEBUG
    require_valid(d);
#endif
    return d;
}

FrontDiagram generate_diagram(const Ambient& F, const std::vector<CurveWord>& words, const DiagramOptions& opt)
{
    if (F.genus == 0)
        throw DomainError("generate_diagram: genus must be positive");
    if (words.empty())
        return gompf_base(F);
    std::vector<Piece> pieces{base_piece(F)};
    for (const CurveWord& w : words)
        pieces.push_back(curve_piece(F, w, opt));
    FrontDiagram raw = assemble(F, pieces);
#ifndef NDEBUG
    require_valid(raw);
#endif
    FrontDiagram out = hoist_cusps(raw);
    if (opt.bigon_removal)
        out = remove_bigons(out);
#ifndef NDEBUG
    require_valid(out);
#endif
    return out;
}

FrontDiagram generate_diagram(const std::vector<IntVec2>& slopes, const DiagramOptions& opt)
{
    std::vector<CurveWord> words;
    for (const IntVec2& s : slopes)
        words.push_back(torus_word(s.x, s.y));
    return generate_diagram(Ambient{1, true}, words, opt);
}

}  // namespace twd
