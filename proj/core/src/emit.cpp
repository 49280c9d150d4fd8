#include "twd/emit.hpp"

#include "twd/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace twd {

namespace {

constexpr long kStep = 40;
constexpr long kLane = 24;

const char* const kPalette[] = {"#000000", "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};

long lane(std::size_t p) { return kLane * static_cast<long>(p + 1); }

class Svg {
public:
    std::ostringstream out;

    void line(long x0, long y0, long x1, long y1, const char* color)
    {
        out << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\" stroke=\""
            << color << "\"/>\n";
    }
    void path(const std::string& d, const char* color)
    {
        out << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    }
    void circle(long cx, long cy, long r)
    {
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
            << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 2\"/>\n";
    }
};

std::string cubic(long x0, long y0, long c1x, long c1y, long c2x, long c2y, long x1, long y1)
{
    std::ostringstream s;
    s << "M " << x0 << " " << y0 << " C " << c1x << " " << c1y << ", " << c2x << " " << c2y << ", " << x1 << " "
      << y1;
    return s.str();
}

}  // namespace

std::string diagram_to_svg(const FrontDiagram& d)
{
    FrontAnalysis a = analyze(d);
    const std::size_t H = d.handles;
    const std::size_t body = d.events.size() - 2 * H;
    std::size_t tallest = 0;
    for (const auto& st : a.stacks)
        tallest = std::max(tallest, st.size());
    const long width = kStep * static_cast<long>(body + 2);
    const long height = kLane * static_cast<long>(tallest + 1);

    auto color = [&](std::size_t seg) {
        return kPalette[a.segments[seg].component % (sizeof kPalette / sizeof kPalette[0])];
    };

    Svg svg;
    svg.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
            << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
            << "  <g stroke-width=\"1.5\" stroke-linecap=\"round\">\n";

    for (std::size_t c = 0; c < body; ++c) {
        const Event& e = d.events[H + c];
        const auto& before = a.stacks[H + c];
        const auto& after = a.stacks[H + c + 1];
        const long x0 = kStep * static_cast<long>(c + 1), x1 = x0 + kStep, xm = x0 + kStep / 2;
        auto pos_after = [&](std::size_t seg) {
            return static_cast<std::size_t>(std::find(after.begin(), after.end(), seg) - after.begin());
        };
        const std::size_t i = e.pos;
        for (std::size_t p = 0; p < before.size(); ++p) {
            const std::size_t g = before[p];
            if (e.kind == EventKind::Crossing && (p == i || p == i + 1))
                continue;
            if (e.kind == EventKind::RightCusp && (p == i || p == i + 1))
                continue;
            svg.line(x0, lane(p), x1, lane(pos_after(g)), color(g));
        }
        switch (e.kind) {
        case EventKind::Crossing: {
            // The strand moving down has the more negative slope and is over.
            svg.line(x0, lane(i), x1, lane(i + 1), color(before[i]));
            const long y0 = lane(i + 1), y1 = lane(i);
            const long gx = kStep / 4;
            svg.line(x0, y0, xm - gx / 2 - 2, y0 + (y1 - y0) * (kStep / 2 - gx / 2 - 2) / kStep, color(before[i + 1]));
            svg.line(xm + gx / 2 + 2, y0 + (y1 - y0) * (kStep / 2 + gx / 2 + 2) / kStep, x1, y1, color(before[i + 1]));
            break;
        }
        case EventKind::LeftCusp: {
            const long cx = x0 + kStep / 4, cy = (lane(i) + lane(i + 1)) / 2;
            svg.path(cubic(cx, cy, cx + 8, cy, x1 - 8, lane(i), x1, lane(i)), color(after[i]));
            svg.path(cubic(cx, cy, cx + 8, cy, x1 - 8, lane(i + 1), x1, lane(i + 1)), color(after[i + 1]));
            break;
        }
        case EventKind::RightCusp: {
            const long cx = x1 - kStep / 4, cy = (lane(i) + lane(i + 1)) / 2;
            svg.path(cubic(x0, lane(i), x0 + 8, lane(i), cx - 8, cy, cx, cy), color(before[i]));
            svg.path(cubic(x0, lane(i + 1), x0 + 8, lane(i + 1), cx - 8, cy, cx, cy), color(before[i + 1]));
            break;
        }
        case EventKind::Wall:
            break;
        }
    }
    svg.out << "  </g>\n";

    // Paired balls of each 1-handle on the two wall lines.
    const long xl = kStep / 2, xr = width - kStep / 2;
    for (std::size_t h = 0; h < H; ++h) {
        const Event& w = d.events[h];
        const long cy = w.count ? (lane(w.pos) + lane(w.pos + w.count - 1)) / 2 : lane(w.pos);
        const long r = kLane * static_cast<long>(w.count) / 2 + 6;
        svg.circle(xl, cy, r);
        svg.circle(xr, cy, r);
        for (std::size_t j = 0; j < w.count; ++j) {
            const std::size_t gl = a.stacks[H][w.pos + j];
            const std::size_t gr = a.stacks.back()[w.pos + j];
            svg.line(xl, lane(w.pos + j), kStep, lane(w.pos + j), color(gl));
            svg.line(width - kStep, lane(w.pos + j), xr, lane(w.pos + j), color(gr));
        }
    }
    svg.out << "</svg>\n";
    return svg.out.str();
}

std::string emit(const FrontDiagram& d, Format f)
{
    return f == Format::Json ? diagram_to_json(d) : diagram_to_svg(d);
}

}  // namespace twd
