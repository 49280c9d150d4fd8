#include "twd/json_io.hpp"

#include <json.hpp>

#include <sstream>

namespace twd {

using nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text)
{
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <class F>
auto field(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

Int to_int(const ordered_json& v)
{
    if (v.is_number_integer())
        return Int(v.get<long long>());
    if (v.is_string()) {
        Rational r;
        try {
            r = parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
        if (boost::multiprecision::denominator(r) != 1)
            throw ParseError("expected an integer, got " + v.get<std::string>());
        return boost::multiprecision::numerator(r);
    }
    throw ParseError("expected an integer");
}

Rational to_rational(const ordered_json& v)
{
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a rational string");
}

std::string trim(std::string s)
{
    std::size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(trim(item));
    return out;
}

Int parse_int_token(const std::string& t)
{
    if (t.empty())
        throw ParseError("empty number");
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size())
        throw ParseError("'" + t + "' is not an integer");
    for (std::size_t j = k; j < t.size(); ++j)
        if (t[j] < '0' || t[j] > '9')
            throw ParseError("'" + t + "' is not an integer");
    return Int(t[0] == '+' ? t.substr(1) : t);
}

const char* kind_name(EventKind k)
{
    switch (k) {
    case EventKind::LeftCusp:
        return "lcusp";
    case EventKind::RightCusp:
        return "rcusp";
    case EventKind::Crossing:
        return "crossing";
    case EventKind::Wall:
        return "wall";
    }
    return "";
}

ordered_json diagram_json(const FrontDiagram& d)
{
    ordered_json j;
    j["version"] = 1;
    j["ambient"] = {{"genus", d.ambient.genus}, {"orientable", d.ambient.orientable}};
    j["handles"] = d.handles;
    ordered_json evs = ordered_json::array();
    for (const Event& e : d.events) {
        ordered_json o;
        o["kind"] = kind_name(e.kind);
        o["pos"] = e.pos;
        if (e.kind == EventKind::Wall) {
            o["handle"] = e.handle;
            o["side"] = e.side == WallSide::Left ? "left" : "right";
            o["count"] = e.count;
        }
        evs.push_back(o);
    }
    j["events"] = evs;
    ordered_json cs = ordered_json::array();
    for (const ComponentInfo& c : d.components)
        cs.push_back({{"label", c.label},
                      {"orientation_seed", {{"segment", c.seed.segment}, {"direction", c.seed.direction}}}});
    j["components"] = cs;
    return j;
}

}  // namespace

HalfSpacePolytope polytope_from_json(const std::string& text)
{
    ordered_json j = parse(text);
    HalfSpacePolytope p;
    field("polytope", [&] {
        for (const auto& f : j.at("facets")) {
            const auto& n = f.at("normal");
            if (!n.is_array() || n.size() != 2)
                throw ParseError("facet normal must be a pair of integers");
            p.facets.push_back({{to_int(n[0]), to_int(n[1])}, to_rational(f.at("offset"))});
        }
        return 0;
    });
    return p;
}

std::string polytope_to_json(const HalfSpacePolytope& p)
{
    ordered_json fs = ordered_json::array();
    for (const Facet& f : p.facets)
        fs.push_back({{"normal", {static_cast<long long>(f.normal.x), static_cast<long long>(f.normal.y)}},
                      {"offset", to_string(f.offset)}});
    ordered_json j;
    j["facets"] = fs;
    return j.dump(2) + "\n";
}

std::vector<IntVec2> parse_slopes(const std::string& text)
{
    std::vector<IntVec2> out;
    if (trim(text).empty())
        return out;
    for (const std::string& pair : split(text, ';')) {
        auto xy = split(pair, ',');
        if (xy.size() != 2)
            throw ParseError("slope '" + pair + "' is not of the form a,b");
        out.push_back({parse_int_token(xy[0]), parse_int_token(xy[1])});
    }
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text)
{
    std::vector<std::size_t> out;
    if (trim(text).empty())
        return out;
    for (const std::string& t : split(text, ',')) {
        Int v = parse_int_token(t);
        if (v < 0)
            throw ParseError("index '" + t + "' is negative");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string diagram_to_json(const FrontDiagram& d) { return diagram_json(d).dump(2) + "\n"; }

std::string closed_diagram_to_json(const ClosedFrontDiagram& cd)
{
    ordered_json j = diagram_json(cd.diagram);
    ordered_json fr = ordered_json::array();
    for (const Int& f : cd.framings)
        fr.push_back(static_cast<long long>(f));
    j["framings"] = fr;
    j["original_components"] = cd.original_components;
    return j.dump(2) + "\n";
}

FrontDiagram diagram_from_json(const std::string& text)
{
    ordered_json j = parse(text);
    FrontDiagram d;
    field("diagram", [&] {
        if (j.at("version").get<int>() != 1)
            throw ParseError("unsupported diagram version");
        d.ambient.genus = j.at("ambient").at("genus").get<unsigned>();
        d.ambient.orientable = j.at("ambient").at("orientable").get<bool>();
        d.handles = j.at("handles").get<std::size_t>();
        for (const auto& o : j.at("events")) {
            const std::string kind = o.at("kind").get<std::string>();
            const std::size_t pos = o.at("pos").get<std::size_t>();
            if (kind == "lcusp")
                d.events.push_back(Event::lcusp(pos));
            else if (kind == "rcusp")
                d.events.push_back(Event::rcusp(pos));
            else if (kind == "crossing")
                d.events.push_back(Event::crossing(pos));
            else if (kind == "wall") {
                const std::string side = o.at("side").get<std::string>();
                if (side != "left" && side != "right")
                    throw ParseError("wall side must be left or right");
                d.events.push_back(Event::wall(o.at("handle").get<std::size_t>(),
                                               side == "left" ? WallSide::Left : WallSide::Right, pos,
                                               o.at("count").get<std::size_t>()));
            } else
                throw ParseError("unknown event kind '" + kind + "'");
        }
        for (const auto& c : j.at("components")) {
            const auto& s = c.at("orientation_seed");
            d.components.push_back(
                {c.at("label").get<std::string>(), {s.at("segment").get<std::size_t>(), s.at("direction").get<int>()}});
        }
        return 0;
    });
    require_valid(d);
    return d;
}

}  // namespace twd
