#include "twd/centering.hpp"
#include "twd/diagram.hpp"
#include "twd/emit.hpp"
#include "twd/fan.hpp"
#include "twd/json_io.hpp"
#include "twd/smoothing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace twd;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json num(const Int& v)
{
    if (abs(v) < Int(1) << 53)
        return static_cast<long long>(v);
    return to_string(v);
}

ordered_json point(const RatVec2& p) { return {to_string(p.x), to_string(p.y)}; }
ordered_json vec(const IntVec2& v) { return {num(v.x), num(v.y)}; }

ordered_json vecs(const std::vector<IntVec2>& vs)
{
    ordered_json a = ordered_json::array();
    for (const IntVec2& v : vs)
        a.push_back(vec(v));
    return a;
}

ordered_json matrix(const IntMatrix& m)
{
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(num(m(i, j)));
        a.push_back(row);
    }
    return a;
}

ordered_json polytope(const HalfSpacePolytope& p) { return ordered_json::parse(polytope_to_json(p)); }

ordered_json indices(const std::vector<std::size_t>& v)
{
    ordered_json a = ordered_json::array();
    for (std::size_t k : v)
        a.push_back(k);
    return a;
}

ordered_json verdict_json(const CenterVerdict& v)
{
    ordered_json j;
    j["verdict"] = verdict_name(v);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, verdict::Centered> || std::is_same_v<T, verdict::IntersectionOutside>)
                j["point"] = point(x.point);
            else if constexpr (std::is_same_v<T, verdict::ThreeRayFailure>)
                j["vertices"] = {x.i, x.j, x.k};
            else
                j["vertices"] = {x.i, x.j};
        },
        v);
    return j;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

HalfSpacePolytope load_polytope(const std::string& path) { return polytope_from_json(read_file(path)); }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Toric domains, centered rays and Weinstein handle diagrams"};
    app.require_subcommand(1);

    std::string file, slopes_text, vertices_text, left_text, right_text, format = "json";
    bool centered = false, want_homology = false, want_obstructions = false, no_bigon = false, no_move6 = false;
    bool invariants = false;
    unsigned budget = 64, k = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check a polytope file and list its vertices and edges");
    validate_cmd->add_option("polytope", file, "polytope JSON file")->required();

    auto* realize_cmd = app.add_subcommand("realize", "Delzant polygon with vertices of the given slopes");
    realize_cmd->add_option("--slopes", slopes_text, "a,b;a,b;...")->required();
    realize_cmd->add_flag("--centered", centered, "search for a polygon centered at those vertices");
    realize_cmd->add_option("--budget", budget, "linear systems tried by the centered search");

    auto* center_cmd = app.add_subcommand("center", "Classify the rays of chosen vertices");
    center_cmd->add_option("polytope", file)->required();
    center_cmd->add_option("--vertices", vertices_text, "i,j,...")->required();

    auto* smooth_cmd = app.add_subcommand("smooth", "Smooth nodes of the toric divisor");
    smooth_cmd->add_option("polytope", file)->required();
    smooth_cmd->add_option("--vertices", vertices_text)->required();
    smooth_cmd->add_flag("--homology", want_homology);
    smooth_cmd->add_flag("--obstructions", want_obstructions);

    auto* diagram_cmd = app.add_subcommand("diagram", "Handle diagram of the complement");
    auto* slopes_opt = diagram_cmd->add_option("--slopes", slopes_text);
    auto* poly_opt = diagram_cmd->add_option("--polytope", file);
    auto* vert_opt = diagram_cmd->add_option("--vertices", vertices_text);
    slopes_opt->excludes(poly_opt);
    poly_opt->needs(vert_opt);
    diagram_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));
    diagram_cmd->add_flag("--no-bigon-removal", no_bigon);
    diagram_cmd->add_flag("--no-move6", no_move6);
    diagram_cmd->add_flag("--invariants", invariants, "print tb, linking matrix and homology instead");

    auto* equiv_cmd = app.add_subcommand("equiv", "SL(2,Z) equivalence of two slope sets");
    equiv_cmd->add_option("--left", left_text)->required();
    equiv_cmd->add_option("--right", right_text)->required();

    auto* family_cmd = app.add_subcommand("family", "Member k of the centered family");
    family_cmd->add_option("--k", k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) {
            HalfSpacePolytope p = load_polytope(file);
            ValidationReport r = validate(p);
            ordered_json j;
            j["valid"] = r.ok();
            j["violations"] = r.violations;
            if (r.ok()) {
                ordered_json vs = ordered_json::array(), es = ordered_json::array();
                for (const Vertex& v : vertices(p))
                    vs.push_back(point(v.position));
                for (const Edge& e : edges(p))
                    es.push_back({{"facet", e.facet},
                                  {"lattice_length", to_string(e.lattice_length)},
                                  {"self_intersection", num(e.self_intersection)}});
                j["vertices"] = vs;
                j["edges"] = es;
                j["monotone"] = is_monotone(p);
            }
            print(j);
            return r.ok() ? 0 : 1;
        }
        if (*realize_cmd) {
            auto slopes = parse_slopes(slopes_text);
            ordered_json j;
            if (centered) {
                auto w = search_centered(slopes, budget);
                j["found"] = w.has_value();
                if (w) {
                    j["polytope"] = polytope(w->polytope);
                    j["vertices"] = indices(w->vertices);
                    j["center"] = point(w->center);
                }
            } else {
                j["polytope"] = polytope(realize_slopes(slopes));
            }
            print(j);
            return 0;
        }
        if (*center_cmd) {
            HalfSpacePolytope p = load_polytope(file);
            require_valid(p);
            auto chosen = parse_indices(vertices_text);
            ordered_json j = verdict_json(center_check(p, chosen));
            auto t = lambda_center_criterion(p, chosen);
            j["lambda_translation"] = t ? point(*t) : ordered_json(nullptr);
            print(j);
            return 0;
        }
        if (*smooth_cmd) {
            SmoothingSpec spec{load_polytope(file), parse_indices(vertices_text)};
            ordered_json j;
            SlopeSet c = slopes_of(spec);
            j["vertices"] = indices(normalized_vertices(spec));
            j["slopes"] = vecs(c);
            ExactnessVerdict v = exactness_verdict(spec);
            ordered_json ex;
            ex["verdict"] = exactness_name(v.kind);
            ex["case"] = v.case_number;
            ex["reason"] = v.reason;
            ex["rays"] = verdict_json(v.rays);
            if (v.center)
                ex["center"] = point(*v.center);
            j["exactness"] = ex;
            if (want_homology) {
                WHomology h = homology_W(c);
                j["homology"] = {{"H1", h.H1.to_string()}, {"H2", h.H2.to_string()}, {"pi1", h.pi1.to_string()}};
            }
            if (want_obstructions) {
                DivisorComponents dc = divisor_components(spec);
                ordered_json comps = ordered_json::array(), areas = ordered_json::array();
                for (const auto& comp : dc.components)
                    comps.push_back(indices(comp));
                for (const Rational& a : dc.areas)
                    areas.push_back(to_string(a));
                ordered_json ob;
                ob["components"] = comps;
                ob["Q"] = matrix(dc.Q);
                ob["areas"] = areas;
                if (!dc.components.empty()) {
                    ConcaveResult cr = concave_obstruction(dc.Q, dc.areas);
                    ob["concave"] = cr.admits ? "admits" : "obstructed";
                    ordered_json z = ordered_json::array();
                    for (const Rational& r : cr.z)
                        z.push_back(to_string(r));
                    ob["z"] = z;
                    if (cr.affine_solution) {
                        ordered_json s = ordered_json::array();
                        for (const Rational& r : *cr.affine_solution)
                            s.push_back(to_string(r));
                        ob["affine_solution"] = s;
                    }
                } else {
                    ob["concave"] = "not_applicable";
                }
                j["obstructions"] = ob;
            }
            print(j);
            return 0;
        }
        if (*diagram_cmd) {
            SlopeSet c;
            if (*slopes_opt)
                c = parse_slopes(slopes_text);
            else if (*poly_opt)
                c = slopes_of({load_polytope(file), parse_indices(vertices_text)});
            else
                throw ParseError("diagram needs --slopes or --polytope with --vertices");
            DiagramOptions opt;
            opt.bigon_removal = !no_bigon;
            opt.move6 = !no_move6;
            FrontDiagram d = generate_diagram(c, opt);
            if (invariants) {
                ordered_json j;
                ordered_json comps = ordered_json::array();
                FrontAnalysis a = analyze(d);
                for (std::size_t i = 0; i < d.components.size(); ++i)
                    comps.push_back({{"label", d.components[i].label},
                                     {"word", to_string(a.words[i])},
                                     {"tb", num(tb_of(d, i))},
                                     {"writhe", num(writhe_of(d, i))},
                                     {"right_cusps", num(right_cusps_of(d, i))}});
                j["components"] = comps;
                ClosedFrontDiagram cd = canonical_closure(d);
                j["linking_matrix"] = matrix(linking_matrix(cd));
                XHomology hx = homology_X(d);
                j["homology_X"] = {{"H1", hx.H1.to_string()}, {"H2", hx.H2.to_string()}, {"pi1", hx.pi1.to_string()}};
                BoundaryHomology hb = boundary_homology(cd);
                j["boundary_homology"] = {{"H1", hb.H1.to_string()}, {"H2", hb.H2.to_string()}};
                print(j);
            } else {
                std::cout << emit(d, format == "svg" ? Format::Svg : Format::Json);
            }
            return 0;
        }
        if (*equiv_cmd) {
            auto G = sl2z_equivalent(parse_slopes(left_text), parse_slopes(right_text));
            ordered_json j;
            j["equivalent"] = G.has_value();
            j["matrix"] = G ? ordered_json{{num(G->a()), num(G->b())}, {num(G->c()), num(G->d())}}
                            : ordered_json(nullptr);
            print(j);
            return 0;
        }
        if (*family_cmd) {
            CenteredFamily f = centered_family(k);
            ordered_json j;
            j["k"] = k;
            j["polytope"] = polytope(f.polytope);
            j["vertices"] = indices(f.vertices);
            ordered_json ss = ordered_json::array();
            for (std::size_t v : f.vertices)
                ss.push_back(vec(slope_at(f.polytope, v)));
            j["slopes"] = ss;
            j["verdict"] = verdict_json(center_check(f.polytope, f.vertices));
            print(j);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
