#include "fixtures.hpp"

#include <nlohmann/json.hpp>

namespace spraylab::fixtures {

namespace {

Rational q(const char* s) { return Rational::parse(s); }

QVec vec(std::initializer_list<const char*> xs) {
    std::vector<Rational> c;
    for (const char* s : xs) c.push_back(Rational::parse(s));
    return QVec(std::move(c));
}

json sphere_report(const Sphere& s) {
    return json{{"sphere", s},
                {"dim", s.ambient.dim()},
                {"quadrance", s.quadrance},
                {"classify", to_string(classify(s))}};
}

}  // namespace

std::map<std::string, json> generate() {
    std::map<std::string, json> out;

    // --- exact core -------------------------------------------------------
    {
        QMat m({vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"1", "1", "0"})});
        out["core-rank"] = json{{"rows", m}, {"rank", rank(m)}};
    }
    {
        QMat m({vec({"-1", "0", "-1"}), vec({"-1", "-1", "0"})});
        out["core-null-space"] = json{{"rows", m}, {"basis", null_space(m)}};
    }
    {
        QMat m({vec({"-2", "0"}), vec({"0", "-2"})});
        QVec b = vec({"1", "1"});
        auto sol = solve_linear(m, b);
        out["core-solve-linear"] = json{{"rows", m}, {"b", b}, {"solution", sol->particular}};
    }
    {
        std::vector<QVec> vs;
        for (long t = 0; t <= 3; ++t) vs.push_back(QVec({Rational(1), Rational(t), Rational(t * t)}));
        out["core-gp-vectors-moment"] =
            json{{"vectors", vs}, {"d", 3}, {"verdict", is_general_position_vectors(vs, 3)}};
    }
    {
        std::vector<QVec> ps{vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"}), vec({"1", "1"})};
        out["core-gp-points-square"] =
            json{{"points", ps}, {"verdict", is_general_position_points(ps, AffineSubspace::whole_space(2))}};
    }
    {
        std::vector<QVec> ps{vec({"0", "0", "0"}), vec({"1", "0", "0"}), vec({"0", "1", "0"}),
                             vec({"1", "1", "0"})};
        auto res = is_well_placed(ps, 3);
        json j{{"points", ps}, {"verdict", res.ok}};
        if (res.hyperplane) j["hyperplane"] = *res.hyperplane;
        out["core-well-placed-coplanar"] = j;
    }
    {
        AffineSubspace line(vec({"0", "0"}), {vec({"1", "1"})});
        QVec x = vec({"1", "0"});
        out["core-project-line"] = json{{"x", x}, {"target", line}, {"projection", orthogonal_project(x, line)}};
    }
    {
        std::vector<QVec> ps{vec({"0", "0", "0"}), vec({"1", "0", "0"}), vec({"0", "1", "0"})};
        out["core-affine-span-plane"] = json{{"points", ps}, {"span", affine_span(ps)}};
    }

    // --- sphere geometry ----------------------------------------------------
    AffineSubspace r3 = AffineSubspace::whole_space(3);
    {
        Sphere s(r3, vec({"0", "0", "0"}), q("9"));
        Hyperplane h(vec({"0", "0", "1"}), q("2"));
        out["sphere-hyperplane-cut"] =
            json{{"sphere", s}, {"hyperplane", h}, {"result", sphere_report(intersect_sphere_hyperplane(s, h))}};
    }
    {
        Sphere s1(r3, vec({"0", "0", "0"}), q("9"));
        Sphere s2(r3, vec({"5", "0", "0"}), q("16"));
        auto res = intersect_pair(s1, s2);
        out["sphere-pair-345"] = json{{"s1", s1},
                                      {"s2", s2},
                                      {"radical_plane", res.radical_plane},
                                      {"result", sphere_report(res.sphere)}};
    }
    std::vector<Sphere> three{Sphere(r3, vec({"0", "0", "0"}), q("1")),
                              Sphere(r3, vec({"1", "0", "0"}), q("1")),
                              Sphere(r3, vec({"0", "1", "0"}), q("1"))};
    {
        out["sphere-chain-three"] = json{{"spheres", three}, {"result", sphere_report(intersect_chain(three))}};
    }
    {
        std::vector<Sphere> two(three.begin(), three.begin() + 2);
        out["sphere-chain-two"] = json{{"spheres", two}, {"result", sphere_report(intersect_chain(two))}};
    }
    {
        QVec extra = vec({"2", "-1", "0"});
        out["sphere-enclose"] = json{{"spheres", three},
                                     {"extra_center", extra},
                                     {"result", sphere_report(enclose_from_dependent_center(three, extra))}};
    }
    {
        std::vector<QVec> cs{vec({"0", "0", "0"}), vec({"1", "0", "0"})};
        out["sphere-make-chain"] = json{{"centers", cs},
                                        {"seed_quadrance", q("1")},
                                        {"quadrances", make_nondegenerate_chain(cs, q("1"))}};
    }
    {
        std::vector<QVec> cs{vec({"0", "0", "0"}), vec({"1", "0", "0"}), vec({"2", "0", "0"}),
                             vec({"3", "0", "0"})};
        auto spheres = infinite_intersection_witness(cs);
        Sphere common = intersect_family(spheres);
        out["sphere-witness-collinear"] = json{{"centers", cs},
                                               {"spheres", spheres},
                                               {"common_intersection", sphere_report(common)}};
    }
    {
        // Four coplanar centers in ℝ³ span a hyperplane: three of them are
        // affinely independent, so every common intersection sits in a
        // 1-dimensional flat and has at most two points. No witness exists;
        // the verified negative outcome is itself the fixture.
        std::vector<QVec> cs{vec({"0", "0", "0"}), vec({"1", "0", "0"}), vec({"0", "1", "0"}),
                             vec({"1", "1", "0"})};
        json j{{"centers", cs}};
        try {
            infinite_intersection_witness(cs);
            j["result"] = "Witness";
        } catch (const UnsatisfiableCodimOneError& e) {
            j["result"] = "Unsatisfiable";
            j["reason"] = e.what();
        }
        out["sphere-witness-coplanar-unsat"] = j;
    }
    {
        std::vector<SphereFamily> fams;
        std::vector<Rational> qs;
        for (long i = 1; i <= 8; ++i) qs.push_back(Rational(i));
        fams.emplace_back(vec({"0", "0"}), qs);
        fams.emplace_back(vec({"1", "0"}), qs);
        out["sphere-mesh-two-families"] = json{{"d", 2}, {"families", fams}, {"result", mesh_of_family(fams, 2)}};
    }

    // --- duality ------------------------------------------------------------
    CenterConfig cfg(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {vec({"1", "1"})});
    {
        QVec query = vec({"1", "1"});
        out["duality-uspace"] = json{{"config", cfg}, {"q", query}, {"basis", u_space(cfg, query)}};
    }
    {
        QVec query = vec({"1", "1"});
        QVec u = vec({"1", "-1", "-1"});
        auto dd = ivan_coefficients(cfg, query, u);
        out["duality-ivan"] = json{{"config", cfg}, {"q", query}, {"dual", dd}};
    }
    {
        HPoint x(vec({"0", "0"}), q("1"));
        out["duality-phi"] = json{{"config", cfg}, {"x", x}, {"r", phi(cfg, x).r}};
    }
    {
        RadiiVector r(vec({"1", "2", "2"}));
        auto x = phi_inverse(cfg, r);
        out["duality-phi-inv"] = json{{"config", cfg}, {"r", r.r}, {"x", *x}};
    }
    {
        RadiiVector r(vec({"1", "2", "100"}));
        auto x = phi_inverse(cfg, r);
        out["duality-phi-inv-notine"] =
            json{{"config", cfg}, {"r", r.r}, {"result", x ? "HPoint" : "NotInE"}};
    }
    {
        QVec extra = cfg.extra_centers()[0];
        QVec u = u_space(cfg, extra)[0];
        DualDirection dd = ivan_coefficients(cfg, extra, u);
        dd.extra_index = 0;
        Hyperplane img = sphere_image_extra(cfg, dd, q("4"));
        HPoint x(vec({"1", "1"}), q("4"));
        out["duality-sphere-image-extra"] = json{{"config", cfg},
                                                 {"dual", dd},
                                                 {"k", q("4")},
                                                 {"hyperplane", img},
                                                 {"phi_of_on_sphere_point", phi(cfg, x).r},
                                                 {"on_hyperplane", img.contains(phi(cfg, x).r)}};
    }
    {
        std::vector<QVec> us{vec({"1", "2"}), vec({"0", "1"})};
        out["duality-basis-change"] = json{{"us", us}, {"matrix", basis_change(us)}};
    }
    {
        out["duality-directions"] = json{{"config", cfg}, {"directions", directions_from_centers(cfg)}};
    }

    // --- covering -------------------------------------------------------------
    {
        std::vector<QVec> pts{vec({"0", "0"}), vec({"1", "-1"})};
        DirectionStream stream = DirectionStream::moment_curve(2);
        auto a = greedy_drizzle_assign(pts, stream);
        std::vector<QVec> dirs;
        for (std::size_t k = 0; k < a.part_count(); ++k) dirs.push_back(stream.at(k));
        out["cover-drizzle-pair"] =
            json{{"assignment", a}, {"directions", dirs}, {"report", verify_hyperplane_cover(a, dirs)}};
    }
    {
        std::vector<Rational> x{q("0"), q("1")};
        auto s = difference_avoiding_set(x, q("1"), 3);
        out["cover-diff-avoiding"] = json{{"x", x}, {"epsilon", q("1")}, {"m", 3}, {"s", s}};
    }
    std::vector<std::vector<Rational>> cube_factors(3, {q("0"), q("1")});
    ZSet base = z_set_base(vec({"1", "1", "0"}), {q("0"), q("1/3")}, cube_factors);
    {
        out["cover-zset-base"] = json{{"zset", base}, {"cardinality", base.points().size()}};
    }
    {
        ZSet z = z_set_inductive(std::make_shared<ZSet>(base), vec({"0", "0", "1"}),
                                 {q("0"), q("5"), q("10")});
        out["cover-zset-inductive"] = json{{"zset", z}, {"cardinality", z.points().size()}};
    }
    {
        ZSet corners = z_set_base(vec({"1", "1", "0"}), {q("0")}, cube_factors);
        Box domain(vec({"0", "0", "0"}), vec({"1", "1", "1"}));
        PointAssignment covered;
        covered.points = corners.points();
        covered.part_of.assign(covered.points.size(), 1);
        auto res = escape_search(covered, {vec({"1", "0", "0"})}, corners, {vec({"0", "0", "0"})}, domain);
        out["cover-escape-covered"] = json{{"zset", corners}, {"result", res}};
        PointAssignment empty;
        auto res2 = escape_search(empty, {}, corners, {vec({"0", "0", "0"})}, domain);
        out["cover-escape-witness"] = json{{"zset", corners}, {"result", res2}};
    }

    return out;
}

}  // namespace spraylab::fixtures
