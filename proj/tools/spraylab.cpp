#include "fixtures.hpp"

#include <spraylab/json_io.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace spraylab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // verified negative mathematical result
constexpr int kExitInput = 2;     // malformed input / violated precondition

constexpr const char* kVersion = "0.1.0";

/// Verified negative outcome (NotInE, Exhausted, …): exit 1, not an input error.
struct NegativeResult {
    json report;
};

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Ctx {
    std::uint64_t seed = 0;
    std::string output;  // empty = stdout
    json input_hashes = json::object();

    json read_input(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        input_hashes[fs::path(path).filename().string()] = fnv1a_hex(ss.str());
        try {
            return json::parse(ss.str());
        } catch (const json::exception& e) {
            throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
        }
    }

    json manifest() const {
        return json{{"tool", "spraylab"}, {"version", kVersion}, {"inputs", input_hashes}, {"seed", seed}};
    }

    void emit(json report) const {
        report["manifest"] = manifest();
        std::string text = report.dump(2) + "\n";
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output);
            if (!out) throw InputError("cannot open output file: " + output);
            out << text;
        }
    }
};

json sphere_report(const Sphere& s) {
    return json{{"sphere", s},
                {"dim", s.ambient.dim()},
                {"quadrance", s.quadrance},
                {"classify", to_string(classify(s))}};
}

// ---------------------------------------------------------------- gp-check

int run_gp_check(Ctx& ctx, const std::string& input, const std::string& mode, std::size_t ambient_dim) {
    json in = ctx.read_input(input);
    json report{{"command", "gp-check"}, {"mode", mode}};
    bool verdict = false;
    if (mode == "vectors") {
        auto vs = in.at("vectors").get<std::vector<QVec>>();
        if (vs.empty()) throw InputError("empty vector list");
        auto bad = general_position_vectors_witness(vs, ambient_dim ? ambient_dim : vs[0].dim());
        verdict = !bad.has_value();
        if (bad) report["violating_subset"] = *bad;
    } else if (mode == "points") {
        auto ps = in.at("points").get<std::vector<QVec>>();
        if (ps.empty()) throw InputError("empty point list");
        auto bad = general_position_points_witness(
            ps, AffineSubspace::whole_space(ambient_dim ? ambient_dim : ps[0].dim()));
        verdict = !bad.has_value();
        if (bad) report["violating_subset"] = *bad;
    } else if (mode == "well-placed") {
        auto ps = in.at("points").get<std::vector<QVec>>();
        if (ps.empty()) throw InputError("empty point list");
        auto res = is_well_placed(ps, ambient_dim ? ambient_dim : ps[0].dim());
        verdict = res.ok;
        if (res.hyperplane) report["hyperplane"] = *res.hyperplane;
        if (res.violating_subset) report["violating_subset"] = *res.violating_subset;
    } else {
        throw InputError("unknown mode: " + mode);
    }
    report["verdict"] = verdict;
    ctx.emit(report);
    return verdict ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- spheres

int run_spheres(Ctx& ctx, const std::string& sub, const std::string& input) {
    json in = ctx.read_input(input);
    if (sub == "intersect") {
        if (in.contains("hyperplane")) {
            Sphere s = in.at("sphere").get<Sphere>();
            Hyperplane h = in.at("hyperplane").get<Hyperplane>();
            ctx.emit(json{{"command", "spheres intersect"},
                          {"result", sphere_report(intersect_sphere_hyperplane(s, h))}});
            return kExitOk;
        }
        auto spheres = in.at("spheres").get<std::vector<Sphere>>();
        if (spheres.size() != 2) throw InputError("expected exactly two spheres");
        auto res = intersect_pair(spheres[0], spheres[1]);
        ctx.emit(json{{"command", "spheres intersect"},
                      {"radical_plane", res.radical_plane},
                      {"result", sphere_report(res.sphere)}});
        return kExitOk;
    }
    if (sub == "chain") {
        auto spheres = in.at("spheres").get<std::vector<Sphere>>();
        Sphere res = intersect_chain(spheres);
        json rep = sphere_report(res);
        rep["command"] = "spheres chain";
        ctx.emit(rep);
        return kExitOk;
    }
    if (sub == "enclose") {
        auto spheres = in.at("spheres").get<std::vector<Sphere>>();
        QVec extra = in.at("extra_center").get<QVec>();
        ctx.emit(json{{"command", "spheres enclose"},
                      {"result", sphere_report(enclose_from_dependent_center(spheres, extra))}});
        return kExitOk;
    }
    if (sub == "witness") {
        auto centers = in.at("centers").get<std::vector<QVec>>();
        try {
            auto spheres = infinite_intersection_witness(centers);
            Sphere common = intersect_family(spheres);
            ctx.emit(json{{"command", "spheres witness"},
                          {"spheres", spheres},
                          {"common_intersection", sphere_report(common)}});
            return kExitOk;
        } catch (const UnsatisfiableCodimOneError& e) {
            ctx.emit(json{{"command", "spheres witness"}, {"result", "Unsatisfiable"}, {"reason", e.what()}});
            return kExitNegative;
        }
    }
    if (sub == "mesh") {
        auto families = in.at("families").get<std::vector<SphereFamily>>();
        std::size_t d = in.at("d").get<std::size_t>();
        MeshResult res = mesh_of_family(families, d);
        json rep = res;
        rep["command"] = "spheres mesh";
        ctx.emit(rep);
        return res.mesh ? kExitOk : kExitNegative;
    }
    throw InputError("unknown spheres subcommand: " + sub);
}

// ---------------------------------------------------------------- duality

int run_duality(Ctx& ctx, const std::string& sub, const std::string& config_path, const std::string& input) {
    if (sub == "basis-change") {
        json in = ctx.read_input(input);
        auto us = in.at("us").get<std::vector<QVec>>();
        ctx.emit(json{{"command", "duality basis-change"}, {"matrix", basis_change(us)}});
        return kExitOk;
    }
    CenterConfig cfg = center_config_from_json(ctx.read_input(config_path));
    if (sub == "dualize") {
        auto dirs = directions_from_centers(cfg);
        json duals = json::array();
        for (std::size_t jx = 0; jx < cfg.extra_centers().size(); ++jx) {
            const QVec& q = cfg.extra_centers()[jx];
            DualDirection dd = ivan_coefficients(cfg, q, u_space(cfg, q)[0]);
            dd.extra_index = jx;
            duals.push_back(dd);
        }
        ctx.emit(json{{"command", "duality dualize"}, {"directions", dirs}, {"duals", duals}});
        return kExitOk;
    }
    json in = ctx.read_input(input);
    if (sub == "phi") {
        HPoint x = in.get<HPoint>();
        ctx.emit(json{{"command", "duality phi"}, {"r", phi(cfg, x).r}});
        return kExitOk;
    }
    if (sub == "phi-inv") {
        RadiiVector r(in.at("r").get<QVec>());
        auto x = phi_inverse(cfg, r);
        if (!x) {
            ctx.emit(json{{"command", "duality phi-inv"}, {"result", "NotInE"}});
            return kExitNegative;
        }
        ctx.emit(json{{"command", "duality phi-inv"}, {"x", *x}});
        return kExitOk;
    }
    if (sub == "uspace") {
        QVec q = in.at("q").get<QVec>();
        ctx.emit(json{{"command", "duality uspace"}, {"basis", u_space(cfg, q)}});
        return kExitOk;
    }
    if (sub == "ivan") {
        QVec q = in.at("q").get<QVec>();
        QVec u = in.at("u").get<QVec>();
        ctx.emit(json{{"command", "duality ivan"}, {"dual", ivan_coefficients(cfg, q, u)}});
        return kExitOk;
    }
    throw InputError("unknown duality subcommand: " + sub);
}

// ---------------------------------------------------------------- cover

std::vector<QVec> random_points(std::size_t count, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 50);
    std::set<QVec> seen;
    std::vector<QVec> out;
    while (out.size() < count) {
        QVec p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = Rational(num(rng), den(rng));
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

int run_cover(Ctx& ctx, const std::string& sub, const std::string& config_path, const std::string& input,
              std::size_t count, std::size_t dim, bool glue) {
    if (sub == "drizzle") {
        std::vector<QVec> points;
        if (!input.empty()) {
            points = ctx.read_input(input).at("points").get<std::vector<QVec>>();
            if (points.empty()) throw InputError("empty point list");
            dim = points[0].dim();
        } else {
            if (count == 0 || dim == 0) throw InputError("synthetic run needs --count and --dim");
            points = random_points(count, dim, ctx.seed);
        }
        DirectionStream stream = DirectionStream::moment_curve(dim);
        PointAssignment a = greedy_drizzle_assign(points, stream);
        std::vector<QVec> dirs;
        for (std::size_t k = 0; k < a.part_count(); ++k) dirs.push_back(stream.at(k));
        ctx.emit(json{{"command", "cover drizzle"},
                      {"assignment", a},
                      {"directions", dirs},
                      {"report", verify_hyperplane_cover(a, dirs)}});
        return kExitOk;
    }
    json in = ctx.read_input(input);
    if (sub == "pullback") {
        CenterConfig cfg = center_config_from_json(ctx.read_input(config_path));
        PointAssignment a = in.get<PointAssignment>();
        HalfSpaceCover cover = pullback_drizzle_cover(cfg, a);
        ctx.emit(json{{"command", "cover pullback"}, {"cover", cover}, {"report", verify_spray_cover(cover)}});
        return kExitOk;
    }
    if (sub == "verify") {
        if (in.contains("directions")) {
            PointAssignment a = in.get<PointAssignment>();
            auto dirs = in.at("directions").get<std::vector<QVec>>();
            ctx.emit(json{{"command", "cover verify"}, {"report", verify_hyperplane_cover(a, dirs)}});
            return kExitOk;
        }
        SprayAssignment a = in.get<SprayAssignment>();
        ctx.emit(json{{"command", "cover verify"}, {"report", verify_spray_cover(a)}});
        return kExitOk;
    }
    if (sub == "zset") {
        ZSet z = z_set_from_json(in);
        ctx.emit(json{{"command", "cover zset"}, {"zset", z}, {"cardinality", z.points().size()}});
        return kExitOk;
    }
    if (sub == "escape") {
        PointAssignment a = in.at("assignment").get<PointAssignment>();
        auto dirs = in.at("directions").get<std::vector<QVec>>();
        ZSet z = z_set_from_json(in.at("zset"));
        auto translates = in.at("translates").get<std::vector<QVec>>();
        Box domain = in.at("domain").get<Box>();
        EscapeResult res = escape_search(a, dirs, z, translates, domain);
        json rep{{"command", "cover escape"}, {"result", res}};
        ctx.emit(rep);
        return res.found ? kExitOk : kExitNegative;
    }
    if (sub == "project") {
        SprayAssignment a = in.get<SprayAssignment>();
        Hyperplane h = in.at("hyperplane").get<Hyperplane>();
        SprayAssignment proj = project_assignment(a, h, glue);
        ctx.emit(json{{"command", "cover project"},
                      {"assignment", proj},
                      {"report", verify_spray_cover(proj)}});
        return kExitOk;
    }
    throw InputError("unknown cover subcommand: " + sub);
}

// ---------------------------------------------------------------- fixtures

int run_fixtures(Ctx& ctx, const std::string& dir, bool write) {
    auto all = spraylab::fixtures::generate();
    json results = json::object();
    bool ok = true;
    for (const auto& [name, content] : all) {
        fs::path path = fs::path(dir) / (name + ".json");
        std::string text = content.dump(2) + "\n";
        if (write) {
            fs::create_directories(dir);
            std::ofstream out(path);
            out << text;
            results[name] = "written";
            continue;
        }
        std::ifstream in(path);
        if (!in) {
            results[name] = "missing";
            ok = false;
            continue;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        bool match = ss.str() == text;  // byte-identical comparison
        results[name] = match ? "match" : "mismatch";
        ok = ok && match;
    }
    ctx.emit(json{{"command", "fixtures"}, {"mode", write ? "write" : "check"}, {"fixtures", results}});
    return (write || ok) ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spraylab — exact rational sphere/spray geometry toolkit"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--seed", ctx.seed, "Seed for synthetic point generation");
    app.add_option("-o,--output", ctx.output, "Write the JSON report here instead of stdout");

    std::string input, config, mode = "points", sub, fixture_dir = "fixtures";
    std::size_t ambient_dim = 0, count = 0, dim = 0;
    bool glue = false, write_fixtures = false;

    auto* gp = app.add_subcommand("gp-check", "General-position / well-placed predicates");
    gp->add_option("-i,--input", input, "Input JSON")->required();
    gp->add_option("--mode", mode, "points|vectors|well-placed");
    gp->add_option("--ambient-dim", ambient_dim, "Ambient dimension (default: inferred)");

    auto* spheres = app.add_subcommand("spheres", "Sphere-intersection calculus");
    spheres->require_subcommand(1);
    for (const char* name : {"intersect", "chain", "enclose", "witness", "mesh"})
        spheres->add_subcommand(name)->add_option("-i,--input", input, "Input JSON")->required();

    auto* duality = app.add_subcommand("duality", "Half-space ↔ radii-vector transform");
    duality->require_subcommand(1);
    for (const char* name : {"phi", "phi-inv", "uspace", "ivan", "dualize", "basis-change"}) {
        auto* s = duality->add_subcommand(name);
        s->add_option("-c,--config", config, "Center configuration JSON");
        s->add_option("-i,--input", input, "Input JSON");
    }

    auto* cover = app.add_subcommand("cover", "Covering constructions and audits");
    cover->require_subcommand(1);
    for (const char* name : {"drizzle", "pullback", "verify", "zset", "escape", "project"}) {
        auto* s = cover->add_subcommand(name);
        s->add_option("-c,--config", config, "Center configuration JSON");
        s->add_option("-i,--input", input, "Input JSON");
        s->add_option("--count", count, "Synthetic point count");
        s->add_option("--dim", dim, "Synthetic point dimension");
        s->add_flag("--glue", glue, "Merge parts with coinciding projected centers");
    }

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Regenerate and compare golden worked examples");
    fixtures_cmd->add_option("--dir", fixture_dir, "Fixture directory");
    fixtures_cmd->add_flag("--write", write_fixtures, "Write fixtures instead of comparing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    if (const char* env = std::getenv("SPRAYLAB_SEED")) ctx.seed = std::strtoull(env, nullptr, 10);

    const auto started = std::chrono::steady_clock::now();
    int code = kExitInput;
    try {
        if (gp->parsed()) {
            code = run_gp_check(ctx, input, mode, ambient_dim);
        } else if (spheres->parsed()) {
            code = run_spheres(ctx, spheres->get_subcommands()[0]->get_name(), input);
        } else if (duality->parsed()) {
            code = run_duality(ctx, duality->get_subcommands()[0]->get_name(), config, input);
        } else if (cover->parsed()) {
            code = run_cover(ctx, cover->get_subcommands()[0]->get_name(), config, input, count, dim, glue);
        } else if (fixtures_cmd->parsed()) {
            code = run_fixtures(ctx, fixture_dir, write_fixtures);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    // Timing goes to stderr so reports stay byte-identical across runs.
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return code;
}
