#include "spraylab/json_io.hpp"

#include <nlohmann/json.hpp>

namespace spraylab {

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
    if (j.is_number_integer()) {
        r = Rational(j.get<long>());
        return;
    }
    if (!j.is_string()) throw InputError("rational must be a \"num/den\" string or integer");
    r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const QVec& v) {
    j = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) j.push_back(v[i].str());
}

void from_json(const json& j, QVec& v) {
    if (!j.is_array()) throw InputError("vector must be an array");
    std::vector<Rational> xs;
    xs.reserve(j.size());
    for (const auto& e : j) xs.push_back(e.get<Rational>());
    v = QVec(std::move(xs));
}

void to_json(json& j, const QMat& m) {
    j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}

void from_json(const json& j, QMat& m) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<QVec> rows;
    for (const auto& e : j) rows.push_back(e.get<QVec>());
    m = QMat(std::move(rows));
}

void to_json(json& j, const Hyperplane& h) { j = json{{"normal", h.normal}, {"offset", h.offset}}; }

void from_json(const json& j, Hyperplane& h) {
    h = Hyperplane(j.at("normal").get<QVec>(), j.at("offset").get<Rational>());
}

void to_json(json& j, const AffineSubspace& e) {
    j = json{{"base", e.base()}, {"directions", e.directions()}};
}

void from_json(const json& j, AffineSubspace& e) {
    e = AffineSubspace(j.at("base").get<QVec>(), j.at("directions").get<std::vector<QVec>>());
}

void to_json(json& j, const Sphere& s) {
    j = json{{"ambient", s.ambient}, {"center", s.center}, {"quadrance", s.quadrance}};
}

void from_json(const json& j, Sphere& s) {
    QVec center = j.at("center").get<QVec>();
    AffineSubspace ambient = j.contains("ambient") ? j.at("ambient").get<AffineSubspace>()
                                                   : AffineSubspace::whole_space(center.dim());
    s = Sphere(std::move(ambient), std::move(center), j.at("quadrance").get<Rational>());
}

void to_json(json& j, const SphereFamily& f) {
    j = json{{"center", f.center}, {"quadrances", f.quadrances}};
}

void from_json(const json& j, SphereFamily& f) {
    f = SphereFamily(j.at("center").get<QVec>(), j.at("quadrances").get<std::vector<Rational>>());
}

void to_json(json& j, const CenterConfig& cfg) {
    j = json{{"d", cfg.d()}, {"basis_centers", cfg.basis_centers()}, {"extra_centers", cfg.extra_centers()}};
}

CenterConfig center_config_from_json(const json& j) {
    std::vector<QVec> extra;
    if (j.contains("extra_centers")) extra = j.at("extra_centers").get<std::vector<QVec>>();
    return CenterConfig(j.at("d").get<std::size_t>(), j.at("basis_centers").get<std::vector<QVec>>(),
                        std::move(extra));
}

void to_json(json& j, const HPoint& x) { j = json{{"base", x.base}, {"height_sq", x.height_sq}}; }

void from_json(const json& j, HPoint& x) {
    x = HPoint(j.at("base").get<QVec>(), j.at("height_sq").get<Rational>());
}

void to_json(json& j, const DualDirection& dd) {
    j = json{{"u", dd.u}, {"b", dd.b}, {"c", dd.c}, {"extra_index", dd.extra_index}};
}

void from_json(const json& j, DualDirection& dd) {
    dd.u = j.at("u").get<QVec>();
    dd.b = j.at("b").get<Rational>();
    dd.c = j.at("c").get<Rational>();
    dd.extra_index = j.value("extra_index", std::size_t{0});
}

void to_json(json& j, const PointAssignment& a) {
    j = json{{"points", a.points}, {"parts", a.part_of}};
}

void from_json(const json& j, PointAssignment& a) {
    a.points = j.at("points").get<std::vector<QVec>>();
    a.part_of = j.at("parts").get<std::vector<std::size_t>>();
    a.validate();
}

void to_json(json& j, const SprayPoint& p) {
    j = json{{"base", p.base}, {"height_sq", p.height_sq}, {"lower", p.lower}};
}

void from_json(const json& j, SprayPoint& p) {
    p.base = j.at("base").get<QVec>();
    p.height_sq = j.at("height_sq").get<Rational>();
    if (p.height_sq.sign() < 0) throw InputError("height squared must be nonnegative");
    p.lower = j.value("lower", false);
}

void to_json(json& j, const HalfSpaceCover& c) {
    j = json{{"points", c.points}, {"parts", c.part_of}, {"centers", c.centers}};
}

void to_json(json& j, const SprayAssignment& a) {
    j = json{{"points", a.points}, {"parts", a.part_of}, {"centers", a.centers}};
}

void from_json(const json& j, SprayAssignment& a) {
    a.points = j.at("points").get<std::vector<QVec>>();
    a.part_of = j.at("parts").get<std::vector<std::size_t>>();
    a.centers = j.at("centers").get<std::vector<QVec>>();
}

void to_json(json& j, const PartReport& r) {
    json hist = json::object();
    for (const auto& [mult, classes] : r.histogram) hist[std::to_string(mult)] = classes;
    j = json{{"part", r.part},
             {"size", r.size},
             {"max_multiplicity", r.max_multiplicity},
             {"histogram", std::move(hist)}};
    if (r.worst_witness) j["worst_witness"] = *r.worst_witness;
}

void to_json(json& j, const CoverReport& r) {
    j = json{{"max_multiplicity", r.max_multiplicity}, {"parts", r.parts}};
}

void to_json(json& j, const MeshResult& r) {
    j = json::object();
    if (r.mesh)
        j["mesh"] = *r.mesh;
    else
        j["mesh"] = nullptr;
    json witness = json::array();
    for (const auto& w : r.witness_below)
        witness.push_back(json{{"family", w.family}, {"quadrance_index", w.quadrance_index}});
    j["witness_tuple_for_r_minus_1"] = std::move(witness);
}

void to_json(json& j, const Box& b) { j = json{{"lo", b.lo}, {"hi", b.hi}}; }

void from_json(const json& j, Box& b) { b = Box(j.at("lo").get<QVec>(), j.at("hi").get<QVec>()); }

void to_json(json& j, const EscapeResult& r) {
    if (!r.found) {
        j = json{{"result", "Exhausted"}};
        return;
    }
    j = json{{"result", "Witness"},
             {"translate_index", r.translate_index},
             {"translate", r.translate},
             {"witness", r.witness}};
}

void to_json(json& j, const ZSet& z) {
    if (z.kind() == ZSet::Kind::Base) {
        j = json{{"kind", "base"}, {"v", z.v()}, {"s", z.s()}, {"factors", z.factors()}};
    } else {
        json inner;
        to_json(inner, z.inner());
        j = json{{"kind", "inductive"}, {"v", z.v()}, {"s", z.s()}, {"inner", std::move(inner)}};
    }
    j["points"] = z.points();
}

ZSet z_set_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "base")
        return z_set_base(j.at("v").get<QVec>(), j.at("s").get<std::vector<Rational>>(),
                          j.at("factors").get<std::vector<std::vector<Rational>>>());
    if (kind == "inductive")
        return z_set_inductive(std::make_shared<ZSet>(z_set_from_json(j.at("inner"))), j.at("v").get<QVec>(),
                               j.at("s").get<std::vector<Rational>>());
    throw InputError("unknown construction kind: " + kind);
}

}  // namespace spraylab
