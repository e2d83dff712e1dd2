#ifndef SPRAYLAB_JSON_IO_HPP
#define SPRAYLAB_JSON_IO_HPP

#include "spraylab/covering.hpp"
#include "spraylab/sphere.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spraylab {

using json = nlohmann::json;

// Rationals serialize as canonical "num/den" strings ("3", "-3/2"); vectors
// and matrices as (nested) arrays of such strings.
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const QVec& v);
void from_json(const json& j, QVec& v);

void to_json(json& j, const QMat& m);
void from_json(const json& j, QMat& m);

void to_json(json& j, const Hyperplane& h);
void from_json(const json& j, Hyperplane& h);

void to_json(json& j, const AffineSubspace& e);
void from_json(const json& j, AffineSubspace& e);

// {ambient: {base, directions}, center, quadrance}; "ambient" may be omitted
// on input, defaulting to the whole space of the center's dimension.
void to_json(json& j, const Sphere& s);
void from_json(const json& j, Sphere& s);

void to_json(json& j, const SphereFamily& f);
void from_json(const json& j, SphereFamily& f);

void to_json(json& j, const CenterConfig& cfg);
CenterConfig center_config_from_json(const json& j);

void to_json(json& j, const HPoint& x);
void from_json(const json& j, HPoint& x);

void to_json(json& j, const DualDirection& dd);
void from_json(const json& j, DualDirection& dd);

void to_json(json& j, const PointAssignment& a);
void from_json(const json& j, PointAssignment& a);

void to_json(json& j, const SprayPoint& p);
void from_json(const json& j, SprayPoint& p);

void to_json(json& j, const HalfSpaceCover& c);
void to_json(json& j, const SprayAssignment& a);
void from_json(const json& j, SprayAssignment& a);

void to_json(json& j, const PartReport& r);
void to_json(json& j, const CoverReport& r);

void to_json(json& j, const MeshResult& r);

void to_json(json& j, const Box& b);
void from_json(const json& j, Box& b);

void to_json(json& j, const EscapeResult& r);

// ZSets serialize their construction tree (auditable), plus the flattened
// points; rebuilding re-runs every precondition check.
void to_json(json& j, const ZSet& z);
ZSet z_set_from_json(const json& j);

}  // namespace spraylab

#endif
