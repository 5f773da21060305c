#include <isoparam/errors.hpp>
#include <isoparam/geometry/classify.hpp>

#include <cmath>

namespace isoparam::geometry {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double kDataTol = 1e-9;

// Ambient sign each catalog kind lives in; 0 when both occur.
int kind_epsilon(FamilyKind k) {
  switch (k) {
    case FamilyKind::horosphere:
    case FamilyKind::geodesic_sphere:
    case FamilyKind::equidistant: return -1;
    case FamilyKind::sphere_in_sn:
    case FamilyKind::clifford: return 1;
    case FamilyKind::totally_geodesic:
    case FamilyKind::custom: return 0;
  }
  return 0;
}

}  // namespace

const char* to_string(ClassTag t) {
  switch (t) {
    case ClassTag::slice: return "slice";
    case ClassTag::vertical_cylinder: return "vertical_cylinder";
    case ClassTag::parabolic_bowl: return "parabolic_bowl";
    case ClassTag::non_isoparametric: return "non_isoparametric";
  }
  return "non_isoparametric";
}

HypersurfaceClass classify(int n, int epsilon, double theta, const LevelDescriptor& d) {
  if (n < 2) throw PreconditionError("classify: n must be >= 2");
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("classify: epsilon must be +-1");
  if (!(std::abs(theta) <= 1.0 + kAngleTol)) throw PreconditionError("classify: |theta| must be <= 1");
  if (d.rho && std::abs(*d.rho * *d.rho + theta * theta - 1.0) > kDataTol)
    throw PreconditionError("classify: descriptor violates rho^2 + theta^2 = 1");
  if (d.level_kind) {
    const int e = kind_epsilon(*d.level_kind);
    if (e != 0 && e != epsilon) throw PreconditionError("classify: level family lives in the other space form");
  }

  HypersurfaceClass out;
  if (std::abs(1.0 - theta * theta) <= kAngleTol) {
    out.tag = ClassTag::slice;
    out.t0 = d.t0;
    out.reason = "theta^2 = 1";
    return out;
  }
  if (std::abs(theta) <= kAngleTol) {
    if (d.level_kind && *d.level_kind != FamilyKind::custom) {
      out.tag = ClassTag::vertical_cylinder;
      out.base_family = d.family_id.empty() ? to_string(*d.level_kind) : d.family_id;
      out.reason = "theta = 0 over a catalog isoparametric base";
    } else {
      out.reason = "theta = 0 but the base is not a catalog isoparametric family";
    }
    return out;
  }
  if (epsilon == 1) {
    out.reason = "0 < theta^2 < 1 does not occur in S^n x R";
    return out;
  }
  if (d.level_kind != FamilyKind::horosphere) {
    out.reason = "0 < theta^2 < 1 requires horosphere levels";
    return out;
  }
  if (!d.rho || !d.H) {
    out.reason = "rho and H are needed to test rho H^s + H = 0";
    return out;
  }
  const double hs = -(n - 1.0);
  if (std::abs(*d.rho * hs + *d.H) <= kDataTol) {
    out.tag = ClassTag::parabolic_bowl;
    out.H = d.H;
    out.base_family = "horosphere";
    out.reason = "rho H^s + H = 0 over horospheres";
  } else {
    out.reason = "rho H^s + H != 0";
  }
  return out;
}

nlohmann::json to_json(const HypersurfaceClass& c) {
  nlohmann::json j{{"tag", to_string(c.tag)}, {"reason", c.reason}};
  if (c.t0) j["t0"] = *c.t0;
  if (!c.base_family.empty()) j["base_family"] = c.base_family;
  if (c.H) j["H"] = *c.H;
  return j;
}

}  // namespace isoparam::geometry
