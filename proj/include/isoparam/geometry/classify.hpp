#pragma once

#include <isoparam/geometry/family.hpp>

#include <optional>
#include <string>

namespace isoparam::geometry {

enum class ClassTag { slice, vertical_cylinder, parabolic_bowl, non_isoparametric };

const char* to_string(ClassTag t);

struct HypersurfaceClass {
  ClassTag tag = ClassTag::non_isoparametric;
  std::optional<double> t0;  // slice height
  std::string base_family;   // cylinder base
  std::optional<double> H;   // bowl
  std::string reason;
};

// What the caller knows about the level hypersurfaces and the rho-function.
struct LevelDescriptor {
  std::optional<FamilyKind> level_kind;  // catalog family of the levels, if any
  std::string family_id;
  std::optional<double> rho;
  std::optional<double> H;
  std::optional<double> t0;
};

// Constant-angle hypersurface of Q_eps^n x R with constant principal
// curvatures. Throws PreconditionError on |theta| > 1, a bad eps or n, or a
// descriptor contradicting rho^2 + theta^2 = 1 or the ambient sign.
HypersurfaceClass classify(int n, int epsilon, double theta, const LevelDescriptor& d);

nlohmann::json to_json(const HypersurfaceClass& c);

}  // namespace isoparam::geometry
