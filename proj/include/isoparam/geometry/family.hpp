#pragma once

#include <isoparam/jacobi/jacobi.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace isoparam::geometry {

using jacobi::Jet;

enum class FamilyKind { horosphere, geodesic_sphere, equidistant, totally_geodesic, sphere_in_sn, clifford, custom };

const char* to_string(FamilyKind k);

// Principal curvatures of one multiplicity class, as a jet in s about s0.
struct CurvatureGroup {
  int multiplicity = 1;
  std::function<Jet(double s0, std::size_t length)> jet;
};

// Parallel family {M_s} of isoparametric hypersurfaces of Q_eps^n with outward
// orientation (unit normal along increasing s).
struct ParallelFamily {
  int n = 0;
  int epsilon = -1;
  FamilyKind kind = FamilyKind::custom;
  std::string id;
  double lo = 0.0;  // open domain (lo, hi); infinities allowed
  double hi = 0.0;
  std::vector<CurvatureGroup> groups;
  std::optional<double> constant_mean;

  bool contains(double s) const { return s > lo && s < hi; }
  // n-1 values k_i^s.
  std::vector<double> principal_curvatures(double s) const;
  double mean_curvature(double s) const;
  Jet mean_curvature_jet(double s0, std::size_t length = Jet::kDefaultOrder + 1) const;
};

// k = -1 (horospheres of H^n).
ParallelFamily horosphere_family(int n);
// Distance spheres: -coth s in H^n, -cot s in S^n (sphere_in_sn).
ParallelFamily geodesic_sphere_family(int n, int epsilon);
// Distance s from a totally geodesic H^(n-1): -tanh s.
ParallelFamily equidistant_family(int n);
// Parallels of a totally geodesic hypersurface, s = 0 totally geodesic:
// -tanh s in H^n, tan s in S^n.
ParallelFamily totally_geodesic_family(int n, int epsilon);
// S^p(cos s) x S^q(sin s) in S^n, p + q = n - 1: tan s (p times), -cot s (q times).
ParallelFamily clifford_family(int n, int p);
// Same leaves with the opposite unit normal; every k_i changes sign.
ParallelFamily reversed(const ParallelFamily& f);

// Every catalog entry for ambient dimension n (Clifford with p = 1..n-2).
std::vector<ParallelFamily> catalog(int n);
// Throws PreconditionError for an unknown id.
ParallelFamily family_by_id(int n, const std::string& id);

// Vertical cylinder over the leaf at s0: theta = 0, a = diag(0, k_1^s0, ...).
jacobi::ShapeSpec cylinder_spec(const ParallelFamily& f, double s0);

nlohmann::json to_json(const ParallelFamily& f);

}  // namespace isoparam::geometry
