#pragma once

#include "edl/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edl {

enum class Family { A, B, C, D, E, F, G, BC };

std::string to_string(Family f);
Family family_from_string(std::string_view s);

struct RootFamily {
  Family family;
  int rank;
};

// Low ranks fold onto their isomorphic family: B1 -> A1, C1 -> A1,
// C2 -> B2, D3 -> A3.  Throws on ranks with no simple system (D2, E5, ...).
RootFamily canonical_family(RootFamily f);

struct RootVector {
  std::vector<int> coeffs;    // coordinates w.r.t. the simple roots
  std::vector<Rat> embedding; // Euclidean realization, exact
  Rat norm_sq;
};

class RootSystem {
 public:
  RootSystem() = default;

  const RootFamily& family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  // Inner products carry a global rational scale so that long roots have
  // norm_sq == 2 while coordinates stay rational.
  const Rat& metric_scale() const { return metric_scale_; }

  const std::vector<RootVector>& simple_roots() const { return simple_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  const RootVector& highest_root() const { return highest_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const Int& weyl_order() const { return weyl_order_; }
  const Int& center_order() const { return center_order_; }

  Rat inner(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
  Rat max_norm_sq() const;  // == 2 by normalization
  bool is_long(const RootVector& r) const { return r.norm_sq == max_norm_sq(); }

 private:
  friend RootSystem build_root_system(RootFamily f);
  RootFamily family_{};
  int rank_ = 0;
  int ambient_dim_ = 0;
  Rat metric_scale_ = 1;
  std::vector<RootVector> simple_;
  std::vector<RootVector> positive_;
  RootVector highest_;
  std::vector<int> degrees_;
  Int weyl_order_;
  Int center_order_;
};

RootSystem build_root_system(RootFamily f);
inline RootSystem build_root_system(Family fam, int rank) {
  return build_root_system(RootFamily{fam, rank});
}

// Coroot 2a/|a|^2 in the Euclidean embedding, exact.
std::vector<Rat> coroot(const RootSystem& rs, const RootVector& alpha);

// Order of the group generated by the simple reflections, obtained by
// closing the induced permutation action on the full root set.  Independent
// of the stored degree tables; capped at rank 6.
Int weyl_order_by_enumeration(const RootSystem& rs);

struct RelationReport {
  Int lhs;  // |W|
  Int rhs;  // |Z| r! prod n_i
  bool pass;
};
RelationReport verify_relation(const RootSystem& rs);

// Gram determinant of the simple coroots (exact) and its square root.
Rat coroot_gram_det(const RootSystem& rs);
double coroot_fundamental_volume(const RootSystem& rs);

enum class Orbit { Long, Short, DoubleLong, DoubleShort };
std::string to_string(Orbit o);

struct MultiplicityFunction {
  Rat long_orbit{0};
  Rat short_orbit{0};
  Rat double_long{0};
  Rat double_short{0};

  const Rat& operator[](Orbit o) const;
  Rat& operator[](Orbit o);
  static MultiplicityFunction constant(const Rat& k) { return {k, k, 0, 0}; }
};

// A possibly non-reduced system: a reduced base plus, for BC type, the
// doubled roots (exactly the doubles of one base orbit).
struct NonReducedRootSystem {
  RootSystem base;
  std::vector<RootVector> doubled;  // empty unless BC
  MultiplicityFunction multiplicity;

  bool has_doubles() const { return !doubled.empty(); }
};

// family = BC builds base A1 (rank 1) or B_rank plus the doubled orbit;
// any other family gives a reduced system with the given multiplicities.
NonReducedRootSystem build_nonreduced(RootFamily base_family, MultiplicityFunction mult);

inline NonReducedRootSystem reduced_with_constant(const RootSystem& rs, const Rat& k) {
  NonReducedRootSystem nr;
  nr.base = rs;
  nr.multiplicity = MultiplicityFunction::constant(k);
  return nr;
}

struct OrbitRoot {
  const RootVector* root;
  Orbit orbit;
};

// Positive roots of the full system tagged with their orbit.
std::vector<OrbitRoot> positive_orbit_roots(const NonReducedRootSystem& R);

// Highest root of the full system (for BC this is the doubled highest).
RootVector full_highest_root(const NonReducedRootSystem& R);

}  // namespace edl
