#pragma once

// Standard sobrification and the ad-sobrification by irreducible pairs.

#include <string>
#include <vector>

#include "adlab/adframe.hpp"
#include "adlab/finord.hpp"

namespace adlab {

struct Sobrification {
  Topology space;
  std::vector<Subset> points;  // irreducible closed sets, canonical order
  PointMap unit;               // x -> cl{x}
};

Sobrification standard_sobrification(const Topology& x);

/// (C, [x]) with the class given by its smallest member.
struct IrreduciblePair {
  Subset closed = 0;
  int rep = 0;

  friend bool operator==(const IrreduciblePair&, const IrreduciblePair&) = default;
};

/// Pairs in canonical order of C, then representative. Conditions are also
/// evaluated at a second member of each non-trivial class; a disagreement
/// throws Internal.
std::vector<IrreduciblePair> irreducible_pairs(const Space& x, Variant variant);

struct AdSobrification {
  Space space;
  std::vector<IrreduciblePair> pairs;
  std::vector<Subset> diamond_map;  // open index of X -> open of the result
  std::vector<Subset> bracket_map;  // up-set index of X (upsets lattice) -> up-set
  PointMap unit;                    // x -> (cl{x}, [x])
};

/// Throws TooLarge when there are more pairs than the carrier cap.
AdSobrification ads_space(const Space& x, Variant variant);

/// f^ads : (C, [x]) -> (cl f[C], [f x]).
PointMap ads_hom(const PointMap& f, const AdSobrification& xs, const Space& y,
                 const AdSobrification& ys);

struct IsoCheck {
  bool ok = true;
  PointMap map;
  std::string witness;
};

/// The explicit bijection X^ads -> adpt(adO X), (C,[x]) -> (X \ C as prime,
/// up-closure of x as coprime); checks that it is an isomorphism carrying
/// diamond opens to O_U and brackets to A_A, and that the unit pulls both
/// back to the original sets.
IsoCheck ads_adpt_iso(const Space& x, Variant variant);

/// Order-isomorphism checks for the diamond and bracket maps.
IsoCheck check_diamond_bracket(const Space& x, const AdSobrification& xs);

}  // namespace adlab
