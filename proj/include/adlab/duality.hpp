#pragma once

// Points of an ad-frame, the spectrum adpt, the unit eta and transposes.

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "adlab/adframe.hpp"
#include "adlab/finord.hpp"

namespace adlab {

/// A point (x, s): x a completely prime filter of omega, s a completely prime
/// complete filter of ell. `prime` is the largest element outside x and
/// `coprime` the least element of s.
struct AdPoint {
  boost::dynamic_bitset<> x;
  boost::dynamic_bitset<> s;
  int prime = -1;
  int coprime = -1;

  friend bool operator==(const AdPoint&, const AdPoint&) = default;
};

enum class PointAlgorithm { Prime, BruteForce };

/// Points in canonical order (least element of s, then prime of x). The
/// brute-force scan is limited to lattices of at most 20 elements.
std::vector<AdPoint> enumerate_points(const AdFrame& f, PointAlgorithm algorithm = PointAlgorithm::Prime);

/// Direct check of the point definition for arbitrary subsets.
bool is_point(const AdFrame& f, const boost::dynamic_bitset<>& x, const boost::dynamic_bitset<>& s);

struct Spectrum {
  Space space;
  std::vector<AdPoint> points;
  std::vector<Subset> open_map;   // u -> O_u
  std::vector<Subset> upset_map;  // a -> A_a

  /// Index of the point with the given prime and coprime, or -1.
  int find(int prime, int coprime) const;
};

/// adpt on objects. Throws TooLarge when there are more points than the
/// carrier cap.
Spectrum adpt_space(const AdFrame& f);

/// adpt on a hom h: source -> target, as a map from the points of target to
/// the points of source.
PointMap adpt_hom(const AdFrameHom& h, const AdFrame& source, const Spectrum& source_spec,
                  const AdFrame& target, const Spectrum& target_spec);

/// x -> (N_x, U_x), where `spec` is the spectrum of build_adO(x, variant).
PointMap eta_map(const Space& x, const AdFrame& adox, const Spectrum& spec);

/// The transpose f^! : frame -> adO X of a map f : X -> adpt(frame). Throws
/// NotAPointMap, NotContinuous, NotMonotone.
AdFrameHom transpose(const PointMap& f, const Space& x, const AdFrame& adox, const Spectrum& spec);

bool is_ad_T0(const Space& x);

struct AdSoberVerdict {
  bool by_pairs = false;  // every irreducible pair is (cl{x}, [x]) for a unique x
  bool by_eta = false;    // eta is bijective
  bool by_eta_iso = false;  // eta is an isomorphism of preordered spaces
  bool by_lemma = false;  // ad-T0 and only point-closure pairs
  std::string witness;

  bool sober() const { return by_pairs; }
  bool consistent() const { return by_pairs == by_eta && by_eta == by_eta_iso && by_eta == by_lemma; }
};

AdSoberVerdict is_ad_sober(const Space& x, Variant variant);

std::string describe_point(const AdFrame& f, const AdPoint& pt);

}  // namespace adlab
