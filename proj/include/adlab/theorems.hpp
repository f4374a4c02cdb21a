#pragma once

// Instance enumeration and generation, isomorphism search, the Discr/Ind/|.|
// functors and a registry of executable theorem checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adlab/adframe.hpp"
#include "adlab/duality.hpp"
#include "adlab/finord.hpp"
#include "adlab/sobrify.hpp"

namespace adlab {

// ------------------------------------------------------------ enumeration

std::vector<Topology> enumerate_topologies(int n);
std::vector<Preorder> enumerate_preorders(int n);

enum class SpaceMode { All, T0, FixedTopology };

/// Every (topology, preorder) pair on n labeled points, topology-major in
/// canonical order. T0 keeps T0 topologies; FixedTopology pairs `fixed` with
/// every preorder. Throws BudgetExceeded for n > 4.
std::vector<Space> enumerate_spaces(int n, SpaceMode mode = SpaceMode::All,
                                    const Topology* fixed = nullptr);

/// Continuous maps between topologies; continuous monotone maps between spaces.
std::vector<PointMap> continuous_maps(const Topology& from, const Topology& to, long limit = 100000);
std::vector<PointMap> morphisms(const Space& from, const Space& to, long limit = 100000);

/// Distributive lattices with at most `max_size` elements, one per
/// isomorphism class, smallest first (up-set lattices of finite posets).
std::vector<Lattice> distributive_lattices(int max_size);

// ------------------------------------------------------------ generation

Space random_space(int n, std::uint64_t seed);

enum class FrameFamily { AdO, Ind, Mutated };

struct GeneratedFrame {
  AdFrame frame;
  FrameFamily family = FrameFamily::AdO;
  std::string mutation;  // the axiom the mutation targets, for Mutated
  std::string description;
};

GeneratedFrame random_adframe(FrameFamily family, Variant variant, std::uint64_t seed);

// ------------------------------------------------------------ isomorphisms

/// Point bijection that is a homeomorphism and an order-isomorphism.
std::optional<PointMap> find_pretop_iso(const Space& a, const Space& b, long budget = 1'000'000);
std::optional<PointMap> find_homeomorphism(const Topology& a, const Topology& b,
                                           long budget = 1'000'000);
/// Every order-isomorphism between two lattices.
std::vector<std::vector<int>> lattice_isos(const Lattice& a, const Lattice& b, long budget = 1'000'000);
/// Lattice isomorphisms on both components carrying every relation the
/// variant reads onto its counterpart.
std::optional<AdFrameHom> find_adframe_iso(const AdFrame& a, const AdFrame& b, long budget = 1'000'000);

// ------------------------------------------------------------ functors

Space discr(const Topology& t);
Space ind_space(const Topology& t);
Topology underlying(const Space& x);

/// Points of a frame (its primes) with opens {p | u not <= p}.
Topology frame_points(const Lattice& omega);

/// E with x <= x' iff g_i(x) <= g_i(x') for every target. Throws
/// NotContinuous; throws Internal if the result is not the largest preorder
/// making every g_i monotone.
Space lifted_preorder(const Topology& e, const std::vector<std::pair<PointMap, Space>>& targets);

/// The counit (u -> O_u, a -> A_a) from f to adO(adpt f).
AdFrameHom counit_hom(const Spectrum& spec, const AdFrame& ado_spec);

/// Empty when the triangle adpt(f^!) . eta = f holds and f^! round-trips;
/// otherwise the failure. The frame is build_adO(y, variant).
std::string triangle_case(const Space& x, const Space& y, Variant variant, const PointMap& f);

// ------------------------------------------------------------ registry

enum class Verdict { Pass, Fail, ExpectedFail, Skip };
std::string_view to_string(Verdict v);

struct TheoremInfo {
  std::string id;
  std::string statement;
  bool expected_fail = false;
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& find_theorem(std::string_view id);  // throws UnknownTheorem

struct Instance {
  Space space;
  Variant variant = Variant::Both;
  std::string description;
};

struct CheckReport {
  std::string id;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::string witness;
  double ms = 0;
  long cases = 0;  // sub-cases examined (maps, squares, homs)
};

std::string describe_space(const Space& x);
std::string describe_instance(const Space& x, Variant v);

/// Runs one check. A failing check's witness is minimized by greedy point
/// removal when `minimize` is set.
CheckReport run_check(std::string_view id, const Instance& inst, bool minimize = true);

/// Ad-frame level checks used on generated frames: the spectrum is ad-sober
/// and eta at it is an isomorphism; (usc)/(lsc) imply semi-closed spectra.
CheckReport check_frame(std::string_view id, const GeneratedFrame& g);

struct SweepOptions {
  int n = 2;
  std::optional<Variant> variant;  // all three when absent
  int workers = 0;                 // 0: hardware concurrency
  bool fail_fast = false;
  long budget_ms = 0;              // 0: unlimited
  bool minimize = true;
};

struct SweepSummary {
  std::vector<CheckReport> reports;  // canonical instance order
  long pass = 0, fail = 0, expected_fail = 0, skip = 0;
  bool cancelled = false;
  bool budget_exceeded = false;
};

/// Every space on exactly n points under each requested variant.
std::vector<Instance> sweep_instances(const SweepOptions& opt);

SweepSummary sweep(std::string_view id, const SweepOptions& opt);

}  // namespace adlab
