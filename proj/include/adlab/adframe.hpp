#pragma once

// Ad-frames: a frame and a completely distributive lattice linked by the
// totality, consistency, containment and inclusion relations.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "adlab/finord.hpp"

namespace adlab {

/// Which relations a theory reads: Up uses tot/con, Down uses fof/cou,
/// Both uses all four together with the cross laws.
enum class Variant { Up, Down, Both };

inline constexpr Variant kAllVariants[] = {Variant::Up, Variant::Down, Variant::Both};

constexpr bool uses_up(Variant v) { return v != Variant::Down; }
constexpr bool uses_down(Variant v) { return v != Variant::Up; }
std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

/// A binary relation between the element indices of two lattices.
class Relation {
 public:
  Relation() = default;
  Relation(int rows, int cols) : rows_(rows), cols_(cols), bits_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool contains(int u, int a) const { return bits_.test(at(u, a)); }
  void insert(int u, int a) { bits_.set(at(u, a)); }
  void erase(int u, int a) { bits_.reset(at(u, a)); }
  std::size_t count() const { return bits_.count(); }
  std::vector<OrderPair> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t at(int u, int a) const { return std::size_t(u) * std::size_t(cols_) + std::size_t(a); }

  int rows_ = 0;
  int cols_ = 0;
  boost::dynamic_bitset<> bits_;
};

struct AdFrame {
  Lattice omega;
  Lattice ell;
  Relation tot;
  Relation con;
  Relation fof;
  Relation cou;
  Variant variant = Variant::Both;

  bool trivial() const { return omega.trivial(); }
  friend bool operator==(const AdFrame&, const AdFrame&) = default;
};

/// Element maps of an ad-frame homomorphism. Source and target frames are
/// passed alongside wherever they are needed.
struct AdFrameHom {
  std::vector<int> phi;
  std::vector<int> p;

  friend bool operator==(const AdFrameHom&, const AdFrameHom&) = default;
};

/// `second` after `first`.
AdFrameHom compose(const AdFrameHom& second, const AdFrameHom& first);
AdFrameHom identity_hom(const AdFrame& f);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(std::string_view name) const;
};

/// Checks every axiom the frame's variant reads. Throws NonDistributiveLattice.
ValidationReport validate_adframe(const AdFrame& f);

/// Lattice-homomorphism laws for both maps and preservation of each relation
/// the variant reads (the target's variant is used).
ValidationReport validate_hom(const AdFrameHom& h, const AdFrame& source, const AdFrame& target);

/// Preserves bottom, top and binary joins and meets.
bool is_lattice_hom(const std::vector<int>& map, const Lattice& from, const Lattice& to);

/// Every ad-frame homomorphism from `source` to `target`, by backtracking over
/// lattice homomorphisms. Throws BudgetExceeded past `limit` candidates.
std::vector<AdFrameHom> enumerate_homs(const AdFrame& source, const AdFrame& target,
                                       long limit = 1'000'000);

/// All lattice homomorphisms (bounds, joins, meets preserved).
std::vector<std::vector<int>> enumerate_lattice_homs(const Lattice& from, const Lattice& to,
                                                     long limit = 1'000'000);

/// Canonical ad-frame of a preordered topological space.
AdFrame build_adO(const Space& space, Variant variant);

/// adO on morphisms: inverse images, from adO(Y) to adO(X). Throws
/// NotContinuous / NotMonotone with a witness.
AdFrameHom build_adO_hom(const PointMap& f, const Space& x, const Space& y);

struct SemiClosedness {
  std::optional<bool> usc;  // present for Up and Both
  std::optional<bool> lsc;  // present for Down and Both
};

/// Every element of L is a join of elements of {a | (u,a) in tot and con}.
/// Throws VariantMismatch for Down.
bool check_usc(const AdFrame& f);
/// Every element of L is a meet of elements of {a | (u,a) in fof and cou}.
/// Throws VariantMismatch for Up.
bool check_lsc(const AdFrame& f);
SemiClosedness check_usc_lsc(const AdFrame& f);

/// Ind(omega): omega paired with the two-element chain. Throws TrivialFrame.
AdFrame ind_frame(const Lattice& omega, Variant variant = Variant::Both);
/// Ind on a frame homomorphism: (psi, identity on {0,1}).
AdFrameHom ind_hom(const std::vector<int>& psi);
/// The counit (identity, bnd) from Ind(|f|) to f. Throws TrivialFrame.
AdFrameHom epsilon_hom(const AdFrame& f);

}  // namespace adlab
