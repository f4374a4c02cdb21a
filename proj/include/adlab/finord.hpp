#pragma once

// Finite order-theoretic and topological substrate: topologies, preorders,
// preordered topological spaces and finite lattices.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adlab/bits.hpp"

namespace adlab {

using OrderPair = std::pair<int, int>;

/// A map between finite carriers, given by the image of each point.
using PointMap = std::vector<int>;

/// A finite topology: a family of subsets of {0..n-1} containing the empty
/// and the full set, closed under binary union and intersection, stored
/// duplicate-free in canonical order.
class Topology {
 public:
  Topology() = default;

  /// Validates `opens`. With `complete` set, the family is first closed up
  /// under union and intersection (and gains the empty and full set).
  static Topology make(int n, std::vector<Subset> opens, bool complete = false);
  static Topology discrete(int n);
  static Topology indiscrete(int n);

  int size() const { return n_; }
  Subset carrier() const { return bits::full(n_); }
  std::span<const Subset> opens() const { return opens_; }
  std::vector<Subset> closed_sets() const;

  bool is_open(Subset s) const { return open_index(s) >= 0; }
  bool is_closed(Subset s) const { return is_open(carrier() & ~s); }
  /// Position of `s` in the canonical open list, or -1.
  int open_index(Subset s) const;

  Subset interior(Subset s) const;
  Subset closure(Subset s) const;

  /// Induced topology on the given points, relabeled 0..k-1 in increasing order.
  Topology restrict_to(Subset keep) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  int n_ = 0;
  std::vector<Subset> opens_{0};
};

/// A preorder on {0..n-1}, stored as rows up(x) = {y | x <= y}.
class Preorder {
 public:
  Preorder() = default;

  /// Reflexive-transitive closure of the pairs; with `strict` the pairs must
  /// already be reflexive and transitive.
  static Preorder from_pairs(int n, std::span<const OrderPair> pairs, bool strict = false);
  static Preorder from_rows(std::vector<Subset> up_rows);
  static Preorder discrete(int n);
  static Preorder indiscrete(int n);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int x, int y) const { return bits::has(up_[x], y); }
  Subset up(int x) const { return up_[x]; }
  Subset down(int x) const { return down_[x]; }
  Subset upclose(Subset a) const;
  Subset downclose(Subset a) const;
  bool is_upset(Subset a) const { return upclose(a) == a; }
  bool is_antisymmetric() const;
  Subset equivalence_class(int x) const { return up_[x] & down(x); }

  /// Non-reflexive pairs, lexicographic.
  std::vector<OrderPair> strict_pairs() const;
  Preorder intersect(const Preorder& other) const;
  bool contained_in(const Preorder& other) const;
  Preorder restrict_to(Subset keep) const;

  std::span<const Subset> rows() const { return up_; }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  explicit Preorder(std::vector<Subset> up_rows);

  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// A preordered topological space.
class Space {
 public:
  Space() = default;
  Space(Topology topology, Preorder order);

  int size() const { return topology_.size(); }
  Subset carrier() const { return topology_.carrier(); }
  const Topology& topology() const { return topology_; }
  const Preorder& order() const { return order_; }

  Space restrict_to(Subset keep) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Topology topology_;
  Preorder order_;
};

struct SpaceInput {
  int points = 0;
  std::vector<Subset> opens;
  std::vector<OrderPair> leq;
  bool complete = false;
  bool strict = false;
};

/// Checked constructor for spaces; throws NotATopology, IndexOutOfRange,
/// NotAPreorder.
Space validate_space(const SpaceInput& raw);

/// Lattice element cap (default 4096, the number of up-sets of a 12-point
/// preorder).
int lattice_cap();
void set_lattice_cap(int cap);

/// A finite bounded lattice with element indices 0..m-1. Concrete lattices
/// carry a subset label per element, with order = inclusion.
class Lattice {
 public:
  Lattice() = default;

  /// A family of subsets closed under binary union and intersection, put in
  /// canonical order.
  static Lattice from_family(std::vector<Subset> family);
  /// Labeled lattice with the given element order (the order must already
  /// be inclusion-compatible); used when re-ingesting serialized lattices.
  static Lattice from_labels_in_order(std::vector<Subset> labels);
  /// Abstract lattice on m elements; the pairs are closed reflexively and
  /// transitively. Throws NotALattice if the result is not a lattice.
  static Lattice from_order(int m, std::span<const OrderPair> pairs);
  static Lattice chain(int m);

  int size() const { return m_; }
  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  bool trivial() const { return m_ == 1; }

  bool has_labels() const { return !labels_.empty(); }
  Subset label(int a) const { return labels_[a]; }
  std::span<const Subset> labels() const { return labels_; }
  /// Index of the element labeled `s`, or -1.
  int index_of(Subset s) const;

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<OrderPair> covers() const;
  std::string describe(int a) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.m_ == b.m_ && a.leq_ == b.leq_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b);
  }
  void compute_tables_from_order();
  void compute_tables_from_labels();

  int m_ = 0;
  std::vector<Subset> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  int bot_ = 0;
  int top_ = 0;
};

enum class SubsetKind { Opens, Upsets };

/// Lattice of open sets (a frame) or of up-closed sets of the preorder.
Lattice subset_lattice(const Space& space, SubsetKind kind);
std::vector<Subset> upsets(const Preorder& order);

enum class SetOp { Closure, Interior, Upclose, Downclose };
Subset set_operator(const Space& space, Subset a, SetOp op);

/// x <= y iff every open containing x contains y. Ignores any given order.
Preorder specialization_preorder(const Topology& topology);

struct LatticeAnalysis {
  bool distributive = false;
  std::vector<int> primes;
  std::vector<int> coprimes;
  std::vector<OrderPair> pitchfork;  // (q, b)
};

/// Distributivity, meet-primes, join-coprimes and pitchfork pairs, all by
/// definition. Finite distributivity is the same as complete distributivity.
LatticeAnalysis lattice_analyze(const Lattice& lattice);
bool is_distributive(const Lattice& lattice);
bool is_prime(const Lattice& lattice, int q);
bool is_coprime(const Lattice& lattice, int b);

/// Non-empty closed sets not covered by two closed sets without being
/// inside one of them; canonical order.
std::vector<Subset> irreducible_closed_sets(const Topology& topology);

struct Partition {
  std::vector<Subset> classes;  // ordered by smallest member
  std::vector<int> representative;  // smallest member of the class of x
};
Partition equivalence_classes(const Preorder& order);

// Morphism helpers shared by every module.

Subset preimage(const PointMap& f, Subset target);
Subset image(const PointMap& f, Subset source);
/// First open of `to` whose preimage is not open in `from`.
std::optional<Subset> continuity_witness(const PointMap& f, const Topology& from, const Topology& to);
/// First pair x <= y whose images are unordered.
std::optional<OrderPair> monotonicity_witness(const PointMap& f, const Preorder& from, const Preorder& to);
bool is_continuous(const PointMap& f, const Topology& from, const Topology& to);
bool is_monotone(const PointMap& f, const Preorder& from, const Preorder& to);
bool is_bijection(const PointMap& f, int target_size);
PointMap inverse_bijection(const PointMap& f);
PointMap compose(const PointMap& g, const PointMap& f);  // g after f
PointMap identity_map(int n);

/// Homeomorphism of underlying topologies.
bool is_homeomorphism(const PointMap& f, const Topology& from, const Topology& to);
/// Isomorphism in the category of preordered topological spaces: a bijection
/// that is a homeomorphism and an order-embedding.
bool is_pretop_isomorphism(const PointMap& f, const Space& from, const Space& to);

bool upper_semi_closed(const Space& space);
bool lower_semi_closed(const Space& space);

}  // namespace adlab
