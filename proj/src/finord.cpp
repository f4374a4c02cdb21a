#include "adlab/finord.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "adlab/error.hpp"

namespace adlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAPreorder: return "NotAPreorder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NonDistributiveLattice: return "NonDistributiveLattice";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotAPointMap: return "NotAPointMap";
    case ErrorKind::TrivialFrame: return "TrivialFrame";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

int max_points() {
  static const int cap = [] {
    const char* env = std::getenv("ADFRAME_MAX_POINTS");
    if (env == nullptr || *env == '\0') return kCarrierLimit;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) return kCarrierLimit;
    return static_cast<int>(std::min<long>(v, kCarrierLimit));
  }();
  return cap;
}

namespace bits {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for_each(s, [&](int i) { out.push_back(i); });
  return out;
}

Subset from_elements(std::span<const int> xs) {
  Subset s = 0;
  for (int x : xs) s |= single(x);
  return s;
}

std::string to_string(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each(s, [&](int i) {
    if (!first) os << ',';
    os << i;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace bits

namespace {

void sort_canonical(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), bits::canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

// Closes a family under binary union and intersection.
void close_under_union_meet(std::vector<Subset>& family) {
  std::unordered_set<Subset> seen(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (Subset s : {family[i] | family[j], family[i] & family[j]}) {
        if (seen.insert(s).second) {
          family.push_back(s);
          if (static_cast<int>(family.size()) > lattice_cap()) {
            throw Error(ErrorKind::TooLarge, "closure exceeds lattice cap");
          }
        }
      }
    }
  }
}

// Packs the bits of s selected by keep into the low positions.
Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int k = 0;
  bits::for_each(keep, [&](int i) {
    if (bits::has(s, i)) out |= bits::single(k);
    ++k;
  });
  return out;
}

int g_lattice_cap = 4096;

}  // namespace

// ---------------------------------------------------------------- Topology

Topology Topology::make(int n, std::vector<Subset> opens, bool complete) {
  if (n < 0 || n > max_points()) {
    throw Error(ErrorKind::TooLarge, "carrier size " + std::to_string(n) + " outside [0, " +
                                         std::to_string(max_points()) + "]");
  }
  const Subset all = bits::full(n);
  for (Subset u : opens) {
    if (!bits::subset_of(u, all)) {
      throw Error(ErrorKind::IndexOutOfRange, "open " + bits::to_string(u) + " exceeds carrier");
    }
  }
  sort_canonical(opens);
  if (complete) {
    opens.push_back(0);
    opens.push_back(all);
    sort_canonical(opens);
    close_under_union_meet(opens);
    sort_canonical(opens);
  } else {
    const std::unordered_set<Subset> present(opens.begin(), opens.end());
    if (!present.contains(0)) throw Error(ErrorKind::NotATopology, "empty set missing");
    if (!present.contains(all)) throw Error(ErrorKind::NotATopology, "full set missing");
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!present.contains(opens[i] | opens[j])) {
          throw Error(ErrorKind::NotATopology, "union of " + bits::to_string(opens[i]) + " and " +
                                                   bits::to_string(opens[j]) + " is not open");
        }
        if (!present.contains(opens[i] & opens[j])) {
          throw Error(ErrorKind::NotATopology, "intersection of " + bits::to_string(opens[i]) +
                                                   " and " + bits::to_string(opens[j]) +
                                                   " is not open");
        }
      }
    }
  }
  Topology t;
  t.n_ = n;
  t.opens_ = std::move(opens);
  return t;
}

Topology Topology::discrete(int n) {
  if (n < 0 || (1 << std::min(n, 30)) > lattice_cap()) {
    throw Error(ErrorKind::TooLarge, "discrete topology on " + std::to_string(n) + " points");
  }
  std::vector<Subset> opens;
  opens.reserve(bits::single(n));
  for (Subset s = 0; s <= bits::full(n); ++s) opens.push_back(s);
  return make(n, std::move(opens));
}

Topology Topology::indiscrete(int n) { return make(n, {0, bits::full(n)}); }

int Topology::open_index(Subset s) const {
  const auto it = std::lower_bound(opens_.begin(), opens_.end(), s, bits::canonical_less);
  if (it == opens_.end() || *it != s) return -1;
  return static_cast<int>(it - opens_.begin());
}

std::vector<Subset> Topology::closed_sets() const {
  std::vector<Subset> closed;
  closed.reserve(opens_.size());
  for (Subset u : opens_) closed.push_back(carrier() & ~u);
  sort_canonical(closed);
  return closed;
}

Subset Topology::interior(Subset s) const {
  Subset acc = 0;
  for (Subset u : opens_) {
    if (bits::subset_of(u, s)) acc |= u;
  }
  return acc;
}

Subset Topology::closure(Subset s) const { return carrier() & ~interior(carrier() & ~s); }

Topology Topology::restrict_to(Subset keep) const {
  keep &= carrier();
  std::vector<Subset> induced;
  induced.reserve(opens_.size());
  for (Subset u : opens_) induced.push_back(compress(u, keep));
  return make(bits::count(keep), std::move(induced));
}

// ---------------------------------------------------------------- Preorder

Preorder::Preorder(std::vector<Subset> up_rows) : up_(std::move(up_rows)), down_(up_.size(), 0) {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    bits::for_each(up_[x], [&](int y) { down_[y] |= bits::single(x); });
  }
}

Preorder Preorder::from_pairs(int n, std::span<const OrderPair> pairs, bool strict) {
  if (n < 0 || n > kCarrierLimit) throw Error(ErrorKind::TooLarge, "preorder size");
  std::vector<Subset> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "order pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
    rows[x] |= bits::single(y);
  }
  if (strict) return from_rows(std::move(rows));
  for (int x = 0; x < n; ++x) rows[x] |= bits::single(x);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (bits::has(rows[x], k)) rows[x] |= rows[k];
    }
  }
  return Preorder(std::move(rows));
}

Preorder Preorder::from_rows(std::vector<Subset> up_rows) {
  const int n = static_cast<int>(up_rows.size());
  for (int x = 0; x < n; ++x) {
    if (!bits::has(up_rows[x], x)) {
      throw Error(ErrorKind::NotAPreorder, "not reflexive at " + std::to_string(x));
    }
    if (!bits::subset_of(up_rows[x], bits::full(n))) {
      throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(x));
    }
    for (int y = 0; y < n; ++y) {
      if (bits::has(up_rows[x], y) && !bits::subset_of(up_rows[y], up_rows[x])) {
        throw Error(ErrorKind::NotAPreorder,
                    "not transitive through (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return Preorder(std::move(up_rows));
}

Preorder Preorder::discrete(int n) {
  std::vector<Subset> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rows[x] = bits::single(x);
  return Preorder(std::move(rows));
}

Preorder Preorder::indiscrete(int n) {
  return Preorder(std::vector<Subset>(static_cast<std::size_t>(n), bits::full(n)));
}

Subset Preorder::upclose(Subset a) const {
  Subset acc = 0;
  bits::for_each(a, [&](int x) { acc |= up_[x]; });
  return acc;
}

Subset Preorder::downclose(Subset a) const {
  Subset acc = 0;
  bits::for_each(a, [&](int x) { acc |= down_[x]; });
  return acc;
}

bool Preorder::is_antisymmetric() const {
  for (int x = 0; x < size(); ++x) {
    if (equivalence_class(x) != bits::single(x)) return false;
  }
  return true;
}

std::vector<OrderPair> Preorder::strict_pairs() const {
  std::vector<OrderPair> out;
  for (int x = 0; x < size(); ++x) {
    bits::for_each(up_[x] & ~bits::single(x), [&](int y) { out.emplace_back(x, y); });
  }
  return out;
}

Preorder Preorder::intersect(const Preorder& other) const {
  std::vector<Subset> rows(up_.size());
  for (std::size_t x = 0; x < up_.size(); ++x) rows[x] = up_[x] & other.up_[x];
  return Preorder(std::move(rows));
}

bool Preorder::contained_in(const Preorder& other) const {
  for (std::size_t x = 0; x < up_.size(); ++x) {
    if (!bits::subset_of(up_[x], other.up_[x])) return false;
  }
  return true;
}

Preorder Preorder::restrict_to(Subset keep) const {
  keep &= bits::full(size());
  std::vector<Subset> rows;
  bits::for_each(keep, [&](int x) { rows.push_back(compress(up_[x], keep)); });
  return Preorder(std::move(rows));
}

// ---------------------------------------------------------------- Space

Space::Space(Topology topology, Preorder order)
    : topology_(std::move(topology)), order_(std::move(order)) {
  if (topology_.size() != order_.size()) {
    throw Error(ErrorKind::InvalidInput, "topology and preorder sizes differ");
  }
}

Space Space::restrict_to(Subset keep) const {
  return Space(topology_.restrict_to(keep), order_.restrict_to(keep));
}

Space validate_space(const SpaceInput& raw) {
  Topology topology = Topology::make(raw.points, raw.opens, raw.complete);
  Preorder order = Preorder::from_pairs(raw.points, raw.leq, raw.strict);
  return Space(std::move(topology), std::move(order));
}

// ---------------------------------------------------------------- Lattice

int lattice_cap() { return g_lattice_cap; }
void set_lattice_cap(int cap) { g_lattice_cap = std::clamp(cap, 1, 65535); }

Lattice Lattice::from_family(std::vector<Subset> family) {
  sort_canonical(family);
  return from_labels_in_order(std::move(family));
}

Lattice Lattice::from_labels_in_order(std::vector<Subset> labels) {
  if (labels.empty()) throw Error(ErrorKind::NotALattice, "no elements");
  if (static_cast<int>(labels.size()) > lattice_cap()) {
    throw Error(ErrorKind::TooLarge, std::to_string(labels.size()) + " lattice elements");
  }
  Lattice l;
  l.m_ = static_cast<int>(labels.size());
  l.labels_ = std::move(labels);
  l.compute_tables_from_labels();
  return l;
}

void Lattice::compute_tables_from_labels() {
  std::unordered_map<Subset, int> where;
  where.reserve(labels_.size() * 2);
  for (int i = 0; i < m_; ++i) {
    if (!where.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::NotALattice, "duplicate label " + bits::to_string(labels_[i]));
    }
  }
  const auto n = static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_);
  leq_.assign(n, 0);
  join_.assign(n, 0);
  meet_.assign(n, 0);
  Subset lo = labels_[0];
  Subset hi = labels_[0];
  for (int a = 0; a < m_; ++a) {
    lo &= labels_[a];
    hi |= labels_[a];
    for (int b = 0; b < m_; ++b) {
      leq_[idx(a, b)] = bits::subset_of(labels_[a], labels_[b]) ? 1 : 0;
      const auto j = where.find(labels_[a] | labels_[b]);
      const auto k = where.find(labels_[a] & labels_[b]);
      if (j == where.end() || k == where.end()) {
        throw Error(ErrorKind::NotALattice, "family not closed under union/intersection at " +
                                                bits::to_string(labels_[a]) + ", " +
                                                bits::to_string(labels_[b]));
      }
      join_[idx(a, b)] = static_cast<std::uint16_t>(j->second);
      meet_[idx(a, b)] = static_cast<std::uint16_t>(k->second);
    }
  }
  bot_ = where.at(lo);
  top_ = where.at(hi);
}

Lattice Lattice::from_order(int m, std::span<const OrderPair> pairs) {
  if (m <= 0) throw Error(ErrorKind::NotALattice, "no elements");
  if (m > lattice_cap()) throw Error(ErrorKind::TooLarge, std::to_string(m) + " lattice elements");
  Lattice l;
  l.m_ = m;
  const auto n = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  l.leq_.assign(n, 0);
  for (int a = 0; a < m; ++a) l.leq_[l.idx(a, a)] = 1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "lattice pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    l.leq_[l.idx(a, b)] = 1;
  }
  for (int k = 0; k < m; ++k) {
    for (int a = 0; a < m; ++a) {
      if (!l.leq_[l.idx(a, k)]) continue;
      for (int b = 0; b < m; ++b) {
        if (l.leq_[l.idx(k, b)]) l.leq_[l.idx(a, b)] = 1;
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (l.leq(a, b) && l.leq(b, a)) {
        throw Error(ErrorKind::NotALattice, "not antisymmetric: " + std::to_string(a) + " and " +
                                                std::to_string(b));
      }
    }
  }
  l.compute_tables_from_order();
  return l;
}

void Lattice::compute_tables_from_order() {
  const auto n = static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_);
  join_.assign(n, 0);
  meet_.assign(n, 0);
  // Least element of a candidate set: the one below all others.
  auto least = [&](const std::vector<int>& cands) -> int {
    for (int c : cands) {
      bool below_all = true;
      for (int d : cands) {
        if (!leq(c, d)) {
          below_all = false;
          break;
        }
      }
      if (below_all) return c;
    }
    return -1;
  };
  auto greatest = [&](const std::vector<int>& cands) -> int {
    for (int c : cands) {
      bool above_all = true;
      for (int d : cands) {
        if (!leq(d, c)) {
          above_all = false;
          break;
        }
      }
      if (above_all) return c;
    }
    return -1;
  };
  std::vector<int> ub;
  std::vector<int> lb;
  for (int a = 0; a < m_; ++a) {
    for (int b = a; b < m_; ++b) {
      ub.clear();
      lb.clear();
      for (int c = 0; c < m_; ++c) {
        if (leq(a, c) && leq(b, c)) ub.push_back(c);
        if (leq(c, a) && leq(c, b)) lb.push_back(c);
      }
      const int j = least(ub);
      const int k = greatest(lb);
      if (j < 0 || k < 0) {
        throw Error(ErrorKind::NotALattice, "elements " + std::to_string(a) + " and " +
                                                std::to_string(b) + " lack a " +
                                                (j < 0 ? "join" : "meet"));
      }
      join_[idx(a, b)] = join_[idx(b, a)] = static_cast<std::uint16_t>(j);
      meet_[idx(a, b)] = meet_[idx(b, a)] = static_cast<std::uint16_t>(k);
    }
  }
  int lo = 0;
  int hi = 0;
  for (int a = 1; a < m_; ++a) {
    lo = meet(lo, a);
    hi = join(hi, a);
  }
  bot_ = lo;
  top_ = hi;
}

Lattice Lattice::chain(int m) {
  std::vector<OrderPair> pairs;
  for (int a = 0; a + 1 < m; ++a) pairs.emplace_back(a, a + 1);
  return from_order(m, pairs);
}

int Lattice::index_of(Subset s) const {
  if (labels_.empty()) return -1;
  // Canonically ordered labels admit binary search; fall back to a scan.
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), s, bits::canonical_less);
  if (it != labels_.end() && *it == s) return static_cast<int>(it - labels_.begin());
  const auto jt = std::find(labels_.begin(), labels_.end(), s);
  return jt == labels_.end() ? -1 : static_cast<int>(jt - labels_.begin());
}

std::vector<OrderPair> Lattice::covers() const {
  std::vector<OrderPair> out;
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < m_ && covering; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
      }
      if (covering) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string Lattice::describe(int a) const {
  if (has_labels()) return std::to_string(a) + bits::to_string(labels_[a]);
  return std::to_string(a);
}

// ---------------------------------------------------------------- operations

std::vector<Subset> upsets(const Preorder& order) {
  std::vector<Subset> family{0};
  std::unordered_set<Subset> seen{0};
  for (int x = 0; x < order.size(); ++x) {
    const std::size_t existing = family.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const Subset s = family[i] | order.up(x);
      if (seen.insert(s).second) {
        family.push_back(s);
        if (static_cast<int>(family.size()) > lattice_cap()) {
          throw Error(ErrorKind::TooLarge, "up-set lattice exceeds lattice cap");
        }
      }
    }
  }
  sort_canonical(family);
  return family;
}

Lattice subset_lattice(const Space& space, SubsetKind kind) {
  if (kind == SubsetKind::Opens) {
    const auto opens = space.topology().opens();
    return Lattice::from_labels_in_order(std::vector<Subset>(opens.begin(), opens.end()));
  }
  return Lattice::from_labels_in_order(upsets(space.order()));
}

Subset set_operator(const Space& space, Subset a, SetOp op) {
  a &= space.carrier();
  switch (op) {
    case SetOp::Closure: return space.topology().closure(a);
    case SetOp::Interior: return space.topology().interior(a);
    case SetOp::Upclose: return space.order().upclose(a);
    case SetOp::Downclose: return space.order().downclose(a);
  }
  return a;
}

Preorder specialization_preorder(const Topology& topology) {
  const int n = topology.size();
  std::vector<Subset> rows(static_cast<std::size_t>(n), topology.carrier());
  for (Subset u : topology.opens()) {
    bits::for_each(u, [&](int x) { rows[x] &= u; });
  }
  return Preorder::from_rows(std::move(rows));
}

bool is_distributive(const Lattice& l) {
  const int m = l.size();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_prime(const Lattice& l, int q) {
  if (q == l.top()) return false;
  for (int u = 0; u < l.size(); ++u) {
    if (l.leq(u, q)) continue;
    for (int v = 0; v < l.size(); ++v) {
      if (!l.leq(v, q) && l.leq(l.meet(u, v), q)) return false;
    }
  }
  return true;
}

bool is_coprime(const Lattice& l, int b) {
  if (b == l.bot()) return false;
  for (int u = 0; u < l.size(); ++u) {
    if (l.leq(b, u)) continue;
    for (int v = 0; v < l.size(); ++v) {
      if (!l.leq(b, v) && l.leq(b, l.join(u, v))) return false;
    }
  }
  return true;
}

LatticeAnalysis lattice_analyze(const Lattice& l) {
  LatticeAnalysis out;
  out.distributive = is_distributive(l);
  const int m = l.size();
  for (int a = 0; a < m; ++a) {
    if (is_prime(l, a)) out.primes.push_back(a);
    if (is_coprime(l, a)) out.coprimes.push_back(a);
  }
  // q pitchfork b forces b = meet of {a | a not <= q}; verify the candidate.
  for (int q = 0; q < m; ++q) {
    int b = l.top();
    bool any = false;
    for (int a = 0; a < m; ++a) {
      if (!l.leq(a, q)) {
        b = l.meet(b, a);
        any = true;
      }
    }
    if (!any) continue;
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) ok = l.leq(b, a) == !l.leq(a, q);
    if (ok) out.pitchfork.emplace_back(q, b);
  }
  return out;
}

std::vector<Subset> irreducible_closed_sets(const Topology& topology) {
  const std::vector<Subset> closed = topology.closed_sets();
  std::vector<Subset> out;
  for (Subset c : closed) {
    if (c == 0) continue;
    bool irreducible = true;
    for (std::size_t i = 0; i < closed.size() && irreducible; ++i) {
      for (std::size_t j = i; j < closed.size(); ++j) {
        const Subset c1 = closed[i];
        const Subset c2 = closed[j];
        if (bits::subset_of(c, c1 | c2) && !bits::subset_of(c, c1) && !bits::subset_of(c, c2)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) out.push_back(c);
  }
  return out;
}

Partition equivalence_classes(const Preorder& order) {
  Partition p;
  p.representative.assign(static_cast<std::size_t>(order.size()), -1);
  for (int x = 0; x < order.size(); ++x) {
    if (p.representative[x] >= 0) continue;
    const Subset cls = order.equivalence_class(x);
    p.classes.push_back(cls);
    bits::for_each(cls, [&](int y) { p.representative[y] = x; });
  }
  return p;
}

// ---------------------------------------------------------------- morphisms

Subset preimage(const PointMap& f, Subset target) {
  Subset out = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (bits::has(target, f[x])) out |= bits::single(static_cast<int>(x));
  }
  return out;
}

Subset image(const PointMap& f, Subset source) {
  Subset out = 0;
  bits::for_each(source, [&](int x) { out |= bits::single(f[x]); });
  return out;
}

std::optional<Subset> continuity_witness(const PointMap& f, const Topology& from,
                                         const Topology& to) {
  for (Subset v : to.opens()) {
    if (!from.is_open(preimage(f, v))) return v;
  }
  return std::nullopt;
}

std::optional<OrderPair> monotonicity_witness(const PointMap& f, const Preorder& from,
                                              const Preorder& to) {
  for (int x = 0; x < from.size(); ++x) {
    for (int y = 0; y < from.size(); ++y) {
      if (from.leq(x, y) && !to.leq(f[x], f[y])) return OrderPair{x, y};
    }
  }
  return std::nullopt;
}

bool is_continuous(const PointMap& f, const Topology& from, const Topology& to) {
  return !continuity_witness(f, from, to).has_value();
}

bool is_monotone(const PointMap& f, const Preorder& from, const Preorder& to) {
  return !monotonicity_witness(f, from, to).has_value();
}

bool is_bijection(const PointMap& f, int target_size) {
  if (static_cast<int>(f.size()) != target_size) return false;
  std::vector<char> hit(static_cast<std::size_t>(target_size), 0);
  for (int y : f) {
    if (y < 0 || y >= target_size || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

PointMap inverse_bijection(const PointMap& f) {
  PointMap inv(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) inv[f[x]] = static_cast<int>(x);
  return inv;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  PointMap out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

PointMap identity_map(int n) {
  PointMap id(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) id[x] = x;
  return id;
}

bool is_homeomorphism(const PointMap& f, const Topology& from, const Topology& to) {
  if (!is_bijection(f, to.size()) || from.size() != to.size()) return false;
  if (from.opens().size() != to.opens().size()) return false;
  for (Subset u : from.opens()) {
    if (!to.is_open(image(f, u))) return false;
  }
  return is_continuous(f, from, to);
}

bool is_pretop_isomorphism(const PointMap& f, const Space& from, const Space& to) {
  if (!is_homeomorphism(f, from.topology(), to.topology())) return false;
  for (int x = 0; x < from.size(); ++x) {
    for (int y = 0; y < from.size(); ++y) {
      if (from.order().leq(x, y) != to.order().leq(f[x], f[y])) return false;
    }
  }
  return true;
}

bool upper_semi_closed(const Space& space) {
  for (int x = 0; x < space.size(); ++x) {
    if (!space.topology().is_closed(space.order().up(x))) return false;
  }
  return true;
}

bool lower_semi_closed(const Space& space) {
  for (int x = 0; x < space.size(); ++x) {
    if (!space.topology().is_closed(space.order().down(x))) return false;
  }
  return true;
}

}  // namespace adlab
