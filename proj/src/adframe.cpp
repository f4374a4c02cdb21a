#include "adlab/adframe.hpp"

#include <algorithm>
#include <sstream>

#include "adlab/error.hpp"

namespace adlab {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Up: return "up";
    case Variant::Down: return "down";
    case Variant::Both: return "both";
  }
  return "both";
}

Variant parse_variant(std::string_view text) {
  if (text == "up") return Variant::Up;
  if (text == "down") return Variant::Down;
  if (text == "both") return Variant::Both;
  throw Error(ErrorKind::InvalidInput, "unknown variant '" + std::string(text) + "'");
}

std::vector<OrderPair> Relation::pairs() const {
  std::vector<OrderPair> out;
  out.reserve(count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
    out.emplace_back(static_cast<int>(i / cols_), static_cast<int>(i % cols_));
  }
  return out;
}

AdFrameHom compose(const AdFrameHom& second, const AdFrameHom& first) {
  AdFrameHom out;
  out.phi.reserve(first.phi.size());
  out.p.reserve(first.p.size());
  for (int u : first.phi) out.phi.push_back(second.phi[u]);
  for (int a : first.p) out.p.push_back(second.p[a]);
  return out;
}

AdFrameHom identity_hom(const AdFrame& f) {
  return {identity_map(f.omega.size()), identity_map(f.ell.size())};
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string pair_text(const AdFrame& f, int u, int a) {
  return "(" + f.omega.describe(u) + "," + f.ell.describe(a) + ")";
}

std::vector<std::vector<int>> upper_covers(const Lattice& l) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(l.size()));
  for (const auto& [a, b] : l.covers()) out[a].push_back(b);
  return out;
}

std::vector<std::vector<int>> lower_covers(const Lattice& l) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(l.size()));
  for (const auto& [a, b] : l.covers()) out[b].push_back(a);
  return out;
}

// Axiom evaluation for one relation. The orientation of each coordinate
// determines the product order: +1 reads the lattice order, -1 its opposite.
class RelationChecker {
 public:
  RelationChecker(const AdFrame& f, const Relation& r, std::string name, int ell_sign)
      : f_(f), r_(r), name_(std::move(name)), ell_sign_(ell_sign) {
    omega_up_ = upper_covers(f.omega);
    omega_down_ = lower_covers(f.omega);
    ell_up_ = upper_covers(f.ell);
    ell_down_ = lower_covers(f.ell);
    pairs_ = r.pairs();
  }

  // Closed upwards (dir=+1) or downwards (dir=-1) in the product order.
  AxiomCheck closed_in_direction(int dir, const std::string& label) const {
    AxiomCheck c{name_ + "." + label, true, {}};
    const auto& om = dir > 0 ? omega_up_ : omega_down_;
    const auto& el = (dir * ell_sign_) > 0 ? ell_up_ : ell_down_;
    for (const auto& [u, a] : pairs_) {
      for (int v : om[u]) {
        if (!r_.contains(v, a)) return fail(c, u, a, v, a, "neighbour missing");
      }
      for (int b : el[a]) {
        if (!r_.contains(u, b)) return fail(c, u, a, u, b, "neighbour missing");
      }
    }
    return c;
  }

  AxiomCheck contains(int u, int a, const std::string& label) const {
    AxiomCheck c{name_ + ".contains-" + label, r_.contains(u, a), {}};
    if (!c.passed) c.witness = pair_text(f_, u, a) + " not in " + name_;
    return c;
  }

  // Closed under the binary operation (omega_op, ell_op) where each op is a
  // join (true) or meet (false).
  AxiomCheck closed_under(bool omega_join, bool ell_join, const std::string& label) const {
    AxiomCheck c{name_ + "." + label, true, {}};
    for (const auto& [u, a] : pairs_) {
      for (const auto& [v, b] : pairs_) {
        const int w = omega_join ? f_.omega.join(u, v) : f_.omega.meet(u, v);
        const int d = ell_join ? f_.ell.join(a, b) : f_.ell.meet(a, b);
        if (!r_.contains(w, d)) {
          c.passed = false;
          c.witness = pair_text(f_, u, a) + " and " + pair_text(f_, v, b) + " give " +
                      pair_text(f_, w, d) + " not in " + name_;
          return c;
        }
      }
    }
    return c;
  }

  // Directed families (in the product order with the given ell orientation)
  // must have their supremum in the relation. Exhaustive over subfamilies when
  // the relation is small, otherwise over families of at most three pairs.
  AxiomCheck scott_closed() const {
    AxiomCheck c{name_ + ".scott-closed", true, {}};
    auto leq = [&](const OrderPair& x, const OrderPair& y) {
      const bool ell_ok = ell_sign_ > 0 ? f_.ell.leq(x.second, y.second)
                                        : f_.ell.leq(y.second, x.second);
      return f_.omega.leq(x.first, y.first) && ell_ok;
    };
    auto sup = [&](const OrderPair& x, const OrderPair& y) {
      const int d = ell_sign_ > 0 ? f_.ell.join(x.second, y.second) : f_.ell.meet(x.second, y.second);
      return OrderPair{f_.omega.join(x.first, y.first), d};
    };
    auto check_family = [&](const std::vector<OrderPair>& fam) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          bool bounded = false;
          for (const auto& k : fam) {
            if (leq(fam[i], k) && leq(fam[j], k)) {
              bounded = true;
              break;
            }
          }
          if (!bounded) return true;
        }
      }
      OrderPair s = fam.front();
      for (const auto& x : fam) s = sup(s, x);
      if (!r_.contains(s.first, s.second)) {
        c.passed = false;
        c.witness = "directed family with supremum " + pair_text(f_, s.first, s.second) +
                    " outside " + name_;
        return false;
      }
      return true;
    };
    const std::size_t k = pairs_.size();
    std::vector<OrderPair> fam;
    if (k <= 10) {
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        fam.clear();
        for (std::size_t i = 0; i < k; ++i) {
          if ((mask >> i) & 1U) fam.push_back(pairs_[i]);
        }
        if (!check_family(fam)) return c;
      }
      return c;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        for (std::size_t l = j; l < k; ++l) {
          fam = {pairs_[i], pairs_[j], pairs_[l]};
          if (!check_family(fam)) return c;
        }
      }
    }
    return c;
  }

 private:
  AxiomCheck fail(AxiomCheck c, int u, int a, int v, int b, const char* why) const {
    c.passed = false;
    c.witness = pair_text(f_, u, a) + " in " + name_ + " but " + pair_text(f_, v, b) + " is not (" +
                why + ")";
    return c;
  }

  const AdFrame& f_;
  const Relation& r_;
  std::string name_;
  int ell_sign_;
  std::vector<std::vector<int>> omega_up_, omega_down_, ell_up_, ell_down_;
  std::vector<OrderPair> pairs_;
};

// The two-relation interaction law: whenever (u,a) in lower and (v,b) in
// upper share a coordinate, (u,a) sits below (v,b) in the given order.
AxiomCheck interaction_law(const AdFrame& f, const Relation& lower, const Relation& upper,
                           int ell_sign, const std::string& name) {
  AxiomCheck c{name, true, {}};
  const auto lp = lower.pairs();
  const auto upairs = upper.pairs();
  for (const auto& [u, a] : lp) {
    for (const auto& [v, b] : upairs) {
      if (u != v && a != b) continue;
      const bool ell_ok = ell_sign > 0 ? f.ell.leq(a, b) : f.ell.leq(b, a);
      if (!(f.omega.leq(u, v) && ell_ok)) {
        c.passed = false;
        c.witness = pair_text(f, u, a) + " and " + pair_text(f, v, b) + " share a coordinate but are unordered";
        return c;
      }
    }
  }
  return c;
}

// Cross law: every pair in both relations has the named coordinate fixed.
AxiomCheck cross_law(const AdFrame& f, const Relation& r1, const Relation& r2, bool on_omega,
                     int required, const std::string& name) {
  AxiomCheck c{name, true, {}};
  for (const auto& [u, a] : r1.pairs()) {
    if (!r2.contains(u, a)) continue;
    const int got = on_omega ? u : a;
    if (got != required) {
      c.passed = false;
      c.witness = pair_text(f, u, a) + " lies in both relations";
      return c;
    }
  }
  return c;
}

void check_relation_shape(const AdFrame& f, const Relation& r, const char* name) {
  if (r.rows() != f.omega.size() || r.cols() != f.ell.size()) {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " has the wrong shape");
  }
}

}  // namespace

ValidationReport validate_adframe(const AdFrame& f) {
  if (!is_distributive(f.omega)) throw Error(ErrorKind::NonDistributiveLattice, "omega");
  if (!is_distributive(f.ell)) throw Error(ErrorKind::NonDistributiveLattice, "ell");
  check_relation_shape(f, f.tot, "tot");
  check_relation_shape(f, f.con, "con");
  check_relation_shape(f, f.fof, "fof");
  check_relation_shape(f, f.cou, "cou");

  const int obot = f.omega.bot();
  const int otop = f.omega.top();
  const int lbot = f.ell.bot();
  const int ltop = f.ell.top();
  const bool small = f.omega.size() * f.ell.size() <= 64;

  ValidationReport report;
  auto& out = report.checks;
  if (uses_up(f.variant)) {
    const RelationChecker tot(f, f.tot, "tot", +1);
    out.push_back(tot.closed_in_direction(+1, "upward-closed"));
    out.push_back(tot.contains(obot, ltop, "ff"));
    out.push_back(tot.contains(otop, lbot, "tt"));
    out.push_back(tot.closed_under(false, true, "logical-meet"));
    out.push_back(tot.closed_under(true, false, "logical-join"));

    const RelationChecker con(f, f.con, "con", +1);
    out.push_back(con.closed_in_direction(-1, "downward-closed"));
    if (small) out.push_back(con.scott_closed());
    out.push_back(con.contains(obot, ltop, "ff"));
    out.push_back(con.contains(otop, lbot, "tt"));
    out.push_back(con.closed_under(false, true, "logical-meet"));
    out.push_back(con.closed_under(true, false, "logical-join"));

    out.push_back(interaction_law(f, f.con, f.tot, +1, "law.con-tot"));
  }
  if (uses_down(f.variant)) {
    const RelationChecker fof(f, f.fof, "fof", -1);
    out.push_back(fof.closed_in_direction(+1, "upward-closed"));
    out.push_back(fof.contains(obot, lbot, "bot"));
    out.push_back(fof.contains(otop, ltop, "top"));
    out.push_back(fof.closed_under(false, false, "info-meet"));
    out.push_back(fof.closed_under(true, true, "info-join"));

    const RelationChecker cou(f, f.cou, "cou", -1);
    out.push_back(cou.closed_in_direction(-1, "downward-closed"));
    if (small) out.push_back(cou.scott_closed());
    out.push_back(cou.contains(obot, lbot, "bot"));
    out.push_back(cou.contains(otop, ltop, "top"));
    out.push_back(cou.closed_under(false, false, "info-meet"));
    out.push_back(cou.closed_under(true, true, "info-join"));

    out.push_back(interaction_law(f, f.cou, f.fof, -1, "law.cou-fof"));
  }
  if (f.variant == Variant::Both) {
    out.push_back(cross_law(f, f.con, f.cou, true, obot, "law.con-cou"));
    out.push_back(cross_law(f, f.tot, f.fof, true, otop, "law.tot-fof"));
    out.push_back(cross_law(f, f.con, f.fof, false, lbot, "law.con-fof"));
    out.push_back(cross_law(f, f.tot, f.cou, false, ltop, "law.tot-cou"));
  }
  return report;
}

bool is_lattice_hom(const std::vector<int>& map, const Lattice& from, const Lattice& to) {
  if (static_cast<int>(map.size()) != from.size()) return false;
  for (int v : map) {
    if (v < 0 || v >= to.size()) return false;
  }
  if (map[from.bot()] != to.bot() || map[from.top()] != to.top()) return false;
  for (int a = 0; a < from.size(); ++a) {
    for (int b = a + 1; b < from.size(); ++b) {
      if (map[from.join(a, b)] != to.join(map[a], map[b])) return false;
      if (map[from.meet(a, b)] != to.meet(map[a], map[b])) return false;
    }
  }
  return true;
}

namespace {

void lattice_hom_checks(const std::vector<int>& map, const Lattice& from, const Lattice& to,
                        const std::string& name, std::vector<AxiomCheck>& out) {
  AxiomCheck shape{name + ".total", true, {}};
  if (static_cast<int>(map.size()) != from.size()) {
    shape.passed = false;
    shape.witness = "map has " + std::to_string(map.size()) + " entries for " +
                    std::to_string(from.size()) + " elements";
  }
  for (std::size_t i = 0; i < map.size() && shape.passed; ++i) {
    if (map[i] < 0 || map[i] >= to.size()) {
      shape.passed = false;
      shape.witness = "element " + std::to_string(i) + " maps outside the target";
    }
  }
  out.push_back(shape);
  if (!shape.passed) return;

  AxiomCheck bot{name + ".bot", map[from.bot()] == to.bot(), {}};
  if (!bot.passed) bot.witness = "bottom maps to " + to.describe(map[from.bot()]);
  AxiomCheck top{name + ".top", map[from.top()] == to.top(), {}};
  if (!top.passed) top.witness = "top maps to " + to.describe(map[from.top()]);
  AxiomCheck join{name + ".join", true, {}};
  AxiomCheck meet{name + ".meet", true, {}};
  for (int a = 0; a < from.size(); ++a) {
    for (int b = a + 1; b < from.size(); ++b) {
      if (join.passed && map[from.join(a, b)] != to.join(map[a], map[b])) {
        join.passed = false;
        join.witness = "join of " + from.describe(a) + " and " + from.describe(b);
      }
      if (meet.passed && map[from.meet(a, b)] != to.meet(map[a], map[b])) {
        meet.passed = false;
        meet.witness = "meet of " + from.describe(a) + " and " + from.describe(b);
      }
    }
  }
  out.push_back(bot);
  out.push_back(top);
  out.push_back(join);
  out.push_back(meet);
}

AxiomCheck preserves(const AdFrameHom& h, const AdFrame& source, const AdFrame& target,
                     const Relation& from, const Relation& to, const std::string& name) {
  AxiomCheck c{"preserve." + name, true, {}};
  for (const auto& [u, a] : from.pairs()) {
    if (!to.contains(h.phi[u], h.p[a])) {
      c.passed = false;
      c.witness = pair_text(source, u, a) + " maps to " + pair_text(target, h.phi[u], h.p[a]) +
                  " outside " + name;
      return c;
    }
  }
  return c;
}

}  // namespace

ValidationReport validate_hom(const AdFrameHom& h, const AdFrame& source, const AdFrame& target) {
  ValidationReport report;
  lattice_hom_checks(h.phi, source.omega, target.omega, "phi", report.checks);
  lattice_hom_checks(h.p, source.ell, target.ell, "p", report.checks);
  if (!report.ok()) return report;
  const Variant v = target.variant;
  if (uses_up(v)) {
    report.checks.push_back(preserves(h, source, target, source.tot, target.tot, "tot"));
    report.checks.push_back(preserves(h, source, target, source.con, target.con, "con"));
  }
  if (uses_down(v)) {
    report.checks.push_back(preserves(h, source, target, source.fof, target.fof, "fof"));
    report.checks.push_back(preserves(h, source, target, source.cou, target.cou, "cou"));
  }
  return report;
}

AdFrame build_adO(const Space& space, Variant variant) {
  AdFrame f;
  f.omega = subset_lattice(space, SubsetKind::Opens);
  f.ell = subset_lattice(space, SubsetKind::Upsets);
  f.variant = variant;
  const int m = f.omega.size();
  const int k = f.ell.size();
  f.tot = f.con = f.fof = f.cou = Relation(m, k);
  const Subset all = space.carrier();
  for (int u = 0; u < m; ++u) {
    const Subset uu = f.omega.label(u);
    for (int a = 0; a < k; ++a) {
      const Subset aa = f.ell.label(a);
      if ((uu | aa) == all) f.tot.insert(u, a);
      if ((uu & aa) == 0) f.con.insert(u, a);
      if (bits::subset_of(aa, uu)) f.fof.insert(u, a);
      if (bits::subset_of(uu, aa)) f.cou.insert(u, a);
    }
  }
  return f;
}

AdFrameHom build_adO_hom(const PointMap& f, const Space& x, const Space& y) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw Error(ErrorKind::InvalidInput, "map size differs from source carrier");
  }
  for (int v : f) {
    if (v < 0 || v >= y.size()) throw Error(ErrorKind::IndexOutOfRange, "map image");
  }
  if (auto w = continuity_witness(f, x.topology(), y.topology())) {
    throw Error(ErrorKind::NotContinuous, "preimage of open " + bits::to_string(*w) + " is " +
                                              bits::to_string(preimage(f, *w)));
  }
  if (auto w = monotonicity_witness(f, x.order(), y.order())) {
    throw Error(ErrorKind::NotMonotone, std::to_string(w->first) + " <= " +
                                            std::to_string(w->second) + " but images unordered");
  }
  const Lattice x_opens = subset_lattice(x, SubsetKind::Opens);
  const Lattice x_ups = subset_lattice(x, SubsetKind::Upsets);
  const Lattice y_opens = subset_lattice(y, SubsetKind::Opens);
  const Lattice y_ups = subset_lattice(y, SubsetKind::Upsets);
  AdFrameHom h;
  for (Subset v : y_opens.labels()) h.phi.push_back(x_opens.index_of(preimage(f, v)));
  for (Subset b : y_ups.labels()) h.p.push_back(x_ups.index_of(preimage(f, b)));
  return h;
}

bool check_usc(const AdFrame& f) {
  if (!uses_up(f.variant)) throw Error(ErrorKind::VariantMismatch, "usc needs up or both");
  std::vector<char> gen(static_cast<std::size_t>(f.ell.size()), 0);
  std::vector<int> members{f.ell.bot()};
  gen[f.ell.bot()] = 1;
  for (const auto& [u, a] : f.tot.pairs()) {
    if (f.con.contains(u, a) && !gen[a]) {
      gen[a] = 1;
      members.push_back(a);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int c = f.ell.join(members[i], members[j]);
      if (!gen[c]) {
        gen[c] = 1;
        members.push_back(c);
      }
    }
  }
  return static_cast<int>(members.size()) == f.ell.size();
}

bool check_lsc(const AdFrame& f) {
  if (!uses_down(f.variant)) throw Error(ErrorKind::VariantMismatch, "lsc needs down or both");
  std::vector<char> gen(static_cast<std::size_t>(f.ell.size()), 0);
  std::vector<int> members{f.ell.top()};
  gen[f.ell.top()] = 1;
  for (const auto& [u, a] : f.fof.pairs()) {
    if (f.cou.contains(u, a) && !gen[a]) {
      gen[a] = 1;
      members.push_back(a);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int c = f.ell.meet(members[i], members[j]);
      if (!gen[c]) {
        gen[c] = 1;
        members.push_back(c);
      }
    }
  }
  return static_cast<int>(members.size()) == f.ell.size();
}

SemiClosedness check_usc_lsc(const AdFrame& f) {
  SemiClosedness out;
  if (uses_up(f.variant)) out.usc = check_usc(f);
  if (uses_down(f.variant)) out.lsc = check_lsc(f);
  return out;
}

AdFrame ind_frame(const Lattice& omega, Variant variant) {
  if (omega.trivial()) throw Error(ErrorKind::TrivialFrame, "Ind needs a non-trivial frame");
  AdFrame f;
  f.omega = omega;
  f.ell = Lattice::chain(2);
  f.variant = variant;
  const int m = omega.size();
  f.tot = f.con = f.fof = f.cou = Relation(m, 2);
  for (int u = 0; u < m; ++u) {
    const bool is_top = u == omega.top();
    const bool is_bot = u == omega.bot();
    for (int a = 0; a < 2; ++a) {
      if (is_top || a == 1) f.tot.insert(u, a);
      if (is_bot || a == 0) f.con.insert(u, a);
      if (is_top || a == 0) f.fof.insert(u, a);
      if (is_bot || a == 1) f.cou.insert(u, a);
    }
  }
  return f;
}

AdFrameHom ind_hom(const std::vector<int>& psi) { return {psi, {0, 1}}; }

AdFrameHom epsilon_hom(const AdFrame& f) {
  if (f.trivial()) throw Error(ErrorKind::TrivialFrame, "epsilon needs a non-trivial ad-frame");
  return {identity_map(f.omega.size()), {f.ell.bot(), f.ell.top()}};
}

}  // namespace adlab

namespace adlab {

std::vector<std::vector<int>> enumerate_lattice_homs(const Lattice& from, const Lattice& to,
                                                     long limit) {
  std::vector<std::vector<int>> out;
  const int m = from.size();
  std::vector<int> map(static_cast<std::size_t>(m), -1);
  long visited = 0;
  // Every pair whose operands and result became fully assigned with element i.
  auto consistent = [&](int i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k <= j; ++k) {
        const int jn = from.join(j, k);
        const int mt = from.meet(j, k);
        if (jn <= i && (j == i || jn == i) && map[jn] != to.join(map[j], map[k])) return false;
        if (mt <= i && (j == i || mt == i) && map[mt] != to.meet(map[j], map[k])) return false;
      }
    }
    if (i == from.bot() && map[i] != to.bot()) return false;
    if (i == from.top() && map[i] != to.top()) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (++visited > limit) throw Error(ErrorKind::BudgetExceeded, "lattice hom enumeration");
    if (i == m) {
      out.push_back(map);
      return;
    }
    for (int v = 0; v < to.size(); ++v) {
      map[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    map[i] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<AdFrameHom> enumerate_homs(const AdFrame& source, const AdFrame& target, long limit) {
  std::vector<AdFrameHom> out;
  const auto phis = enumerate_lattice_homs(source.omega, target.omega, limit);
  const auto ps = enumerate_lattice_homs(source.ell, target.ell, limit);
  if (static_cast<long>(phis.size()) * static_cast<long>(ps.size()) > limit) {
    throw Error(ErrorKind::BudgetExceeded, "ad-frame hom enumeration");
  }
  for (const auto& phi : phis) {
    for (const auto& p : ps) {
      AdFrameHom h{phi, p};
      if (validate_hom(h, source, target).ok()) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace adlab
