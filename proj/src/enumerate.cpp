#include <algorithm>
#include <random>

#include "adlab/error.hpp"
#include "adlab/theorems.hpp"

namespace adlab {

// ------------------------------------------------------------ enumeration

std::vector<Topology> enumerate_topologies(int n) {
  if (n < 0 || n > 4) throw Error(ErrorKind::BudgetExceeded, "topology enumeration needs n <= 4");
  const Subset all = bits::full(n);
  std::vector<Subset> proper;  // non-empty proper subsets
  for (Subset s = 1; s < all; ++s) proper.push_back(s);
  std::vector<Topology> out;
  if (n == 0) {
    out.push_back(Topology::make(0, {0}));
    return out;
  }
  const std::uint32_t limit = 1U << proper.size();
  std::vector<char> present(static_cast<std::size_t>(all) + 1, 0);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Subset> fam{0, all};
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if ((mask >> i) & 1U) fam.push_back(proper[i]);
    }
    std::fill(present.begin(), present.end(), 0);
    for (Subset s : fam) present[s] = 1;
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!present[fam[i] | fam[j]] || !present[fam[i] & fam[j]]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(Topology::make(n, std::move(fam)));
  }
  std::sort(out.begin(), out.end(), [](const Topology& a, const Topology& b) {
    const auto oa = a.opens();
    const auto ob = b.opens();
    if (oa.size() != ob.size()) return oa.size() < ob.size();
    return std::lexicographical_compare(oa.begin(), oa.end(), ob.begin(), ob.end(), bits::canonical_less);
  });
  return out;
}

std::vector<Preorder> enumerate_preorders(int n) {
  if (n < 0 || n > 4) throw Error(ErrorKind::BudgetExceeded, "preorder enumeration needs n <= 4");
  std::vector<OrderPair> off;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  std::vector<Preorder> out;
  const std::uint32_t limit = 1U << off.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Subset> rows(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) rows[x] = bits::single(x);
    for (std::size_t i = 0; i < off.size(); ++i) {
      if ((mask >> i) & 1U) rows[off[i].first] |= bits::single(off[i].second);
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      bits::for_each(rows[x], [&](int y) {
        if (!bits::subset_of(rows[y], rows[x])) transitive = false;
      });
    }
    if (transitive) out.push_back(Preorder::from_rows(std::move(rows)));
  }
  std::sort(out.begin(), out.end(), [](const Preorder& a, const Preorder& b) {
    const auto pa = a.strict_pairs().size();
    const auto pb = b.strict_pairs().size();
    if (pa != pb) return pa < pb;
    const auto ra = a.rows();
    const auto rb = b.rows();
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  return out;
}

std::vector<Space> enumerate_spaces(int n, SpaceMode mode, const Topology* fixed) {
  if (n > 4) throw Error(ErrorKind::BudgetExceeded, "space enumeration needs n <= 4");
  const auto preorders = enumerate_preorders(n);
  std::vector<Topology> tops;
  if (mode == SpaceMode::FixedTopology) {
    if (fixed == nullptr || fixed->size() != n) {
      throw Error(ErrorKind::InvalidInput, "fixed topology missing or of the wrong size");
    }
    tops.push_back(*fixed);
  } else {
    tops = enumerate_topologies(n);
    if (mode == SpaceMode::T0) {
      std::erase_if(tops, [](const Topology& t) { return !specialization_preorder(t).is_antisymmetric(); });
    }
  }
  std::vector<Space> out;
  out.reserve(tops.size() * preorders.size());
  for (const auto& t : tops) {
    for (const auto& p : preorders) out.emplace_back(t, p);
  }
  return out;
}

namespace {

template <typename Accept>
std::vector<PointMap> all_maps(int n, int m, long limit, Accept accept) {
  std::vector<PointMap> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (m == 0) return out;
  long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > limit) throw Error(ErrorKind::BudgetExceeded, "map enumeration");
  }
  PointMap f(static_cast<std::size_t>(n), 0);
  for (long c = 0; c < total; ++c) {
    long r = c;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(r % m);
      r /= m;
    }
    if (accept(f)) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<PointMap> continuous_maps(const Topology& from, const Topology& to, long limit) {
  return all_maps(from.size(), to.size(), limit,
                  [&](const PointMap& f) { return is_continuous(f, from, to); });
}

std::vector<PointMap> morphisms(const Space& from, const Space& to, long limit) {
  return all_maps(from.size(), to.size(), limit, [&](const PointMap& f) {
    return is_monotone(f, from.order(), to.order()) && is_continuous(f, from.topology(), to.topology());
  });
}

std::vector<Lattice> distributive_lattices(int max_size) {
  // Posets grow by adding a maximal element above a down-set; one poset per
  // isomorphism class of up-set lattice is kept.
  std::vector<Lattice> found;
  std::vector<Preorder> frontier{Preorder::discrete(0)};
  found.push_back(Lattice::from_family(upsets(frontier.front())));
  if (max_size < 1) return {};
  while (!frontier.empty()) {
    std::vector<Preorder> next;
    for (const auto& poset : frontier) {
      const int k = poset.size();
      if (k >= 16) continue;
      const Subset all = bits::full(k);
      for (Subset up : upsets(poset)) {
        const Subset down = all & ~up;
        std::vector<Subset> rows(poset.rows().begin(), poset.rows().end());
        bits::for_each(down, [&](int y) { rows[y] |= bits::single(k); });
        rows.push_back(bits::single(k));
        Preorder grown = Preorder::from_rows(std::move(rows));
        std::vector<Subset> ups;
        try {
          ups = upsets(grown);
        } catch (const Error&) {
          continue;
        }
        if (static_cast<int>(ups.size()) > max_size) continue;
        Lattice l = Lattice::from_family(std::move(ups));
        bool fresh = true;
        for (const auto& seen : found) {
          if (seen.size() == l.size() && !lattice_isos(seen, l).empty()) {
            fresh = false;
            break;
          }
        }
        if (fresh) {
          found.push_back(std::move(l));
          next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Lattice& a, const Lattice& b) { return a.size() < b.size(); });
  std::erase_if(found, [&](const Lattice& l) { return l.size() > max_size; });
  return found;
}

// ------------------------------------------------------------ generation

Space random_space(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Subset all = bits::full(n);
  std::vector<Subset> opens;
  const int k = n == 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n + 2));
  for (int i = 0; i < k; ++i) opens.push_back(rng() & all);
  Topology t = Topology::make(n, std::move(opens), true);
  std::vector<OrderPair> pairs;
  const int m = n == 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n * n / 2 + 1));
  for (int i = 0; i < m; ++i) {
    const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int y = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    pairs.emplace_back(x, y);
  }
  return Space(std::move(t), Preorder::from_pairs(n, pairs));
}

namespace {

const std::vector<Lattice>& small_distributive_lattices() {
  static const std::vector<Lattice> lattices = distributive_lattices(8);
  return lattices;
}

}  // namespace

GeneratedFrame random_adframe(FrameFamily family, Variant variant, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeneratedFrame g;
  g.family = family;
  if (family == FrameFamily::Ind) {
    const auto& pool = small_distributive_lattices();
    // Skip the trivial lattice at index 0.
    const std::size_t idx = 1 + rng() % (pool.size() - 1);
    g.frame = ind_frame(pool[idx], variant);
    g.description = "Ind(distributive lattice #" + std::to_string(idx) + " with " +
                    std::to_string(pool[idx].size()) + " elements)";
    return g;
  }
  const int n = 1 + static_cast<int>(rng() % 3);
  const Space x = random_space(n, rng());
  g.frame = build_adO(x, variant);
  g.description = "adO " + describe_space(x);
  if (family == FrameFamily::AdO) return g;

  AdFrame& f = g.frame;
  const int obot = f.omega.bot();
  const int otop = f.omega.top();
  const int lbot = f.ell.bot();
  const int ltop = f.ell.top();
  std::vector<std::string> options;
  if (uses_up(variant)) options.insert(options.end(), {"tot.contains-ff", "con.contains-tt"});
  if (uses_down(variant)) options.insert(options.end(), {"fof.contains-bot", "cou.contains-top"});
  if (variant == Variant::Both) options.emplace_back("law.con-fof");
  g.mutation = options[rng() % options.size()];
  if (g.mutation == "tot.contains-ff") f.tot.erase(obot, ltop);
  if (g.mutation == "con.contains-tt") f.con.erase(otop, lbot);
  if (g.mutation == "fof.contains-bot") f.fof.erase(obot, lbot);
  if (g.mutation == "cou.contains-top") f.cou.erase(otop, ltop);
  if (g.mutation == "law.con-fof") f.con.insert(otop, ltop);
  g.description += " mutated at " + g.mutation;
  return g;
}

// ------------------------------------------------------------ isomorphisms

namespace {

struct PointInvariant {
  int opens_containing;
  int up_size;
  int down_size;
  int closure_size;
  friend bool operator==(const PointInvariant&, const PointInvariant&) = default;
};

std::vector<PointInvariant> point_invariants(const Space& x) {
  std::vector<PointInvariant> out;
  for (int p = 0; p < x.size(); ++p) {
    int opens = 0;
    for (Subset u : x.topology().opens()) opens += bits::has(u, p) ? 1 : 0;
    out.push_back({opens, bits::count(x.order().up(p)), bits::count(x.order().down(p)),
                   bits::count(x.topology().closure(bits::single(p)))});
  }
  return out;
}

}  // namespace

std::optional<PointMap> find_pretop_iso(const Space& a, const Space& b, long budget) {
  const int n = a.size();
  if (n != b.size() || a.topology().opens().size() != b.topology().opens().size()) return std::nullopt;
  const auto ia = point_invariants(a);
  const auto ib = point_invariants(b);
  const Preorder sa = specialization_preorder(a.topology());
  const Preorder sb = specialization_preorder(b.topology());
  PointMap f(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  long nodes = 0;
  std::optional<PointMap> result;
  auto rec = [&](auto&& self, int i) -> bool {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "isomorphism search");
    if (i == n) {
      if (is_pretop_isomorphism(f, a, b)) {
        result = f;
        return true;
      }
      return false;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || !(ia[i] == ib[j])) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = a.order().leq(i, k) == b.order().leq(j, f[k]) && a.order().leq(k, i) == b.order().leq(f[k], j) &&
             sa.leq(i, k) == sb.leq(j, f[k]) && sa.leq(k, i) == sb.leq(f[k], j);
      }
      if (!ok) continue;
      f[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
      f[i] = -1;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

std::optional<PointMap> find_homeomorphism(const Topology& a, const Topology& b, long budget) {
  return find_pretop_iso(Space(a, Preorder::discrete(a.size())), Space(b, Preorder::discrete(b.size())),
                         budget);
}

std::vector<std::vector<int>> lattice_isos(const Lattice& a, const Lattice& b, long budget) {
  std::vector<std::vector<int>> out;
  const int m = a.size();
  if (m != b.size()) return out;
  auto degrees = [](const Lattice& l) {
    std::vector<std::pair<int, int>> d(static_cast<std::size_t>(l.size()));
    for (int x = 0; x < l.size(); ++x) {
      for (int y = 0; y < l.size(); ++y) {
        if (l.leq(y, x)) ++d[x].first;
        if (l.leq(x, y)) ++d[x].second;
      }
    }
    return d;
  };
  const auto da = degrees(a);
  const auto db = degrees(b);
  std::vector<int> f(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  long nodes = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "lattice isomorphism search");
    if (i == m) {
      out.push_back(f);
      return;
    }
    for (int j = 0; j < m; ++j) {
      if (used[j] || da[i] != db[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = a.leq(i, k) == b.leq(j, f[k]) && a.leq(k, i) == b.leq(f[k], j);
      }
      if (!ok) continue;
      f[i] = j;
      used[j] = 1;
      self(self, i + 1);
      used[j] = 0;
    }
    f[i] = -1;
  };
  rec(rec, 0);
  return out;
}

std::optional<AdFrameHom> find_adframe_iso(const AdFrame& a, const AdFrame& b, long budget) {
  if (a.variant != b.variant) return std::nullopt;
  const auto phis = lattice_isos(a.omega, b.omega, budget);
  const auto ps = lattice_isos(a.ell, b.ell, budget);
  if (static_cast<long>(phis.size()) * static_cast<long>(ps.size()) > budget) {
    throw Error(ErrorKind::BudgetExceeded, "ad-frame isomorphism search");
  }
  auto carries = [](const Relation& r, const Relation& s, const AdFrameHom& h) {
    if (r.count() != s.count()) return false;
    for (const auto& [u, x] : r.pairs()) {
      if (!s.contains(h.phi[u], h.p[x])) return false;
    }
    return true;
  };
  for (const auto& phi : phis) {
    for (const auto& p : ps) {
      const AdFrameHom h{phi, p};
      bool ok = true;
      if (uses_up(a.variant)) ok = carries(a.tot, b.tot, h) && carries(a.con, b.con, h);
      if (ok && uses_down(a.variant)) ok = carries(a.fof, b.fof, h) && carries(a.cou, b.cou, h);
      if (ok) return h;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ functors

Space discr(const Topology& t) { return Space(t, Preorder::discrete(t.size())); }
Space ind_space(const Topology& t) { return Space(t, Preorder::indiscrete(t.size())); }
Topology underlying(const Space& x) { return x.topology(); }

Topology frame_points(const Lattice& omega) {
  const auto primes = lattice_analyze(omega).primes;
  const int k = static_cast<int>(primes.size());
  if (k > max_points()) throw Error(ErrorKind::TooLarge, "frame has too many points");
  std::vector<Subset> opens;
  for (int u = 0; u < omega.size(); ++u) {
    Subset o = 0;
    for (int i = 0; i < k; ++i) {
      if (!omega.leq(u, primes[i])) o |= bits::single(i);
    }
    opens.push_back(o);
  }
  return Topology::make(k, std::move(opens));
}

Space lifted_preorder(const Topology& e, const std::vector<std::pair<PointMap, Space>>& targets) {
  const int n = e.size();
  for (const auto& [g, y] : targets) {
    if (static_cast<int>(g.size()) != n) throw Error(ErrorKind::InvalidInput, "map size differs from E");
    for (int v : g) {
      if (v < 0 || v >= y.size()) throw Error(ErrorKind::IndexOutOfRange, "map image");
    }
    if (auto w = continuity_witness(g, e, y.topology())) {
      throw Error(ErrorKind::NotContinuous, "preimage of " + bits::to_string(*w) + " is not open");
    }
  }
  std::vector<Subset> rows(static_cast<std::size_t>(n), bits::full(n));
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      for (const auto& [g, y] : targets) {
        if (!y.order().leq(g[x], g[z])) {
          rows[x] &= ~bits::single(z);
          break;
        }
      }
    }
  }
  Space out(e, Preorder::from_rows(std::move(rows)));
  for (const auto& [g, y] : targets) {
    if (!is_monotone(g, out.order(), y.order())) throw Error(ErrorKind::Internal, "lift not monotone");
  }
  // Maximality: every missing pair is refused by some target.
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (out.order().leq(x, z)) continue;
      const bool refused = std::any_of(targets.begin(), targets.end(), [&](const auto& t) {
        return !t.second.order().leq(t.first[x], t.first[z]);
      });
      if (!refused) throw Error(ErrorKind::Internal, "lift is not the largest preorder");
    }
  }
  return out;
}

AdFrameHom counit_hom(const Spectrum& spec, const AdFrame& ado_spec) {
  AdFrameHom h;
  for (Subset o : spec.open_map) h.phi.push_back(ado_spec.omega.index_of(o));
  for (Subset a : spec.upset_map) h.p.push_back(ado_spec.ell.index_of(a));
  return h;
}

}  // namespace adlab
