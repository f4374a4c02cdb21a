#include "adlab/duality.hpp"

#include <algorithm>
#include <tuple>

#include "adlab/error.hpp"
#include "adlab/sobrify.hpp"

namespace adlab {

namespace {

using Bitset = boost::dynamic_bitset<>;

constexpr int kBruteForceLimit = 16;

// The point determined by a prime p of omega and a coprime b of ell.
AdPoint point_from(const AdFrame& f, int p, int b) {
  AdPoint pt;
  pt.x.resize(static_cast<std::size_t>(f.omega.size()));
  pt.s.resize(static_cast<std::size_t>(f.ell.size()));
  for (int u = 0; u < f.omega.size(); ++u) {
    if (!f.omega.leq(u, p)) pt.x.set(u);
  }
  for (int a = 0; a < f.ell.size(); ++a) {
    if (f.ell.leq(b, a)) pt.s.set(a);
  }
  pt.prime = p;
  pt.coprime = b;
  return pt;
}

// Largest element outside x and least element of s.
AdPoint point_from_sets(const AdFrame& f, const Bitset& x, const Bitset& s) {
  AdPoint pt{x, s, f.omega.bot(), f.ell.top()};
  for (int u = 0; u < f.omega.size(); ++u) {
    if (!x.test(u)) pt.prime = f.omega.join(pt.prime, u);
  }
  for (int a = 0; a < f.ell.size(); ++a) {
    if (s.test(a)) pt.coprime = f.ell.meet(pt.coprime, a);
  }
  return pt;
}

bool is_upset(const std::vector<OrderPair>& covers, const Bitset& x) {
  for (const auto& [a, b] : covers) {
    if (x.test(a) && !x.test(b)) return false;
  }
  return true;
}

// Upward closed, closed under binary meets, contains top, misses bottom and
// is prime for binary joins: in a finite lattice exactly the completely prime
// (complete) filters.
bool is_prime_filter(const Lattice& l, const std::vector<OrderPair>& covers, const Bitset& x) {
  if (!x.test(l.top()) || x.test(l.bot())) return false;
  if (!is_upset(covers, x)) return false;
  for (int a = 0; a < l.size(); ++a) {
    for (int b = a + 1; b < l.size(); ++b) {
      if (x.test(a) && x.test(b) && !x.test(l.meet(a, b))) return false;
      if (!x.test(a) && !x.test(b) && x.test(l.join(a, b))) return false;
    }
  }
  return true;
}

std::vector<Bitset> prime_filters(const Lattice& l) {
  const int m = l.size();
  if (m > kBruteForceLimit) {
    throw Error(ErrorKind::TooLarge, "brute-force point scan needs at most 16 elements");
  }
  const auto covers = l.covers();
  std::vector<Bitset> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    Bitset x(static_cast<std::size_t>(m), mask);
    if (is_prime_filter(l, covers, x)) out.push_back(std::move(x));
  }
  return out;
}

bool point_order(const AdPoint& a, const AdPoint& b) {
  return std::tie(a.coprime, a.prime) < std::tie(b.coprime, b.prime);
}

bool satisfies_point_laws(const AdFrame& f, const Bitset& x, const Bitset& s) {
  if (uses_up(f.variant)) {
    for (const auto& [u, a] : f.tot.pairs()) {
      if (!x.test(u) && !s.test(a)) return false;
    }
    for (const auto& [u, a] : f.con.pairs()) {
      if (x.test(u) && s.test(a)) return false;
    }
  }
  if (uses_down(f.variant)) {
    for (const auto& [u, a] : f.fof.pairs()) {
      if (!x.test(u) && s.test(a)) return false;
    }
    for (const auto& [u, a] : f.cou.pairs()) {
      if (x.test(u) && !s.test(a)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_point(const AdFrame& f, const Bitset& x, const Bitset& s) {
  if (x.size() != static_cast<std::size_t>(f.omega.size()) ||
      s.size() != static_cast<std::size_t>(f.ell.size())) {
    return false;
  }
  return is_prime_filter(f.omega, f.omega.covers(), x) && is_prime_filter(f.ell, f.ell.covers(), s) &&
         satisfies_point_laws(f, x, s);
}

std::vector<AdPoint> enumerate_points(const AdFrame& f, PointAlgorithm algorithm) {
  std::vector<AdPoint> out;
  if (algorithm == PointAlgorithm::BruteForce) {
    const auto xs = prime_filters(f.omega);
    const auto ss = prime_filters(f.ell);
    for (const auto& x : xs) {
      for (const auto& s : ss) {
        if (satisfies_point_laws(f, x, s)) out.push_back(point_from_sets(f, x, s));
      }
    }
    std::sort(out.begin(), out.end(), point_order);
    return out;
  }

  const LatticeAnalysis om = lattice_analyze(f.omega);
  const LatticeAnalysis el = lattice_analyze(f.ell);
  std::vector<int> partner(static_cast<std::size_t>(f.ell.size()), -1);  // b -> q
  for (const auto& [q, b] : el.pitchfork) partner[b] = q;
  const int m = f.omega.size();
  const int k = f.ell.size();
  for (int b : el.coprimes) {
    const int q = partner[b];
    for (int p : om.primes) {
      bool ok = true;
      if (uses_up(f.variant)) {
        for (int a = 0; a < k && ok; ++a) {
          if (f.tot.contains(p, a) && !f.ell.leq(b, a)) ok = false;
        }
        for (int u = 0; u < m && ok; ++u) {
          if (f.con.contains(u, b) && !f.omega.leq(u, p)) ok = false;
        }
      }
      if (ok && uses_down(f.variant)) {
        if (q < 0) {
          // Every coprime of a finite lattice has a partner; kept for
          // robustness on malformed input.
          const AdPoint pt = point_from(f, p, b);
          ok = is_point(f, pt.x, pt.s);
        } else {
          for (int a = 0; a < k && ok; ++a) {
            if (f.fof.contains(p, a) && !f.ell.leq(a, q)) ok = false;
          }
          for (int u = 0; u < m && ok; ++u) {
            if (f.cou.contains(u, q) && !f.omega.leq(u, p)) ok = false;
          }
        }
      }
      if (ok) out.push_back(point_from(f, p, b));
    }
  }
  std::sort(out.begin(), out.end(), point_order);
  return out;
}

int Spectrum::find(int prime, int coprime) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].prime == prime && points[i].coprime == coprime) return static_cast<int>(i);
  }
  return -1;
}

Spectrum adpt_space(const AdFrame& f) {
  Spectrum spec;
  spec.points = enumerate_points(f, PointAlgorithm::Prime);
  const int n = static_cast<int>(spec.points.size());
  if (n > max_points()) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " points exceed the carrier cap");
  }
  spec.open_map.assign(static_cast<std::size_t>(f.omega.size()), 0);
  spec.upset_map.assign(static_cast<std::size_t>(f.ell.size()), 0);
  for (int i = 0; i < n; ++i) {
    const AdPoint& pt = spec.points[i];
    for (int u = 0; u < f.omega.size(); ++u) {
      if (pt.x.test(u)) spec.open_map[u] |= bits::single(i);
    }
    for (int a = 0; a < f.ell.size(); ++a) {
      if (pt.s.test(a)) spec.upset_map[a] |= bits::single(i);
    }
  }
  std::vector<Subset> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.ell.leq(spec.points[j].coprime, spec.points[i].coprime)) rows[i] |= bits::single(j);
    }
  }
  Topology top;
  try {
    top = Topology::make(n, spec.open_map);
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("spectrum opens: ") + e.what());
  }
  spec.space = Space(std::move(top), Preorder::from_rows(std::move(rows)));
  return spec;
}

PointMap adpt_hom(const AdFrameHom& h, const AdFrame& source, const Spectrum& source_spec,
                  const AdFrame& target, const Spectrum& target_spec) {
  PointMap out;
  out.reserve(target_spec.points.size());
  for (const AdPoint& pt : target_spec.points) {
    Bitset x(static_cast<std::size_t>(source.omega.size()));
    Bitset s(static_cast<std::size_t>(source.ell.size()));
    for (int u = 0; u < source.omega.size(); ++u) {
      if (pt.x.test(h.phi[u])) x.set(u);
    }
    for (int a = 0; a < source.ell.size(); ++a) {
      if (pt.s.test(h.p[a])) s.set(a);
    }
    const AdPoint back = point_from_sets(source, x, s);
    const int idx = source_spec.find(back.prime, back.coprime);
    if (idx < 0 || source_spec.points[idx].x != x || source_spec.points[idx].s != s) {
      throw Error(ErrorKind::Internal, "inverse image of point " + describe_point(target, pt) +
                                           " is not a point");
    }
    out.push_back(idx);
  }
  return out;
}

PointMap eta_map(const Space& x, const AdFrame& adox, const Spectrum& spec) {
  PointMap out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    const Subset outside = x.carrier() & ~x.topology().closure(bits::single(i));
    const int p = adox.omega.index_of(outside);
    const int b = adox.ell.index_of(x.order().up(i));
    const int idx = p < 0 || b < 0 ? -1 : spec.find(p, b);
    if (idx < 0) throw Error(ErrorKind::Internal, "eta image of " + std::to_string(i) + " not found");
    out.push_back(idx);
  }
  return out;
}

AdFrameHom transpose(const PointMap& f, const Space& x, const AdFrame& adox, const Spectrum& spec) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw Error(ErrorKind::NotAPointMap, "map size differs from the carrier");
  }
  for (int v : f) {
    if (v < 0 || v >= spec.space.size()) {
      throw Error(ErrorKind::NotAPointMap, "image " + std::to_string(v) + " is not a point");
    }
  }
  if (auto w = continuity_witness(f, x.topology(), spec.space.topology())) {
    throw Error(ErrorKind::NotContinuous, "preimage of " + bits::to_string(*w));
  }
  if (auto w = monotonicity_witness(f, x.order(), spec.space.order())) {
    throw Error(ErrorKind::NotMonotone, std::to_string(w->first) + " <= " + std::to_string(w->second));
  }
  AdFrameHom h;
  for (Subset o : spec.open_map) h.phi.push_back(adox.omega.index_of(preimage(f, o)));
  for (Subset a : spec.upset_map) h.p.push_back(adox.ell.index_of(preimage(f, a)));
  return h;
}

bool is_ad_T0(const Space& x) {
  return specialization_preorder(x.topology()).intersect(x.order()).is_antisymmetric();
}

AdSoberVerdict is_ad_sober(const Space& x, Variant variant) {
  AdSoberVerdict v;
  const auto pairs = irreducible_pairs(x, variant);
  std::vector<Subset> point_closure(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) point_closure[i] = x.topology().closure(bits::single(i));

  v.by_pairs = true;
  bool only_point_closures = true;
  for (const auto& pr : pairs) {
    int matches = 0;
    bits::for_each(x.order().equivalence_class(pr.rep), [&](int y) {
      if (point_closure[y] == pr.closed) ++matches;
    });
    if (matches == 0) only_point_closures = false;
    if (matches != 1 && v.by_pairs) {
      v.by_pairs = false;
      v.witness = "pair (" + bits::to_string(pr.closed) + ",[" + std::to_string(pr.rep) + "]) is " +
                  (matches == 0 ? "not a point closure" : "the image of several points");
    }
  }
  v.by_lemma = is_ad_T0(x) && only_point_closures;

  const AdFrame adox = build_adO(x, variant);
  const Spectrum spec = adpt_space(adox);
  const PointMap eta = eta_map(x, adox, spec);
  v.by_eta = is_bijection(eta, spec.space.size());
  v.by_eta_iso = v.by_eta && is_pretop_isomorphism(eta, x, spec.space);
  if (v.witness.empty() && !v.by_eta) v.witness = "eta is not bijective";
  return v;
}

std::string describe_point(const AdFrame& f, const AdPoint& pt) {
  return "(prime " + f.omega.describe(pt.prime) + ", coprime " + f.ell.describe(pt.coprime) + ")";
}

}  // namespace adlab
