#include "adlab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "adlab/error.hpp"

namespace adlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ExpectedFail: return "expected-fail";
    case Verdict::Skip: return "skip";
  }
  return "fail";
}

std::string describe_space(const Space& x) {
  std::string s = "n=" + std::to_string(x.size()) + " opens=[";
  bool first = true;
  for (Subset u : x.topology().opens()) {
    if (!first) s += ",";
    s += bits::to_string(u);
    first = false;
  }
  s += "] leq=[";
  first = true;
  for (const auto& [a, b] : x.order().strict_pairs()) {
    if (!first) s += ",";
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return s + "]";
}

std::string triangle_case(const Space& x, const Space& y, Variant variant, const PointMap& f) {
  const AdFrame frame = build_adO(y, variant);
  const Spectrum spec = adpt_space(frame);
  const AdFrame adox = build_adO(x, variant);
  const Spectrum specx = adpt_space(adox);
  const PointMap eta = eta_map(x, adox, specx);
  const AdFrameHom g = transpose(f, x, adox, spec);
  const auto report = validate_hom(g, frame, adox);
  if (!report.ok()) return "transpose is not a hom: " + report.first_failure()->name;
  const PointMap back = compose(adpt_hom(g, frame, spec, adox, specx), eta);
  if (back != f) return "adpt(f!) . eta differs from f";
  if (!(transpose(back, x, adox, spec) == g)) return "transpose of the round trip differs";
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string witness;
  long cases = 0;

  void fail(std::string why) {
    if (verdict == Verdict::Fail) return;
    verdict = Verdict::Fail;
    witness = std::move(why);
  }
  bool failed() const { return verdict == Verdict::Fail; }
};

int variant_index(Variant v) { return static_cast<int>(v); }

// Spaces with at most two points, with their adO data per variant, used as
// codomains for morphism-level checks.
struct Target {
  Space space;
  AdFrame frame[3];
  Spectrum spec[3];
  AdSobrification ads[3];
  PointMap eta[3];
};

const std::vector<Target>& small_targets() {
  static const std::vector<Target> targets = [] {
    std::vector<Target> out;
    for (int n = 0; n <= 2; ++n) {
      for (const Space& y : enumerate_spaces(n)) {
        Target t;
        t.space = y;
        for (Variant v : kAllVariants) {
          const int i = variant_index(v);
          t.frame[i] = build_adO(y, v);
          t.spec[i] = adpt_space(t.frame[i]);
          t.ads[i] = ads_space(y, v);
          t.eta[i] = eta_map(y, t.frame[i], t.spec[i]);
        }
        out.push_back(std::move(t));
      }
    }
    return out;
  }();
  return targets;
}

struct TopTarget {
  Topology top;
  std::vector<PointMap> maps;
};

// Codomain topologies and continuous maps out of `t` for naturality squares:
// every topology on at most two points with every continuous map, and for
// larger sources also a seeded sample of maps into three-point topologies.
std::vector<TopTarget> nat_targets(const Topology& t, std::uint64_t seed) {
  std::vector<TopTarget> out;
  for (int n = 0; n <= 2; ++n) {
    for (const Topology& y : enumerate_topologies(n)) out.push_back({y, continuous_maps(t, y)});
  }
  if (t.size() >= 3) {
    static const std::vector<Topology> threes = enumerate_topologies(3);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 8; ++k) {
      const Topology& y = threes[rng() % threes.size()];
      PointMap f(static_cast<std::size_t>(t.size()));
      bool found = false;
      for (int attempt = 0; attempt < 50 && !found; ++attempt) {
        for (auto& v : f) v = static_cast<int>(rng() % 3);
        found = is_continuous(f, t, y);
      }
      if (!found) std::fill(f.begin(), f.end(), static_cast<int>(rng() % 3));
      out.push_back({y, {f}});
    }
  }
  return out;
}

std::uint64_t space_seed(const Space& x) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : describe_space(x)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

// ------------------------------------------------------------ checks

void check_ado_valid(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const AdFrame f = build_adO(x, in.variant);
  const auto report = validate_adframe(f);
  out.cases = static_cast<long>(report.checks.size());
  if (const auto* c = report.first_failure()) out.fail(c->name + ": " + c->witness);
  // Complement readings of containment and inclusion.
  const Subset all = x.carrier();
  for (int u = 0; u < f.omega.size(); ++u) {
    for (int a = 0; a < f.ell.size(); ++a) {
      const Subset uu = f.omega.label(u);
      const Subset na = all & ~f.ell.label(a);
      if (f.fof.contains(u, a) != ((uu | na) == all)) out.fail("fof complement reading at " + f.omega.describe(u));
      if (f.cou.contains(u, a) != ((uu & na) == 0)) out.fail("cou complement reading at " + f.omega.describe(u));
    }
  }
}

void check_adj_triangle(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const int vi = variant_index(in.variant);
  const AdFrame adox = build_adO(x, in.variant);
  const Spectrum specx = adpt_space(adox);
  const PointMap eta = eta_map(x, adox, specx);
  for (const Target& t : small_targets()) {
    const AdFrame& frame = t.frame[vi];
    const Spectrum& spec = t.spec[vi];
    const auto maps = morphisms(x, spec.space);
    std::vector<AdFrameHom> transposes;
    for (const PointMap& f : maps) {
      ++out.cases;
      const AdFrameHom g = transpose(f, x, adox, spec);
      const auto report = validate_hom(g, frame, adox);
      if (!report.ok()) {
        out.fail("transpose into adO X is not a hom (" + report.first_failure()->name + ") for target " +
                 describe_space(t.space));
        return;
      }
      if (compose(adpt_hom(g, frame, spec, adox, specx), eta) != f) {
        out.fail("adpt(f!) . eta != f for target " + describe_space(t.space));
        return;
      }
      transposes.push_back(g);
    }
    // Exhaustive uniqueness on small hom spaces: homs and maps correspond.
    if (frame.omega.size() * adox.omega.size() <= 16 && frame.ell.size() * adox.ell.size() <= 64) {
      const auto homs = enumerate_homs(frame, adox);
      if (homs.size() != maps.size()) {
        out.fail(std::to_string(homs.size()) + " homs against " + std::to_string(maps.size()) +
                 " maps for target " + describe_space(t.space));
        return;
      }
      for (const auto& h : homs) {
        const PointMap fh = compose(adpt_hom(h, frame, spec, adox, specx), eta);
        if (!(transpose(fh, x, adox, spec) == h)) {
          out.fail("round-tripped hom differs for target " + describe_space(t.space));
          return;
        }
      }
    }
  }
}

void check_adj_exists(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const Variant v = in.variant;
  const int vi = variant_index(v);
  const AdFrame adox = build_adO(x, v);
  const Spectrum specx = adpt_space(adox);
  const PointMap etax = eta_map(x, adox, specx);
  if (!is_continuous(etax, x.topology(), specx.space.topology()) ||
      !is_monotone(etax, x.order(), specx.space.order())) {
    out.fail("eta is not a morphism");
    return;
  }
  // Naturality of the unit.
  for (const Target& t : small_targets()) {
    for (const PointMap& f : morphisms(x, t.space)) {
      ++out.cases;
      const AdFrameHom h = build_adO_hom(f, x, t.space);
      if (!validate_hom(h, t.frame[vi], adox).ok()) {
        out.fail("adO f is not a hom into adO X");
        return;
      }
      const PointMap lhs = compose(adpt_hom(h, t.frame[vi], t.spec[vi], adox, specx), etax);
      if (lhs != compose(t.eta[vi], f)) {
        out.fail("unit not natural along a map to " + describe_space(t.space));
        return;
      }
    }
  }
  // Triangle identities.
  const AdFrame ado_spec = build_adO(specx.space, v);
  const AdFrameHom eps = counit_hom(specx, ado_spec);
  if (!validate_hom(eps, adox, ado_spec).ok()) {
    out.fail("counit at adO X is not a hom");
    return;
  }
  const AdFrameHom ado_eta = build_adO_hom(etax, x, specx.space);
  if (!(compose(ado_eta, eps) == identity_hom(adox))) {
    out.fail("adO(eta) . counit is not the identity");
    return;
  }
  const Spectrum spec2 = adpt_space(ado_spec);
  const PointMap eta_spec = eta_map(specx.space, ado_spec, spec2);
  const PointMap adpt_eps = adpt_hom(eps, adox, specx, ado_spec, spec2);
  if (compose(adpt_eps, eta_spec) != identity_map(specx.space.size())) {
    out.fail("adpt(counit) . eta is not the identity");
  }
  ++out.cases;
}

void check_usc_lsc(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const Variant v = in.variant;
  auto run = [&](const AdFrame& f, const char* what, bool compare_with_space) {
    const Spectrum spec = adpt_space(f);
    ++out.cases;
    if (uses_up(v)) {
      const bool usc = check_usc(f);
      if (compare_with_space && usc != upper_semi_closed(x)) {
        out.fail(std::string("(usc) of ") + what + " is " + (usc ? "true" : "false") +
                 " but upper semi-closedness disagrees");
      }
      if (usc && !upper_semi_closed(spec.space)) out.fail(std::string("spectrum of ") + what + " not upper semi-closed");
    }
    if (uses_down(v)) {
      const bool lsc = check_lsc(f);
      if (compare_with_space && lsc != lower_semi_closed(x)) {
        out.fail(std::string("(lsc) of ") + what + " is " + (lsc ? "true" : "false") +
                 " but lower semi-closedness disagrees");
      }
      if (lsc && !lower_semi_closed(spec.space)) out.fail(std::string("spectrum of ") + what + " not lower semi-closed");
    }
  };
  run(build_adO(x, v), "adO X", true);
  if (x.size() > 0) run(ind_frame(subset_lattice(x, SubsetKind::Opens), v), "Ind(O X)", false);
}

void check_ads_iso(const Instance& in, Outcome& out) {
  const IsoCheck iso = ads_adpt_iso(in.space, in.variant);
  out.cases = static_cast<long>(iso.map.size());
  if (!iso.ok) out.fail(iso.witness);
}

void check_os_iso(const Instance& in, Outcome& out) {
  const AdSobrification xs = ads_space(in.space, in.variant);
  out.cases = static_cast<long>(xs.diamond_map.size() + xs.bracket_map.size());
  const IsoCheck c = check_diamond_bracket(in.space, xs);
  if (!c.ok) out.fail(c.witness);
}

void check_eta_preimage(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const AdSobrification xs = ads_space(x, in.variant);
  const auto opens = x.topology().opens();
  for (std::size_t u = 0; u < opens.size(); ++u) {
    ++out.cases;
    if (preimage(xs.unit, xs.diamond_map[u]) != opens[u]) {
      out.fail("eta preimage of the diamond of " + bits::to_string(opens[u]));
    }
  }
  const auto ups = upsets(x.order());
  for (std::size_t a = 0; a < ups.size(); ++a) {
    ++out.cases;
    if (preimage(xs.unit, xs.bracket_map[a]) != ups[a]) {
      out.fail("eta preimage of the bracket of " + bits::to_string(ups[a]));
    }
  }
  // Same identities on the spectrum side.
  const AdFrame adox = build_adO(x, in.variant);
  const Spectrum spec = adpt_space(adox);
  const PointMap eta = eta_map(x, adox, spec);
  for (int u = 0; u < adox.omega.size(); ++u) {
    if (preimage(eta, spec.open_map[u]) != adox.omega.label(u)) out.fail("eta preimage of O_U");
  }
  for (int a = 0; a < adox.ell.size(); ++a) {
    if (preimage(eta, spec.upset_map[a]) != adox.ell.label(a)) out.fail("eta preimage of A_A");
  }
}

std::string flags(const AdSoberVerdict& sb) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("pairs=") + b(sb.by_pairs) + " eta-bijective=" + b(sb.by_eta) + " eta-iso=" +
         b(sb.by_eta_iso) + " lemma=" + b(sb.by_lemma);
}

void check_adsober_eq(const Instance& in, Outcome& out) {
  const AdSoberVerdict sb = is_ad_sober(in.space, in.variant);
  out.cases = 1;
  if (!(sb.by_pairs == sb.by_eta && sb.by_eta == sb.by_eta_iso)) out.fail(flags(sb));
}

void check_adt0_lemma(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const AdSoberVerdict sb = is_ad_sober(x, in.variant);
  out.cases = 1;
  if (sb.by_pairs != sb.by_lemma) out.fail(flags(sb));
  // Separation reading of ad-T0.
  bool separated = true;
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      if (!bits::has(x.order().equivalence_class(a), b)) continue;
      const auto opens = x.topology().opens();
      const bool split = std::any_of(opens.begin(), opens.end(),
                                     [&](Subset u) { return bits::has(u, a) != bits::has(u, b); });
      if (!split) separated = false;
    }
  }
  if (separated != is_ad_T0(x)) out.fail("ad-T0 readings disagree");
}

void check_nat_ind(const Instance& in, Outcome& out) {
  const Topology& t = in.space.topology();
  const Variant v = in.variant;
  auto project = [](const AdSobrification& xs, const Sobrification& s) {
    PointMap pi;
    for (const auto& pr : xs.pairs) {
      pi.push_back(static_cast<int>(std::find(s.points.begin(), s.points.end(), pr.closed) - s.points.begin()));
    }
    return pi;
  };
  const Space ix = ind_space(t);
  const AdSobrification is = ads_space(ix, v);
  const Sobrification s = standard_sobrification(t);
  const PointMap pi = project(is, s);
  if (!is_pretop_isomorphism(pi, is.space, ind_space(s.space))) {
    out.fail("(C,[x]) -> C is not an isomorphism onto Ind(X^s)");
    return;
  }
  for (const auto& [y, maps] : nat_targets(t, space_seed(in.space))) {
    const Space iy = ind_space(y);
    const AdSobrification iys = ads_space(iy, v);
    const Sobrification sy = standard_sobrification(y);
    const PointMap piy = project(iys, sy);
    for (const PointMap& g : maps) {
      ++out.cases;
      const PointMap gads = ads_hom(g, is, iy, iys);
      PointMap gs;
      for (Subset c : s.points) {
        const Subset d = y.closure(image(g, c));
        gs.push_back(static_cast<int>(std::find(sy.points.begin(), sy.points.end(), d) - sy.points.begin()));
      }
      if (compose(piy, gads) != compose(gs, pi)) {
        out.fail("naturality square fails along a map to a " + std::to_string(y.size()) + "-point space");
        return;
      }
    }
  }
}

void check_nat_discr(const Instance& in, Outcome& out) {
  const Topology& t = in.space.topology();
  const Variant v = in.variant;
  const Space dx = discr(t);
  const AdSobrification ds = ads_space(dx, v);
  if (!is_pretop_isomorphism(ds.unit, dx, ds.space)) {
    out.fail("x -> (cl{x}, x) is not an isomorphism");
    return;
  }
  for (const auto& [y, maps] : nat_targets(t, space_seed(in.space))) {
    const Space dy = discr(y);
    const AdSobrification dys = ads_space(dy, v);
    for (const PointMap& g : maps) {
      ++out.cases;
      if (compose(ads_hom(g, ds, dy, dys), ds.unit) != compose(dys.unit, g)) {
        out.fail("naturality square fails along a map to a " + std::to_string(y.size()) + "-point space");
        return;
      }
    }
  }
}

void check_cex_ads(const Instance& in, Outcome& out) {
  const AdSobrification xs = ads_space(in.space, in.variant);
  const Sobrification s = standard_sobrification(in.space.topology());
  out.cases = 1;
  if (!find_homeomorphism(underlying(xs.space), s.space)) {
    out.verdict = Verdict::ExpectedFail;
    out.witness = "|X^ads| has " + std::to_string(xs.space.size()) + " points, |X|^s has " +
                  std::to_string(s.space.size()) + "; not homeomorphic";
  }
}

void check_cex_lift(const Instance& in, Outcome& out) {
  const AdFrame f = build_adO(in.space, in.variant);
  const Spectrum spec = adpt_space(f);
  const Topology pt = frame_points(f.omega);
  out.cases = 1;
  if (!find_homeomorphism(underlying(spec.space), pt)) {
    out.verdict = Verdict::ExpectedFail;
    out.witness = "|adpt(adO X)| has " + std::to_string(spec.space.size()) + " points, pt|adO X| has " +
                  std::to_string(pt.size()) + "; not homeomorphic";
  }
}

// Hypotheses of the |X^ads| = |X|^s comparison for one variant.
bool homeo_hypotheses(const Space& x, Variant v) {
  const bool t1 = x.topology().opens().size() == (std::size_t{1} << x.size());
  if (t1) return true;  // finite T1 spaces are discrete, hence sober
  if (uses_up(v) && !upper_semi_closed(x)) return false;
  if (uses_down(v) && !lower_semi_closed(x)) return false;
  for (Subset c : irreducible_closed_sets(x.topology())) {
    bool found = false;
    bits::for_each(c, [&](int p) {
      const bool up_ok = !uses_up(v) || bits::subset_of(c, x.order().up(p));
      const bool down_ok = !uses_down(v) || bits::subset_of(c, x.order().down(p));
      if (up_ok && down_ok) found = true;
    });
    if (!found) return false;
  }
  return true;
}

void check_homeo_ads(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const Variant v = in.variant;
  if (!homeo_hypotheses(x, v)) {
    out.verdict = Verdict::Skip;
    out.witness = "hypotheses do not hold";
    return;
  }
  auto project = [](const AdSobrification& xs, const Sobrification& s) {
    PointMap pi;
    for (const auto& pr : xs.pairs) {
      pi.push_back(static_cast<int>(std::find(s.points.begin(), s.points.end(), pr.closed) - s.points.begin()));
    }
    return pi;
  };
  const AdSobrification xs = ads_space(x, v);
  const Sobrification s = standard_sobrification(x.topology());
  const PointMap pi = project(xs, s);
  ++out.cases;
  if (!is_homeomorphism(pi, xs.space.topology(), s.space)) {
    out.fail("(C,[x]) -> C is not a homeomorphism: " + std::to_string(xs.space.size()) + " pairs, " +
             std::to_string(s.space.size()) + " irreducible closed sets");
    return;
  }
  const int vi = variant_index(v);
  for (const Target& t : small_targets()) {
    if (!homeo_hypotheses(t.space, v)) continue;
    const Sobrification sy = standard_sobrification(t.space.topology());
    const PointMap piy = project(t.ads[vi], sy);
    for (const PointMap& f : morphisms(x, t.space)) {
      ++out.cases;
      PointMap fs;
      for (Subset c : s.points) {
        const Subset d = t.space.topology().closure(image(f, c));
        fs.push_back(static_cast<int>(std::find(sy.points.begin(), sy.points.end(), d) - sy.points.begin()));
      }
      if (compose(piy, ads_hom(f, xs, t.space, t.ads[vi])) != compose(fs, pi)) {
        out.fail("projection not natural along a map to " + describe_space(t.space));
        return;
      }
    }
  }
}

void check_idempotent(const Instance& in, Outcome& out) {
  const Space& x = in.space;
  const Variant v = in.variant;
  const AdSobrification xs = ads_space(x, v);
  const AdSobrification xss = ads_space(xs.space, v);
  out.cases = 2;
  if (!is_pretop_isomorphism(xss.unit, xs.space, xss.space)) {
    out.fail("eta at X^ads is not an isomorphism (" + std::to_string(xs.space.size()) + " vs " +
             std::to_string(xss.space.size()) + " points)");
    return;
  }
  const AdFrame f = build_adO(x, v);
  const Spectrum spec = adpt_space(f);
  const AdSoberVerdict sb = is_ad_sober(spec.space, v);
  if (!sb.sober() || !sb.by_eta_iso) out.fail("adpt(adO X) is not ad-sober: " + sb.witness);
}

bool skip_empty(const Instance& in, Outcome& out) {
  if (in.space.size() > 0) return false;
  out.verdict = Verdict::Skip;
  out.witness = "empty space (trivial frame)";
  return true;
}

void check_ind_valid(const Instance& in, Outcome& out) {
  if (skip_empty(in, out)) return;
  const AdFrame f = ind_frame(subset_lattice(in.space, SubsetKind::Opens), in.variant);
  const auto report = validate_adframe(f);
  out.cases = static_cast<long>(report.checks.size());
  if (const auto* c = report.first_failure()) out.fail(c->name + ": " + c->witness);
}

void check_eps_valid(const Instance& in, Outcome& out) {
  if (skip_empty(in, out)) return;
  const AdFrame f = build_adO(in.space, in.variant);
  const AdFrame ind = ind_frame(f.omega, in.variant);
  const auto report = validate_hom(epsilon_hom(f), ind, f);
  out.cases = static_cast<long>(report.checks.size());
  if (const auto* c = report.first_failure()) out.fail(c->name + ": " + c->witness);
}

void check_ind_adj(const Instance& in, Outcome& out) {
  if (skip_empty(in, out)) return;
  static const std::vector<Lattice> frames = distributive_lattices(4);
  const AdFrame f = build_adO(in.space, in.variant);
  const AdFrameHom eps = epsilon_hom(f);
  const std::vector<int> bnd{f.ell.bot(), f.ell.top()};
  for (const Lattice& omega : frames) {
    if (omega.trivial()) continue;
    const AdFrame ind = ind_frame(omega, in.variant);
    const auto homs = enumerate_homs(ind, f);
    auto psis = enumerate_lattice_homs(omega, f.omega);
    std::vector<std::vector<int>> phis;
    for (const auto& h : homs) {
      ++out.cases;
      if (h.p != bnd) {
        out.fail("hom from Ind of a " + std::to_string(omega.size()) + "-element frame with p != bnd");
        return;
      }
      if (!(compose(eps, ind_hom(h.phi)) == h)) {
        out.fail("hom does not factor as epsilon . Ind(phi)");
        return;
      }
      phis.push_back(h.phi);
    }
    std::sort(phis.begin(), phis.end());
    std::sort(psis.begin(), psis.end());
    if (phis != psis) {
      out.fail("frame homs and ad-frame homs from Ind of a " + std::to_string(omega.size()) +
               "-element frame do not correspond");
      return;
    }
  }
}

void check_lift_square(const Instance& in, Outcome& out) {
  if (skip_empty(in, out)) return;
  const Topology& t = in.space.topology();
  const AdFrame a = build_adO(ind_space(t), in.variant);
  const AdFrame b = ind_frame(subset_lattice(ind_space(t), SubsetKind::Opens), in.variant);
  out.cases = 1;
  // Explicit witness: identity on opens, empty set -> 0 and full set -> 1.
  AdFrameHom h{identity_map(a.omega.size()), std::vector<int>(2)};
  h.p[a.ell.index_of(0)] = 0;
  h.p[a.ell.index_of(t.carrier())] = 1;
  const bool explicit_ok = validate_hom(h, a, b).ok() && a.tot.count() == b.tot.count() &&
                           a.con.count() == b.con.count() && a.fof.count() == b.fof.count() &&
                           a.cou.count() == b.cou.count();
  if (!explicit_ok) {
    out.fail("explicit map adO(Ind X) -> Ind(O X) is not an isomorphism");
    return;
  }
  if (!find_adframe_iso(a, b)) out.fail("no isomorphism adO(Ind X) -> Ind(O X)");
}

using CheckFn = void (*)(const Instance&, Outcome&);

struct Entry {
  TheoremInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"ADO-VALID", "adO X is an ad-frame", false}, check_ado_valid},
      {{"ADJ-TRIANGLE", "every map X -> adpt(F) has a unique transpose F -> adO X", false}, check_adj_triangle},
      {{"ADJ-EXISTS", "adO is left adjoint to adpt: natural unit and triangle identities", false}, check_adj_exists},
      {{"USC-LSC", "(usc)/(lsc) of adO X match semi-closedness and pass to spectra", false}, check_usc_lsc},
      {{"ADS-ISO", "X^ads is isomorphic to adpt(adO X)", false}, check_ads_iso},
      {{"OS-ISO", "diamond and bracket are order-isomorphisms", false}, check_os_iso},
      {{"ETA-PREIMAGE", "eta pulls diamond U back to U and [A] back to A", false}, check_eta_preimage},
      {{"ADSOBER-EQ", "eta bijective, eta isomorphism and ad-sober agree", false}, check_adsober_eq},
      {{"NAT-IND", "(Ind X)^ads is naturally isomorphic to Ind(X^s)", false}, check_nat_ind},
      {{"NAT-DISCR", "(Discr X)^ads is naturally isomorphic to X", false}, check_nat_discr},
      {{"CEX-ADS", "|X^ads| and |X|^s differ in general", true}, check_cex_ads},
      {{"HOMEO-ADS", "(C,[x]) -> C is a homeomorphism under the semi-closedness hypotheses", false},
       check_homeo_ads},
      {{"ADT0-LEMMA", "ad-sober iff ad-T0 with only point-closure pairs", false}, check_adt0_lemma},
      {{"IDEMPOTENT", "ad-sobrification is idempotent and spectra are ad-sober", false}, check_idempotent},
      {{"IND-VALID", "Ind of a non-trivial frame is an ad-frame", false}, check_ind_valid},
      {{"EPS-VALID", "epsilon is an ad-frame homomorphism", false}, check_eps_valid},
      {{"IND-ADJ", "homs from Ind(W) factor uniquely through epsilon with p = bnd", false}, check_ind_adj},
      {{"LIFT-SQUARE", "adO(Ind X) is isomorphic to Ind(O X)", false}, check_lift_square},
      {{"CEX-LIFT", "|adpt F| and pt|F| differ in general", true}, check_cex_lift},
  };
  return table;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorKind::UnknownTheorem, std::string(id));
}

Outcome evaluate(const Entry& e, const Instance& in) {
  Outcome out;
  try {
    e.fn(in, out);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) throw;
    out.fail(std::string("exception: ") + err.what());
  }
  return out;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& find_theorem(std::string_view id) { return find_entry(id).info; }

std::string describe_instance(const Space& x, Variant v) {
  return describe_space(x) + " variant=" + std::string(to_string(v));
}

CheckReport run_check(std::string_view id, const Instance& inst, bool minimize) {
  const Entry& e = find_entry(id);
  CheckReport r;
  r.id = e.info.id;
  r.instance = inst.description.empty() ? describe_instance(inst.space, inst.variant) : inst.description;
  const auto start = Clock::now();
  Outcome out = evaluate(e, inst);
  if (out.failed() && minimize) {
    // Greedy point removal while the failure persists.
    Space cur = inst.space;
    std::string witness = out.witness;
    bool shrunk = true;
    while (shrunk && cur.size() > 0) {
      shrunk = false;
      for (int p = 0; p < cur.size(); ++p) {
        const Space smaller = cur.restrict_to(cur.carrier() & ~bits::single(p));
        const Outcome o = evaluate(e, {smaller, inst.variant, {}});
        if (o.failed()) {
          cur = smaller;
          witness = o.witness;
          shrunk = true;
          break;
        }
      }
    }
    if (cur.size() < inst.space.size()) out.witness = witness + " [minimized to " + describe_space(cur) + "]";
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.verdict = out.verdict;
  r.witness = out.witness;
  r.cases = out.cases;
  return r;
}

CheckReport check_frame(std::string_view id, const GeneratedFrame& g) {
  CheckReport r;
  r.id = std::string(id);
  r.instance = g.description + " variant=" + std::string(to_string(g.frame.variant));
  const auto start = Clock::now();
  Outcome out;
  const AdFrame& f = g.frame;
  if (id == "IDEMPOTENT") {
    const Spectrum spec = adpt_space(f);
    const AdSoberVerdict sb = is_ad_sober(spec.space, f.variant);
    out.cases = static_cast<long>(spec.points.size());
    if (!sb.sober() || !sb.consistent()) out.fail("spectrum is not ad-sober: " + flags(sb));
  } else if (id == "USC-LSC") {
    const Spectrum spec = adpt_space(f);
    out.cases = 1;
    if (uses_up(f.variant) && check_usc(f) && !upper_semi_closed(spec.space)) {
      out.fail("(usc) holds but the spectrum is not upper semi-closed");
    }
    if (uses_down(f.variant) && check_lsc(f) && !lower_semi_closed(spec.space)) {
      out.fail("(lsc) holds but the spectrum is not lower semi-closed");
    }
  } else if (id == "ADO-VALID" || id == "IND-VALID") {
    const auto report = validate_adframe(f);
    out.cases = static_cast<long>(report.checks.size());
    if (g.family == FrameFamily::Mutated) {
      const AxiomCheck* c = report.find(g.mutation);
      if (c == nullptr || c->passed) out.fail("mutation at " + g.mutation + " went undetected");
    } else if (const auto* c = report.first_failure()) {
      out.fail(c->name + ": " + c->witness);
    }
  } else {
    throw Error(ErrorKind::UnknownTheorem, std::string(id) + " has no ad-frame level check");
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.verdict = out.verdict;
  r.witness = out.witness;
  r.cases = out.cases;
  return r;
}

std::vector<Instance> sweep_instances(const SweepOptions& opt) {
  std::vector<Instance> out;
  std::vector<Variant> variants;
  if (opt.variant) {
    variants.push_back(*opt.variant);
  } else {
    variants.assign(std::begin(kAllVariants), std::end(kAllVariants));
  }
  for (const Space& x : enumerate_spaces(opt.n)) {
    for (Variant v : variants) out.push_back({x, v, describe_instance(x, v)});
  }
  return out;
}

SweepSummary sweep(std::string_view id, const SweepOptions& opt) {
  find_entry(id);
  const auto instances = sweep_instances(opt);
  // Build shared caches before fanning out.
  small_targets();
  distributive_lattices(1);

  std::vector<std::optional<CheckReport>> slots(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> over_budget{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto start = Clock::now();

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      if (opt.budget_ms > 0 &&
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() > opt.budget_ms) {
        over_budget = true;
        stop = true;
        return;
      }
      try {
        CheckReport r = run_check(id, instances[i], opt.minimize);
        const bool failed = r.verdict == Verdict::Fail;
        slots[i] = std::move(r);
        if (failed && opt.fail_fast) stop = true;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 64);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SweepSummary s;
  for (auto& slot : slots) {
    if (!slot) {
      s.cancelled = true;
      continue;
    }
    switch (slot->verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::ExpectedFail: ++s.expected_fail; break;
      case Verdict::Skip: ++s.skip; break;
    }
    s.reports.push_back(std::move(*slot));
  }
  s.budget_exceeded = over_budget;
  return s;
}

}  // namespace adlab
