#include "adlab/sobrify.hpp"

#include <algorithm>

#include "adlab/duality.hpp"
#include "adlab/error.hpp"

namespace adlab {

Sobrification standard_sobrification(const Topology& x) {
  Sobrification out;
  out.points = irreducible_closed_sets(x);
  const int k = static_cast<int>(out.points.size());
  if (k > max_points()) throw Error(ErrorKind::TooLarge, "sobrification exceeds the carrier cap");
  std::vector<Subset> opens;
  for (Subset u : x.opens()) {
    Subset d = 0;
    for (int i = 0; i < k; ++i) {
      if ((out.points[i] & u) != 0) d |= bits::single(i);
    }
    opens.push_back(d);
  }
  out.space = Topology::make(k, std::move(opens));
  for (int p = 0; p < x.size(); ++p) {
    const Subset c = x.closure(bits::single(p));
    const auto it = std::find(out.points.begin(), out.points.end(), c);
    out.unit.push_back(static_cast<int>(it - out.points.begin()));
  }
  return out;
}

namespace {

bool pair_condition(const Space& x, Variant variant, Subset c, int p) {
  const Topology& t = x.topology();
  const Preorder& o = x.order();
  if (uses_up(variant)) {
    if ((c & o.down(p)) == 0 || !bits::subset_of(c, t.closure(o.up(p)))) return false;
  }
  if (uses_down(variant)) {
    if ((c & o.up(p)) == 0 || !bits::subset_of(c, t.closure(o.down(p)))) return false;
  }
  return true;
}

int find_pair(const std::vector<IrreduciblePair>& pairs, Subset c, int rep) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].closed == c && pairs[i].rep == rep) return static_cast<int>(i);
  }
  return -1;
}

int class_rep(const Preorder& o, int p) { return bits::lowest(o.equivalence_class(p)); }

}  // namespace

std::vector<IrreduciblePair> irreducible_pairs(const Space& x, Variant variant) {
  const Partition part = equivalence_classes(x.order());
  std::vector<IrreduciblePair> out;
  for (Subset c : irreducible_closed_sets(x.topology())) {
    for (Subset cls : part.classes) {
      const int rep = bits::lowest(cls);
      const bool holds = pair_condition(x, variant, c, rep);
      const Subset others = cls & ~bits::single(rep);
      if (others != 0 && pair_condition(x, variant, c, bits::lowest(others)) != holds) {
        throw Error(ErrorKind::Internal, "pair condition depends on the class representative");
      }
      if (holds) out.push_back({c, rep});
    }
  }
  return out;
}

AdSobrification ads_space(const Space& x, Variant variant) {
  AdSobrification out;
  out.pairs = irreducible_pairs(x, variant);
  const int k = static_cast<int>(out.pairs.size());
  if (k > max_points()) throw Error(ErrorKind::TooLarge, "ad-sobrification exceeds the carrier cap");

  for (Subset u : x.topology().opens()) {
    Subset d = 0;
    for (int i = 0; i < k; ++i) {
      if ((out.pairs[i].closed & u) != 0) d |= bits::single(i);
    }
    out.diamond_map.push_back(d);
  }
  for (Subset a : upsets(x.order())) {
    Subset d = 0;
    for (int i = 0; i < k; ++i) {
      if (bits::has(a, out.pairs[i].rep)) d |= bits::single(i);
    }
    out.bracket_map.push_back(d);
  }
  std::vector<Subset> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (x.order().leq(out.pairs[i].rep, out.pairs[j].rep)) rows[i] |= bits::single(j);
    }
  }
  Topology top;
  try {
    top = Topology::make(k, out.diamond_map);
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("diamond opens: ") + e.what());
  }
  out.space = Space(std::move(top), Preorder::from_rows(std::move(rows)));

  for (int p = 0; p < x.size(); ++p) {
    const int idx = find_pair(out.pairs, x.topology().closure(bits::single(p)), class_rep(x.order(), p));
    if (idx < 0) throw Error(ErrorKind::Internal, "unit image of " + std::to_string(p) + " missing");
    out.unit.push_back(idx);
  }
  return out;
}

PointMap ads_hom(const PointMap& f, const AdSobrification& xs, const Space& y,
                 const AdSobrification& ys) {
  PointMap out;
  out.reserve(xs.pairs.size());
  for (const auto& pr : xs.pairs) {
    const Subset d = y.topology().closure(image(f, pr.closed));
    const int idx = find_pair(ys.pairs, d, class_rep(y.order(), f[pr.rep]));
    if (idx < 0) {
      throw Error(ErrorKind::Internal, "image of pair (" + bits::to_string(pr.closed) + ",[" +
                                           std::to_string(pr.rep) + "]) is not an irreducible pair");
    }
    out.push_back(idx);
  }
  return out;
}

IsoCheck ads_adpt_iso(const Space& x, Variant variant) {
  IsoCheck out;
  const AdSobrification xs = ads_space(x, variant);
  const AdFrame adox = build_adO(x, variant);
  const Spectrum spec = adpt_space(adox);
  auto fail = [&](std::string why) {
    out.ok = false;
    out.witness = std::move(why);
    return out;
  };

  for (const auto& pr : xs.pairs) {
    const int p = adox.omega.index_of(x.carrier() & ~pr.closed);
    const int b = adox.ell.index_of(x.order().up(pr.rep));
    const int idx = p < 0 || b < 0 ? -1 : spec.find(p, b);
    if (idx < 0) {
      return fail("pair (" + bits::to_string(pr.closed) + ",[" + std::to_string(pr.rep) +
                  "]) has no matching point");
    }
    out.map.push_back(idx);
  }
  if (!is_bijection(out.map, spec.space.size())) {
    return fail(std::to_string(xs.pairs.size()) + " pairs against " +
                std::to_string(spec.space.size()) + " points");
  }
  if (!is_pretop_isomorphism(out.map, xs.space, spec.space)) return fail("bijection is not an isomorphism");
  for (std::size_t u = 0; u < xs.diamond_map.size(); ++u) {
    if (image(out.map, xs.diamond_map[u]) != spec.open_map[u]) {
      return fail("diamond of open " + adox.omega.describe(static_cast<int>(u)) + " misses O_U");
    }
    if (preimage(xs.unit, xs.diamond_map[u]) != adox.omega.label(static_cast<int>(u))) {
      return fail("unit preimage of diamond " + adox.omega.describe(static_cast<int>(u)));
    }
  }
  for (std::size_t a = 0; a < xs.bracket_map.size(); ++a) {
    if (image(out.map, xs.bracket_map[a]) != spec.upset_map[a]) {
      return fail("bracket of up-set " + adox.ell.describe(static_cast<int>(a)) + " misses A_A");
    }
    if (preimage(xs.unit, xs.bracket_map[a]) != adox.ell.label(static_cast<int>(a))) {
      return fail("unit preimage of bracket " + adox.ell.describe(static_cast<int>(a)));
    }
  }
  if (compose(out.map, xs.unit) != eta_map(x, adox, spec)) return fail("units disagree");
  return out;
}

namespace {

// Injective, order-preserving and reflecting, and onto `targets`.
bool order_iso_onto(std::span<const Subset> source, const std::vector<Subset>& images,
                    std::vector<Subset> targets) {
  std::vector<Subset> sorted = images;
  std::sort(sorted.begin(), sorted.end(), bits::canonical_less);
  std::sort(targets.begin(), targets.end(), bits::canonical_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted != targets) return false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (bits::subset_of(source[i], source[j]) != bits::subset_of(images[i], images[j])) return false;
    }
  }
  return true;
}

}  // namespace

IsoCheck check_diamond_bracket(const Space& x, const AdSobrification& xs) {
  IsoCheck out;
  const auto opens = xs.space.topology().opens();
  if (!order_iso_onto(x.topology().opens(), xs.diamond_map, {opens.begin(), opens.end()})) {
    out.ok = false;
    out.witness = "diamond map is not an order-isomorphism onto the opens";
    return out;
  }
  const auto ups = upsets(x.order());
  if (!order_iso_onto(ups, xs.bracket_map, upsets(xs.space.order()))) {
    out.ok = false;
    out.witness = "bracket map is not an order-isomorphism onto the up-sets";
  }
  return out;
}

}  // namespace adlab
