#include "adlab/io.hpp"

#include <sstream>

#include "adlab/error.hpp"

namespace adlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<OrderPair> pairs_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of pairs");
  std::vector<OrderPair> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) bad(std::string(what) + " entries must be [i, j]");
    out.emplace_back(as_int(p[0], what), as_int(p[1], what));
  }
  return out;
}

Json pairs_to_json(const std::vector<OrderPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

Relation relation_from_json(const Json& j, const char* what, int rows, int cols) {
  Relation r(rows, cols);
  for (const auto& [u, a] : pairs_from_json(j, what)) {
    if (u < 0 || u >= rows || a < 0 || a >= cols) {
      throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " pair (" + std::to_string(u) + "," +
                                                  std::to_string(a) + ")");
    }
    r.insert(u, a);
  }
  return r;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

void check_nodes(int nodes) {
  if (nodes > kDotNodeCap) {
    throw Error(ErrorKind::TooLarge, std::to_string(nodes) + " nodes exceed the rendering cap of " +
                                         std::to_string(kDotNodeCap));
  }
}

void lattice_body(std::ostringstream& os, const Lattice& l, const std::string& prefix,
                  const std::string& indent) {
  for (int a = 0; a < l.size(); ++a) {
    os << indent << prefix << a << " [label=\"" << l.describe(a) << "\"];\n";
  }
  for (const auto& [a, b] : l.covers()) os << indent << prefix << a << " -> " << prefix << b << ";\n";
}

}  // namespace

Json subset_to_json(Subset s) {
  Json out = Json::array();
  for (int i : bits::elements(s)) out.push_back(i);
  return out;
}

Subset subset_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("a subset must be an array of point indices");
  Subset s = 0;
  for (const Json& e : j) {
    const int i = as_int(e, "subset element");
    if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(i));
    s |= bits::single(i);
  }
  return s;
}

Json space_to_json(const Space& x) {
  Json out;
  out["points"] = x.size();
  Json opens = Json::array();
  for (Subset u : x.topology().opens()) opens.push_back(subset_to_json(u));
  out["opens"] = std::move(opens);
  out["leq"] = pairs_to_json(x.order().strict_pairs());
  out["complete"] = false;
  return out;
}

Space space_from_json(const Json& j) {
  return guarded([&] {
    SpaceInput in;
    in.points = as_int(field(j, "points"), "points");
    if (in.points < 0 || in.points > kCarrierLimit) {
      throw Error(ErrorKind::TooLarge, std::to_string(in.points) + " points");
    }
    const Json& opens = field(j, "opens");
    if (!opens.is_array()) bad("opens must be an array of subsets");
    for (const Json& u : opens) in.opens.push_back(subset_from_json(u, in.points));
    if (j.contains("leq")) in.leq = pairs_from_json(j["leq"], "leq");
    for (const auto& [a, b] : in.leq) {
      if (a < 0 || a >= in.points || b < 0 || b >= in.points) {
        throw Error(ErrorKind::IndexOutOfRange, "order pair (" + std::to_string(a) + "," +
                                                    std::to_string(b) + ")");
      }
    }
    in.complete = j.value("complete", false);
    in.strict = j.value("strict", false);
    return validate_space(in);
  });
}

Json lattice_to_json(const Lattice& l) {
  Json out;
  out["size"] = l.size();
  out["leq"] = pairs_to_json(l.covers());
  if (l.has_labels()) {
    Json labels = Json::array();
    for (Subset s : l.labels()) labels.push_back(subset_to_json(s));
    out["labels"] = std::move(labels);
  }
  return out;
}

Lattice lattice_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) bad("a lattice must be a JSON object");
    const auto leq = j.contains("leq") ? pairs_from_json(j["leq"], "leq") : std::vector<OrderPair>{};
    int size = 0;
    if (j.contains("size")) {
      size = as_int(j["size"], "size");
    } else if (j.contains("labels") && j["labels"].is_array()) {
      size = static_cast<int>(j["labels"].size());
    } else {
      for (const auto& [a, b] : leq) size = std::max({size, a + 1, b + 1});
      size = std::max(size, 1);
    }
    Lattice order = Lattice::from_order(size, leq);
    if (!j.contains("labels")) return order;
    const Json& lj = j["labels"];
    if (!lj.is_array() || static_cast<int>(lj.size()) != size) bad("labels must list one subset per element");
    std::vector<Subset> labels;
    for (const Json& s : lj) labels.push_back(subset_from_json(s, kCarrierLimit));
    Lattice labeled = Lattice::from_labels_in_order(std::move(labels));
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) {
        if (order.leq(a, b) != labeled.leq(a, b)) {
          bad("labels disagree with leq at elements " + std::to_string(a) + " and " + std::to_string(b));
        }
      }
    }
    return labeled;
  });
}

Json adframe_to_json(const AdFrame& f) {
  Json out;
  out["omega"] = lattice_to_json(f.omega);
  out["ell"] = lattice_to_json(f.ell);
  out["tot"] = pairs_to_json(f.tot.pairs());
  out["con"] = pairs_to_json(f.con.pairs());
  out["fof"] = pairs_to_json(f.fof.pairs());
  out["cou"] = pairs_to_json(f.cou.pairs());
  out["variant"] = std::string(to_string(f.variant));
  return out;
}

AdFrame adframe_from_json(const Json& j) {
  return guarded([&] {
    AdFrame f;
    f.omega = lattice_from_json(field(j, "omega"));
    f.ell = lattice_from_json(field(j, "ell"));
    const int m = f.omega.size();
    const int k = f.ell.size();
    f.tot = relation_from_json(field(j, "tot"), "tot", m, k);
    f.con = relation_from_json(field(j, "con"), "con", m, k);
    f.fof = relation_from_json(field(j, "fof"), "fof", m, k);
    f.cou = relation_from_json(field(j, "cou"), "cou", m, k);
    if (j.contains("variant")) {
      if (!j["variant"].is_string()) bad("variant must be a string");
      f.variant = parse_variant(j["variant"].get<std::string>());
    }
    return f;
  });
}

Json validation_to_json(const ValidationReport& r) {
  Json out;
  out["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json report_to_json(const CheckReport& r, bool with_ms) {
  Json out;
  out["id"] = r.id;
  out["instance"] = r.instance;
  out["verdict"] = std::string(to_string(r.verdict));
  out["witness"] = r.witness;
  if (with_ms) out["ms"] = r.ms;
  return out;
}

std::string render_lattice_dot(const Lattice& l, const std::string& name) {
  check_nodes(l.size());
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  lattice_body(os, l, "n", "  ");
  os << "}\n";
  return os.str();
}

std::string render_space_dot(const Space& x) {
  check_nodes(x.size());
  const Preorder& o = x.order();
  const Partition part = equivalence_classes(o);
  std::ostringstream os;
  os << "digraph space {\n  rankdir=BT;\n  label=\"opens:";
  for (Subset u : x.topology().opens()) os << ' ' << bits::to_string(u);
  os << "\";\n";
  for (int p = 0; p < x.size(); ++p) os << "  p" << p << " [label=\"" << p << "\"];\n";
  for (Subset cls : part.classes) {
    const auto members = bits::elements(cls);
    for (std::size_t i = 1; i < members.size(); ++i) {
      os << "  p" << members[i - 1] << " -> p" << members[i] << " [dir=none, style=dashed];\n";
    }
  }
  // Covers between classes, drawn between their smallest members.
  for (Subset a : part.classes) {
    const int ra = bits::lowest(a);
    for (Subset b : part.classes) {
      const int rb = bits::lowest(b);
      if (a == b || !o.leq(ra, rb)) continue;
      bool cover = true;
      for (Subset c : part.classes) {
        const int rc = bits::lowest(c);
        if (c != a && c != b && o.leq(ra, rc) && o.leq(rc, rb)) {
          cover = false;
          break;
        }
      }
      if (cover) os << "  p" << ra << " -> p" << rb << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_adframe_dot(const AdFrame& f) {
  check_nodes(f.omega.size() + f.ell.size());
  struct Style {
    const char* name;
    const Relation* rel;
    bool up;
    const char* attrs;
  };
  const Style styles[] = {
      {"tot", &f.tot, true, "color=red"},
      {"con", &f.con, true, "color=blue, style=dashed"},
      {"fof", &f.fof, false, "color=darkgreen, style=dotted"},
      {"cou", &f.cou, false, "color=orange, style=bold"},
  };
  std::ostringstream os;
  os << "digraph adframe {\n  rankdir=BT;\n  node [shape=box];\n";
  os << "  subgraph cluster_omega {\n    label=\"omega\";\n";
  lattice_body(os, f.omega, "o", "    ");
  os << "  }\n  subgraph cluster_ell {\n    label=\"L\";\n";
  lattice_body(os, f.ell, "l", "    ");
  os << "  }\n";
  for (const Style& s : styles) {
    if (s.up ? !uses_up(f.variant) : !uses_down(f.variant)) continue;
    for (const auto& [u, a] : s.rel->pairs()) {
      os << "  o" << u << " -> l" << a << " [" << s.attrs << ", constraint=false, label=\"" << s.name
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace adlab
