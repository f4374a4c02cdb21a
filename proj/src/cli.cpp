#include "adlab/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "adlab/duality.hpp"
#include "adlab/error.hpp"
#include "adlab/io.hpp"
#include "adlab/sobrify.hpp"
#include "adlab/theorems.hpp"

namespace adlab {

namespace {

struct Command {
  std::string verb;
  std::string in;
  std::string out;
  std::optional<std::string> variant;
  std::string id;
  std::optional<std::string> sweep;
  std::optional<std::uint64_t> seed;
  std::optional<long> budget_ms;
  bool fail_fast = false;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_input(const std::string& in) {
  if (in.empty()) throw Usage("--in is required for this verb");
  std::string text;
  if (in == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (in.front() == '{') {
    text = in;
  } else {
    std::ifstream f(in);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot read " + in);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// Writes next to the destination and renames, so readers never see a
// partial file.
void emit(const Command& cmd, const std::string& text, std::ostream& out) {
  if (cmd.out.empty()) {
    out << text;
    return;
  }
  const std::string tmp = cmd.out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + cmd.out);
    f << text;
    if (!f.flush()) throw Error(ErrorKind::InvalidInput, "cannot write " + cmd.out);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, cmd.out, ec);
  if (ec) throw Error(ErrorKind::InvalidInput, "cannot write " + cmd.out + ": " + ec.message());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Variant variant_or_both(const Command& cmd) {
  return cmd.variant ? parse_variant(*cmd.variant) : Variant::Both;
}

int sweep_size(const Command& cmd) {
  static const std::regex pattern(R"(n=(\d+))");
  std::smatch m;
  if (!std::regex_match(*cmd.sweep, m, pattern)) throw Usage("--sweep expects n=K");
  const int n = std::stoi(m[1].str());
  if (n > 4) throw Usage("--sweep supports n <= 4");
  return n;
}

int cmd_validate(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Json j = read_input(cmd.in);
  if (j.contains("omega")) {
    const AdFrame f = adframe_from_json(j);
    const ValidationReport r = validate_adframe(f);
    emit(cmd, dump(validation_to_json(r)), out);
    if (const auto* c = r.first_failure()) {
      err << "fail: " << c->name << ": " << c->witness << "\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }
  if (j.contains("points")) {
    emit(cmd, dump(space_to_json(space_from_json(j))), out);
    return kExitOk;
  }
  const Lattice l = lattice_from_json(j);
  const LatticeAnalysis a = lattice_analyze(l);
  Json o = lattice_to_json(l);
  o["distributive"] = a.distributive;
  o["primes"] = a.primes;
  o["coprimes"] = a.coprimes;
  Json pf = Json::array();
  for (const auto& [q, b] : a.pitchfork) pf.push_back({q, b});
  o["pitchfork"] = std::move(pf);
  emit(cmd, dump(o), out);
  return kExitOk;
}

AdFrame checked_frame(const Json& j) {
  AdFrame f = adframe_from_json(j);
  const ValidationReport r = validate_adframe(f);
  if (const auto* c = r.first_failure()) {
    throw Error(ErrorKind::InvalidInput, "not an ad-frame: " + c->name + ": " + c->witness);
  }
  return f;
}

int cmd_adpt(const Command& cmd, std::ostream& out) {
  const AdFrame f = checked_frame(read_input(cmd.in));
  const Spectrum spec = adpt_space(f);
  Json o = space_to_json(spec.space);
  Json pts = Json::array();
  for (const auto& p : spec.points) {
    Json e;
    e["prime"] = p.prime;
    e["coprime"] = p.coprime;
    e["describe"] = describe_point(f, p);
    pts.push_back(std::move(e));
  }
  o["point_info"] = std::move(pts);
  emit(cmd, dump(o), out);
  return kExitOk;
}

int cmd_ads(const Command& cmd, std::ostream& out) {
  const Space x = space_from_json(read_input(cmd.in));
  const AdSobrification xs = ads_space(x, variant_or_both(cmd));
  Json o = space_to_json(xs.space);
  Json pairs = Json::array();
  for (const auto& pr : xs.pairs) {
    Json e;
    e["closed"] = subset_to_json(pr.closed);
    e["rep"] = pr.rep;
    pairs.push_back(std::move(e));
  }
  o["pairs"] = std::move(pairs);
  o["unit"] = xs.unit;
  emit(cmd, dump(o), out);
  return kExitOk;
}

int cmd_sobrify(const Command& cmd, std::ostream& out) {
  const Space x = space_from_json(read_input(cmd.in));
  const Sobrification s = standard_sobrification(x.topology());
  Json o = space_to_json(Space(s.space, Preorder::discrete(s.space.size())));
  Json closed = Json::array();
  for (Subset c : s.points) closed.push_back(subset_to_json(c));
  o["closed_sets"] = std::move(closed);
  o["unit"] = s.unit;
  emit(cmd, dump(o), out);
  return kExitOk;
}

void summarize(std::ostream& err, const std::string& id, const SweepSummary& s) {
  err << id << ": pass " << s.pass << ", fail " << s.fail << ", expected-fail " << s.expected_fail
      << ", skip " << s.skip << (s.budget_exceeded ? ", budget exceeded" : "")
      << (s.cancelled ? ", stopped at first failure" : "") << "\n";
}

int cmd_check(const Command& cmd, std::ostream& out, std::ostream& err, bool all_ids) {
  std::vector<std::string> ids;
  if (!cmd.id.empty()) {
    ids.push_back(find_theorem(cmd.id).id);
  } else if (all_ids) {
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
  } else {
    throw Usage("check needs --id");
  }

  std::string text;
  bool failed = false;
  auto add = [&](const CheckReport& r) {
    text += report_to_json(r).dump() + "\n";
    if (r.verdict == Verdict::Fail) {
      failed = true;
      err << "fail: " << r.id << " on " << r.instance << ": " << r.witness << "\n";
    }
  };

  if (all_ids && cmd.seed) throw Usage("sweep does not take --seed");
  if (!cmd.in.empty() || cmd.seed) {
    Instance inst;
    if (!cmd.in.empty()) {
      inst.space = space_from_json(read_input(cmd.in));
    } else {
      inst.space = random_space(cmd.sweep ? sweep_size(cmd) : 3, *cmd.seed);
    }
    inst.variant = variant_or_both(cmd);
    inst.description = describe_instance(inst.space, inst.variant);
    for (const auto& id : ids) add(run_check(id, inst));
    emit(cmd, text, out);
    return failed ? kExitCheckFailed : kExitOk;
  }

  if (!cmd.sweep) throw Usage(all_ids ? "sweep needs --sweep n=K" : "check needs --in, --seed or --sweep");
  SweepOptions opt;
  opt.n = sweep_size(cmd);
  if (cmd.variant) opt.variant = parse_variant(*cmd.variant);
  opt.fail_fast = cmd.fail_fast;
  const auto start = std::chrono::steady_clock::now();
  bool budget_exceeded = false;
  for (const auto& id : ids) {
    if (cmd.budget_ms) {
      const long spent = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - start)
                                               .count());
      if (spent >= *cmd.budget_ms) {
        budget_exceeded = true;
        break;
      }
      opt.budget_ms = *cmd.budget_ms - spent;
    }
    const SweepSummary s = sweep(id, opt);
    for (const auto& r : s.reports) add(r);
    summarize(err, id, s);
    budget_exceeded = budget_exceeded || s.budget_exceeded;
    if (budget_exceeded || (cmd.fail_fast && failed)) break;
  }
  emit(cmd, text, out);
  if (budget_exceeded) err << "budget of " << *cmd.budget_ms << " ms exceeded\n";
  return failed || budget_exceeded ? kExitCheckFailed : kExitOk;
}

int cmd_render(const Command& cmd, std::ostream& out) {
  const Json j = read_input(cmd.in);
  std::string text;
  if (j.contains("omega")) {
    text = render_adframe_dot(adframe_from_json(j));
  } else if (j.contains("points")) {
    text = render_space_dot(space_from_json(j));
  } else {
    text = render_lattice_dot(lattice_from_json(j));
  }
  emit(cmd, text, out);
  return kExitOk;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.variant) parse_variant(*cmd.variant);
  if (cmd.verb == "validate") return cmd_validate(cmd, out, err);
  if (cmd.verb == "ado") {
    const Space x = space_from_json(read_input(cmd.in));
    emit(cmd, dump(adframe_to_json(build_adO(x, variant_or_both(cmd)))), out);
    return kExitOk;
  }
  if (cmd.verb == "adpt") return cmd_adpt(cmd, out);
  if (cmd.verb == "ads") return cmd_ads(cmd, out);
  if (cmd.verb == "sobrify") return cmd_sobrify(cmd, out);
  if (cmd.verb == "check") return cmd_check(cmd, out, err, false);
  if (cmd.verb == "sweep") return cmd_check(cmd, out, err, true);
  return cmd_render(cmd, out);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model lab for preordered spaces and ad-frames", "adlab"};
  Command cmd;
  app.add_option("verb", cmd.verb, "validate | ado | adpt | ads | sobrify | check | sweep | render")
      ->required()
      ->check(CLI::IsMember({"validate", "ado", "adpt", "ads", "sobrify", "check", "sweep", "render"}));
  app.add_option("--in", cmd.in, "input file, '-' for stdin, or inline JSON");
  app.add_option("--out", cmd.out, "output file (written atomically)");
  app.add_option("--variant", cmd.variant, "up | down | both")
      ->check(CLI::IsMember({"up", "down", "both"}));
  app.add_option("--id", cmd.id, "theorem id");
  app.add_option("--sweep", cmd.sweep, "sweep every space on exactly K points: n=K");
  app.add_option("--seed", cmd.seed, "check one random space (size from --sweep, default 3)");
  app.add_option("--budget-ms", cmd.budget_ms, "wall-clock budget for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--fail-fast", cmd.fail_fast, "stop a sweep at the first failure");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    if (code == 0) return kExitOk;
    std::string msg = r.str();
    const auto nl = msg.find('\n');
    if (nl != std::string::npos) msg.resize(nl);
    err << "usage error: " << msg << "\n";
    return kExitUsage;
  }

  try {
    return run(cmd, out, err);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::Internal ? kExitCheckFailed
                                                                                     : kExitUsage;
  }
}

}  // namespace adlab
