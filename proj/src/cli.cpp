#include "skewrank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "skewrank/codefile.hpp"
#include "skewrank/errors.hpp"
#include "skewrank/homopoly.hpp"
#include "skewrank/krawtchouk.hpp"
#include "skewrank/macwilliams.hpp"
#include "skewrank/moments.hpp"
#include "skewrank/selftest.hpp"

namespace skewrank::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string format = "json";
  std::string code_path;
  long q = 0;
  int t = 0;
  int d = 0;
  std::string dist;
  std::string size;
  int phi = -1;
  std::uint64_t seed = 1;
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned threads = 0;
  std::string group;
  int random_codes = 20;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json big(const Integer& v) { return v.get_str(); }
json big(const Rational& v) { return v.get_str(); }

json big_list(const std::vector<Integer>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(big(v));
  return a;
}

json basis_json(const LinearCode& c) {
  json a = json::array();
  for (const auto& b : c.basis()) {
    json row = json::array();
    for (Elem e : b.upper) row.push_back(static_cast<int>(e));
    a.push_back(row);
  }
  return a;
}

EnumOptions enum_options(const Settings& s) { return {s.budget, s.threads}; }

SchemeParams scheme(const Settings& s) {
  if (s.q == 0 || s.t == 0) throw InputError("--q and --t are required");
  try {
    return SchemeParams::make(s.q, s.t);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

LinearCode load_code(const Settings& s, std::ostream& err) {
  ParsedCode pc = [&] {
    try {
      return read_code_file(s.code_path);
    } catch (const ParseError& e) {
      throw InputError(s.code_path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(s.code_path + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }();
  for (const auto& w : pc.warnings) err << "warning: " << s.code_path << ": " << w << "\n";
  return std::move(pc.code);
}

// Distribution from --dist, with --size defaulting to its sum.
std::pair<WeightDist, Integer> load_dist(const Settings& s) {
  const SchemeParams p = scheme(s);
  WeightDist w{p, {}};
  std::stringstream ss(s.dist);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Integer v;
    if (part.empty() || v.set_str(part, 10) != 0) throw InputError("--dist entry '" + part + "' is not an integer");
    if (v < 0) throw InputError("--dist entries must be nonnegative");
    w.counts.push_back(v);
  }
  if (w.counts.size() != static_cast<size_t>(p.n) + 1) {
    throw InputError("--dist needs n+1 = " + std::to_string(p.n + 1) + " entries for t=" + std::to_string(p.t));
  }
  Integer size = w.total();
  if (!s.size.empty() && size.set_str(s.size, 10) != 0) throw InputError("--size '" + s.size + "' is not an integer");
  return {w, size};
}

// Renders the top level of a result as aligned "key  value" lines.
void render_text(const json& j, std::ostream& out) {
  size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << std::left << std::setw(static_cast<int>(width)) << it.key() << "  ";
    if (v.is_array() && !v.empty() && v[0].is_array()) {
      size_t cell = 0;
      for (const auto& row : v)
        for (const auto& x : row) cell = std::max(cell, scalar(x).size());
      out << "\n";
      for (const auto& row : v) {
        out << "  ";
        for (const auto& x : row) out << " " << std::right << std::setw(static_cast<int>(cell)) << scalar(x);
        out << "\n";
      }
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << "\n";
      for (const auto& row : v) {
        out << "  ";
        bool first = true;
        for (auto f = row.begin(); f != row.end(); ++f) {
          out << (first ? "" : "  ") << f.key() << "=" << (f.value().is_object() ? f.value().dump() : scalar(f.value()));
          first = false;
        }
        out << "\n";
      }
    } else if (v.is_array()) {
      bool first = true;
      for (const auto& x : v) {
        out << (first ? "" : " ") << scalar(x);
        first = false;
      }
      out << "\n";
    } else {
      out << scalar(v) << "\n";
    }
  }
}

void emit(const Settings& s, const json& j, std::ostream& out) {
  if (s.format == "text") {
    render_text(j, out);
  } else {
    out << j.dump() << "\n";
  }
}

int cmd_wdist(const Settings& s, std::ostream& out, std::ostream& err) {
  const LinearCode c = load_code(s, err);
  const WeightDist w = weight_distribution(c, enum_options(s));
  emit(s, {{"q", c.params().q}, {"t", c.params().t}, {"k", c.dimension()}, {"dist", big_list(w.counts)}}, out);
  return kOk;
}

int cmd_dual(const Settings& s, std::ostream& out, std::ostream& err) {
  const LinearCode d = dual(load_code(s, err));
  if (s.format == "text") {
    out << serialize_code(d);
  } else {
    emit(s, {{"q", d.params().q}, {"t", d.params().t}, {"k", d.dimension()}, {"basis", basis_json(d)}}, out);
  }
  return kOk;
}

int cmd_macwilliams(const Settings& s, std::ostream& out, std::ostream& err) {
  WeightDist w;
  Integer size;
  if (!s.code_path.empty()) {
    const LinearCode c = load_code(s, err);
    w = weight_distribution(c, enum_options(s));
    size = c.size();
  } else {
    if (s.dist.empty()) throw InputError("give either --code or --q, --t and --dist");
    std::tie(w, size) = load_dist(s);
  }
  const auto& p = w.params;
  json j = {{"q", p.q}, {"t", p.t}, {"size", big(size)}, {"dist", big_list(w.counts)}};
  try {
    const WeightDist viaP = transform_matrix(w, size);
    const WeightDist viaF = transform_functional(w, size);
    j["dual_size"] = big(Integer(p.space_size() / size));
    j["dual_dist"] = big_list(viaP.counts);
    j["routes_agree"] = viaP == viaF;
    emit(s, j, out);
    return viaP == viaF ? kOk : kVerdictFalse;
  } catch (const InconsistentDistribution& e) {
    err << "error: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int cmd_krawtchouk(const Settings& s, std::ostream& out) {
  const SchemeParams p = scheme(s);
  const auto P = p_matrix(p);
  json rows = json::array();
  for (const auto& r : P.entries) rows.push_back(big_list(r));
  emit(s, {{"q", p.q}, {"t", p.t}, {"n", p.n}, {"m", p.m}, {"P", rows}}, out);
  return kOk;
}

int cmd_omega(const Settings& s, std::ostream& out) {
  const SchemeParams p = scheme(s);
  std::vector<Integer> cs;
  for (const auto& c : coefficients_at(omega(p), p.m)) cs.push_back(c.get_num());
  emit(s, {{"q", p.q}, {"t", p.t}, {"omega", big_list(cs)}}, out);
  return kOk;
}

int cmd_moments(const Settings& s, std::ostream& out, std::ostream& err) {
  WeightDist w, wd;
  std::optional<int> k;
  if (!s.code_path.empty()) {
    const LinearCode c = load_code(s, err);
    w = weight_distribution(c, enum_options(s));
    wd = weight_distribution(dual(c), enum_options(s));
    k = c.dimension();
  } else {
    if (s.dist.empty()) throw InputError("give either --code or --q, --t and --dist");
    Integer size;
    std::tie(w, size) = load_dist(s);
    if (size != w.total()) throw InputError("--size must equal the sum of --dist for moments");
    try {
      wd = transform_matrix(w, size);
      k = static_cast<int>(exact_log(size, w.params.q));
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << "\n";
      return kVerdictFalse;
    }
  }
  const auto& p = w.params;
  if (s.phi > p.n) throw InputError("--phi must lie in 0..n = " + std::to_string(p.n));
  const int lo = s.phi >= 0 ? s.phi : 0;
  const int hi = s.phi >= 0 ? s.phi : p.n;
  bool all = true;
  json checks = json::array();
  for (int phi = lo; phi <= hi; ++phi) {
    const auto m1 = check_first_moment(w, wd, phi);
    const auto m2 = check_second_moment(w, wd, phi, k);
    all = all && m1.first == m1.second && m2.first == m2.second;
    checks.push_back({{"phi", phi},
                      {"first", {{"lhs", big(m1.first)}, {"rhs", big(m1.second)}, {"holds", m1.first == m1.second}}},
                      {"second", {{"lhs", big(m2.first)}, {"rhs", big(m2.second)}, {"holds", m2.first == m2.second}}}});
  }
  emit(s,
       {{"q", p.q}, {"t", p.t}, {"k", *k}, {"dist", big_list(w.counts)}, {"dual_dist", big_list(wd.counts)},
        {"checks", checks}, {"verdict", all}},
       out);
  return all ? kOk : kVerdictFalse;
}

int cmd_msrd_dist(const Settings& s, std::ostream& out) {
  const SchemeParams p = scheme(s);
  if (s.d < 1 || s.d > p.n + 1) throw InputError("--d must lie in 1..n+1 = " + std::to_string(p.n + 1));
  const WeightDist w = msrd_distribution(p, s.d);
  emit(s, {{"q", p.q}, {"t", p.t}, {"d", s.d}, {"dist", big_list(w.counts)}}, out);
  return kOk;
}

int cmd_msrd_find(const Settings& s, std::ostream& out) {
  const SchemeParams p = scheme(s);
  if (s.d < 1 || s.d > p.n) throw InputError("--d must lie in 1..n = " + std::to_string(p.n));
  MsrdSearchOptions so;
  so.seed = s.seed;
  so.enumeration = enum_options(s);
  const auto code = find_msrd(make_field(p.q), p, s.d, so);
  json j = {{"q", p.q}, {"t", p.t}, {"d", s.d}, {"found", code.has_value()}};
  if (!code) {
    j["trials"] = so.max_trials;
    emit(s, j, out);
    return kBudget;
  }
  const WeightDist w = weight_distribution(*code, so.enumeration);
  const WeightDist wd = weight_distribution(dual(*code), so.enumeration);
  const auto dd = min_distance(wd);
  j["k"] = code->dimension();
  j["basis"] = basis_json(*code);
  j["dist"] = big_list(w.counts);
  j["dual_dist"] = big_list(wd.counts);
  j["dual_d"] = dd ? json(*dd) : json(nullptr);
  j["dual_is_msrd"] = wd == msrd_distribution(p, p.n - s.d + 2);
  emit(s, j, out);
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const LinearCode c = load_code(s, err);
  const VerifyReport r = verify_code(c, enum_options(s));
  json mismatches = json::array();
  for (const auto& m : r.mismatches) mismatches.push_back(m);
  emit(s,
       {{"q", c.params().q},
        {"t", c.params().t},
        {"k", c.dimension()},
        {"dist", big_list(r.w.counts)},
        {"dual_k", static_cast<int>(exact_log(r.dual_size, c.params().q))},
        {"dual_enumerated", big_list(r.dual_enumerated.counts)},
        {"dual_matrix", big_list(r.dual_matrix.counts)},
        {"dual_functional", big_list(r.dual_functional.counts)},
        {"size_product_ok", r.size_product_ok},
        {"mismatches", mismatches},
        {"verdict", r.verdict()}},
       out);
  return r.verdict() ? kOk : kVerdictFalse;
}

int cmd_selftest(const Settings& s, std::ostream& out) {
  SelftestOptions o;
  o.seed = s.seed;
  o.random_codes = s.random_codes;
  o.enumeration = enum_options(s);
  std::vector<CheckResult> results;
  if (s.group.empty()) {
    results = run_selftest(o);
  } else {
    try {
      results = run_selftest_group(s.group, o);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  json checks = json::array();
  int failed = 0;
  for (const auto& r : results) {
    json c = {{"group", r.group}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
    if (!r.passed) {
      c["detail"] = r.detail;
      ++failed;
    }
    checks.push_back(c);
  }
  emit(s, {{"checks", checks}, {"failed", failed}, {"verdict", failed == 0}}, out);
  return failed ? kVerdictFalse : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact MacWilliams identities for skew rank metric codes", "skewrank"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", s.seed, "Seed for randomized searches and suites");
  app.add_option("--budget", s.budget, "Largest number of codewords to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--threads", s.threads, "Worker threads (0: all cores)");

  auto code_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--code", s.code_path, "Code file");
    if (required) o->required();
  };
  auto params_opt = [&](CLI::App* sub, bool required) {
    auto* q = sub->add_option("--q", s.q, "Field size");
    auto* t = sub->add_option("--t", s.t, "Matrix order");
    if (required) {
      q->required();
      t->required();
    }
  };

  auto* wdist = app.add_subcommand("wdist", "Weight distribution of a code");
  code_opt(wdist, true);
  auto* dualc = app.add_subcommand("dual", "Dual code");
  code_opt(dualc, true);
  auto* mw = app.add_subcommand("macwilliams", "Dual distribution by the MacWilliams identity");
  code_opt(mw, false);
  params_opt(mw, false);
  mw->add_option("--dist", s.dist, "Distribution c0,c1,...,cn");
  mw->add_option("--size", s.size, "Code size (default: sum of --dist)");
  auto* kr = app.add_subcommand("krawtchouk", "Eigenmatrix P of the scheme");
  params_opt(kr, true);
  auto* om = app.add_subcommand("omega", "Weight enumerator of the whole space");
  params_opt(om, true);
  auto* mo = app.add_subcommand("moments", "Moment identities of a code and its dual");
  code_opt(mo, false);
  params_opt(mo, false);
  mo->add_option("--dist", s.dist, "Distribution c0,c1,...,cn");
  mo->add_option("--size", s.size, "Code size (default: sum of --dist)");
  mo->add_option("--phi", s.phi, "Single moment order (default: all)")->check(CLI::NonNegativeNumber);
  auto* md = app.add_subcommand("msrd-dist", "Weight distribution of an MSRD code");
  params_opt(md, true);
  md->add_option("--d", s.d, "Minimum distance")->required();
  auto* mf = app.add_subcommand("msrd-find", "Search for a linear MSRD code");
  params_opt(mf, true);
  mf->add_option("--d", s.d, "Minimum distance")->required();
  auto* ve = app.add_subcommand("verify", "Check the identity against the enumerated dual");
  code_opt(ve, true);
  auto* st = app.add_subcommand("selftest", "Run the identity suite");
  st->add_option("--group", s.group, "Only this group");
  st->add_option("--codes", s.random_codes, "Random codes per parameter pair")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (wdist->parsed()) return cmd_wdist(s, out, err);
    if (dualc->parsed()) return cmd_dual(s, out, err);
    if (mw->parsed()) return cmd_macwilliams(s, out, err);
    if (kr->parsed()) return cmd_krawtchouk(s, out);
    if (om->parsed()) return cmd_omega(s, out);
    if (mo->parsed()) return cmd_moments(s, out, err);
    if (md->parsed()) return cmd_msrd_dist(s, out);
    if (mf->parsed()) return cmd_msrd_find(s, out);
    if (ve->parsed()) return cmd_verify(s, out, err);
    if (st->parsed()) return cmd_selftest(s, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace skewrank::cli
