#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwahori/bernstein.hpp"
#include "iwahori/characters.hpp"
#include "iwahori/errors.hpp"
#include "iwahori/lattice_models.hpp"
#include "iwahori/serialize.hpp"
#include "iwahori/spherical.hpp"

namespace {

using nlohmann::json;
using namespace iwahori;

enum Exit { kOk = 0, kVerification = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  std::string group = "GL";
  int d = 0;
  std::string coweight;
  std::optional<int> similitude;
  int n_minus = 0;
  int n_plus = 1;
  int q = 2;
  std::optional<int> r;
  std::string model = "M";
  std::string out;
  std::optional<double> budget;
  std::string cache;
  std::string format = "json";
  bool timing = false;
};

// Result of a command: the JSON document, a text rendering, and the exit code.
struct Outcome {
  json doc;
  std::string text;
  int code = kOk;
};

RootDatum make_datum(const Options& o) {
  if (o.d < 1) throw InvalidInput("--d must be a positive integer");
  return RootDatum::build(parse_group_kind(o.group), o.d);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: '" + s + "'");
    }
    if (used != item.size()) throw InvalidInput("not an integer list: '" + s + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput("empty coweight");
  return out;
}

// GL: d entries. GSp: either the d first-half entries (completed with the
// similitude) or all 2d entries.
Coweight parse_coweight(const Options& o, const RootDatum& rd) {
  if (o.coweight.empty()) throw InvalidInput("a coweight (--mu or --lambda) is required");
  const std::vector<int> values = parse_ints(o.coweight);
  Coweight lambda;
  if (rd.kind() == GroupKind::GSp && static_cast<int>(values.size()) == rd.rank()) {
    lambda = rd.complete(values, o.similitude.value_or(o.n_plus + o.n_minus));
  } else {
    if (static_cast<int>(values.size()) != rd.ambient()) {
      throw InvalidInput("coweight must have " + std::to_string(rd.ambient()) + " entries" +
                         (rd.kind() == GroupKind::GSp ? " (or " + std::to_string(rd.rank()) + " with --similitude)" : ""));
    }
    lambda = Coweight(values);
  }
  rd.validate(lambda);
  return lambda;
}

Coweight parse_dominant(const Options& o, const RootDatum& rd) {
  Coweight lambda = parse_coweight(o, rd);
  if (!is_dominant(lambda, rd)) throw InvalidInput("coweight " + lambda.str() + " is not dominant");
  return lambda;
}

json base_doc(const std::string& command, const RootDatum& rd) {
  return {{"schema", kSchema}, {"command", command}, {"group", to_string(rd.kind())}, {"d", rd.rank()}};
}

long double budget_of(const Options& o) {
  if (o.budget) {
    if (!(*o.budget > 0)) throw InvalidInput("--budget must be positive");
    return static_cast<long double>(*o.budget);
  }
  return default_budget();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string word_text(const json& element) {
  std::string s = "[" + join(element.at("word").get<std::vector<int>>()) + "]";
  const int omega = element.at("omega").get<int>();
  if (omega != 0) s += " w^" + std::to_string(omega);
  return s;
}

std::string hecke_text(const AffineWeylGroup& g, const HeckeElement& h) {
  std::string s;
  for (const auto& row : hecke_json(g, h)) {
    const Laurent c = laurent_from_json(row.at("coeffs"));
    s += "  " + word_text(row) + "  " + c.str() + "\n";
  }
  return s.empty() ? "  0\n" : s;
}

// Owns the algebra stack for one job. With --cache the reduced-word memo is
// read before the job and written back after it.
struct Context {
  RootDatum rd;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> algebra;
  std::shared_ptr<const Bernstein> bernstein;
  std::shared_ptr<const Spherical> spherical;
  std::string cache;

  Context(const RootDatum& datum, const Options& o)
      : rd(datum),
        group(std::make_shared<const AffineWeylGroup>(datum)),
        algebra(std::make_shared<const HeckeAlgebra>(group)),
        bernstein(std::make_shared<const Bernstein>(algebra)),
        spherical(std::make_shared<const Spherical>(bernstein)),
        cache(o.cache) {
    if (!cache.empty()) load_memo(cache, *group);
  }

  void save() const {
    if (!cache.empty()) save_memo(cache, *group);
  }
};

// ------------------------------------------------------------------ commands

Outcome cmd_roots(const Options& o) {
  const RootDatum rd = make_datum(o);
  Context ctx(rd, o);
  const AffineWeylGroup& g = *ctx.group;
  json doc = base_doc("roots", rd);
  auto pairs = [](const std::vector<RootPair>& roots) {
    json a = json::array();
    for (const RootPair& r : roots) a.push_back({r.i, r.j});
    return a;
  };
  json coroots = json::array();
  for (const Coweight& c : rd.positive_coroots()) coroots.push_back(to_json(c));
  json simple = json::array();
  for (const AffineWeylElement& s : g.simple_reflections()) simple.push_back(element_json(g, s));
  doc["ambient"] = rd.ambient();
  doc["positive_roots"] = pairs(rd.positive_roots());
  doc["simple_roots"] = pairs(rd.simple_roots());
  doc["positive_coroots"] = coroots;
  doc["two_rho_vee"] = to_json(rd.two_rho_vee());
  doc["highest_root"] = {rd.highest_root().i, rd.highest_root().j};
  doc["weyl_group_order"] = rd.weyl_group().size();
  doc["simple_reflections"] = simple;
  doc["omega"] = element_json(g, g.omega());

  std::ostringstream t;
  t << to_string(rd.kind()) << "(" << (rd.kind() == GroupKind::GL ? rd.rank() : 2 * rd.rank()) << "), ambient "
    << rd.ambient() << "\n";
  t << "positive roots (" << rd.positive_roots().size() << "):";
  for (const RootPair& r : rd.positive_roots()) t << " e" << r.i << "-e" << r.j;
  t << "\nsimple roots:";
  for (const RootPair& r : rd.simple_roots()) t << " e" << r.i << "-e" << r.j;
  t << "\n2rho^vee: " << rd.two_rho_vee().str() << "\n|W_0| = " << rd.weyl_group().size() << "\n";
  ctx.save();
  return {doc, t.str(), kOk};
}

Outcome cmd_lambda_set(const Options& o) {
  const RootDatum rd = make_datum(o);
  if (o.n_minus > o.n_plus) throw InvalidInput("need n_minus <= n_plus");
  std::vector<Coweight> set = o.r ? lambda_set_fixed(o.n_minus, o.n_plus, *o.r, rd) : lambda_set(o.n_minus, o.n_plus, rd);
  json doc = base_doc("lambda-set", rd);
  doc["n_minus"] = o.n_minus;
  doc["n_plus"] = o.n_plus;
  if (o.r) doc["r"] = *o.r;
  json items = json::array();
  std::ostringstream t;
  for (const Coweight& lambda : set) {
    items.push_back({{"coweight", to_json(lambda)}, {"two_rho_pairing", rho_pairing_twice(lambda, rd)},
                     {"central", rd.central_coordinate(lambda)}});
    t << lambda.str() << "  2<rho,lambda>=" << rho_pairing_twice(lambda, rd) << "\n";
  }
  doc["count"] = set.size();
  doc["coweights"] = items;
  t << set.size() << " coweights\n";
  return {doc, t.str(), kOk};
}

Outcome cmd_admissible(const Options& o) {
  const RootDatum rd = make_datum(o);
  const Coweight mu = parse_dominant(o, rd);
  Context ctx(rd, o);
  const auto adm = ctx.group->admissible_set(mu);
  json doc = base_doc("admissible", rd);
  doc["mu"] = to_json(mu);
  json items = json::array();
  std::map<int, int> histogram;
  std::ostringstream t;
  for (const AffineWeylElement& x : adm) {
    json e = element_json(*ctx.group, x);
    ++histogram[e.at("length").get<int>()];
    t << "  l=" << e.at("length").get<int>() << "  t^" << ctx.group->translation_part(x).str() << "  " << word_text(e) << "\n";
    items.push_back(std::move(e));
  }
  json hist = json::object();
  for (const auto& [len, count] : histogram) hist[std::to_string(len)] = count;
  doc["count"] = adm.size();
  doc["length_histogram"] = hist;
  doc["elements"] = items;
  ctx.save();
  return {doc, "Adm(" + mu.str() + "): " + std::to_string(adm.size()) + " elements\n" + t.str(), kOk};
}

Outcome cmd_z(const Options& o) {
  const RootDatum rd = make_datum(o);
  const Coweight lambda = parse_dominant(o, rd);
  Context ctx(rd, o);
  const HeckeElement z = ctx.bernstein->z(lambda);
  const bool central = ctx.algebra->is_central(z);
  json doc = base_doc("z", rd);
  doc["lambda"] = to_json(lambda);
  doc["orbit"] = json::array();
  for (const Coweight& nu : weyl_orbit(lambda, rd)) doc["orbit"].push_back(to_json(nu));
  doc["central"] = central;
  doc["terms"] = z.size();
  doc["z"] = hecke_json(*ctx.group, z);
  ctx.save();
  return {doc,
          "z_" + lambda.str() + " (" + std::to_string(z.size()) + " terms, central: " + (central ? "yes" : "no") + ")\n" +
              hecke_text(*ctx.group, z),
          central ? kOk : kVerification};
}

Outcome cmd_theorem11(const Options& o) {
  const RootDatum rd = make_datum(o);
  const Coweight lambda = parse_dominant(o, rd);
  Context ctx(rd, o);
  const HeckeElement rhs = ctx.bernstein->theorem11_rhs(lambda);
  const int pairing = rho_pairing_twice(lambda, rd);
  json doc = base_doc("theorem11", rd);
  doc["lambda"] = to_json(lambda);
  doc["two_rho_pairing"] = pairing;
  doc["sign"] = pairing % 2 == 0 ? 1 : -1;
  json mult = json::array();
  for (const auto& [mu, m] : dominant_multiplicities(lambda, rd)) mult.push_back({{"weight", to_json(mu)}, {"mult", m}});
  doc["dominant_multiplicities"] = mult;
  doc["rhs"] = hecke_json(*ctx.group, rhs);
  std::ostringstream t;
  t << "sign (-1)^" << pairing << " = " << (pairing % 2 == 0 ? "+1" : "-1") << "\n";
  for (const auto& [mu, m] : dominant_multiplicities(lambda, rd)) t << "  m(" << mu.str() << ") = " << m << "\n";
  t << "rhs:\n" << hecke_text(*ctx.group, rhs);
  ctx.save();
  return {doc, t.str(), kOk};
}

Outcome cmd_triangle(const Options& o) {
  const RootDatum rd = make_datum(o);
  const Coweight top = parse_dominant(o, rd);
  Context ctx(rd, o);
  const TriangleMatrix m = ctx.spherical->triangle_matrix(top);
  json doc = base_doc("triangle", rd);
  doc["lambda_max"] = to_json(top);
  doc["index"] = json::array();
  for (const Coweight& mu : m.index) doc["index"].push_back(to_json(mu));
  json rows = json::array();
  std::ostringstream t;
  for (const TriangleRow& row : m.rows) {
    json entries = json::array();
    t << row.mu.str() << ":";
    for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it) {
      entries.push_back({{"nu", to_json(it->first)}, {"coeffs", to_json(it->second)}});
      t << "  [" << it->first.str() << "] " << it->second.str();
    }
    t << (row.residual_zero && row.triangular && row.diagonal_ok ? "" : "  FAILED") << "\n";
    rows.push_back({{"mu", to_json(row.mu)},
                    {"entries", entries},
                    {"residual_zero", row.residual_zero},
                    {"triangular", row.triangular},
                    {"diagonal_ok", row.diagonal_ok}});
  }
  json report = json::array();
  for (const QAnalogComparison& c : ctx.spherical->q_analog_report(m)) {
    report.push_back({{"lambda", to_json(c.lambda)},
                      {"mu", to_json(c.mu)},
                      {"entry", to_json(c.entry)},
                      {"q_analog_prediction", to_json(c.q_analog_prediction)},
                      {"equal", c.equal}});
  }
  doc["rows"] = rows;
  doc["q_analog_comparison"] = report;
  doc["all_ok"] = m.all_ok();
  ctx.save();
  return {doc, t.str(), m.all_ok() ? kOk : kVerification};
}

Outcome cmd_verify_minuscule(const Options& o) {
  const RootDatum rd = make_datum(o);
  const Coweight mu = parse_dominant(o, rd);
  Context ctx(rd, o);
  const MinusculeCheck check = ctx.spherical->verify_minuscule_identity(mu);
  json doc = base_doc("verify-minuscule", rd);
  doc["mu"] = to_json(mu);
  doc["length"] = check.length;
  doc["z"] = hecke_json(*ctx.group, ctx.bernstein->z(mu));
  doc["e_K"] = hecke_json(*ctx.group, ctx.spherical->e_K());
  doc["lhs"] = hecke_json(*ctx.group, check.lhs);
  doc["rhs"] = hecke_json(*ctx.group, check.rhs);
  doc["holds"] = check.holds;
  doc["report"] = check.holds ? "identity holds" : "identity fails";
  std::ostringstream t;
  t << "v^" << check.length << " z_" << mu.str() << " e_K = 1_{K mu K}: "
    << (check.holds ? "identity holds" : "identity fails") << " (" << check.rhs.size() << " terms)\n";
  ctx.save();
  return {doc, t.str(), check.holds ? kOk : kVerification};
}

LatticeModelParams lattice_params(const Options& o) {
  LatticeModelParams p;
  p.kind = parse_group_kind(o.group);
  p.d = o.d;
  p.r = o.r;
  p.n_minus = o.n_minus;
  p.n_plus = o.n_plus;
  p.q = o.q;
  p.model = parse_model_kind(o.model);
  p.validate();
  return p;
}

json params_json(const LatticeModelParams& p) {
  json j = {{"group", to_string(p.kind)}, {"d", p.d},  {"n_minus", p.n_minus},
            {"n_plus", p.n_plus},         {"q", p.q},  {"model", to_string(p.model)}};
  if (p.r) j["r"] = *p.r;
  return j;
}

Outcome lattice_command(const Options& o, const std::string& name) {
  const LatticeModelParams p = lattice_params(o);
  const RootDatum rd = RootDatum::build(p.kind, p.d);
  Context ctx(rd, o);
  const AffineWeylGroup& g = *ctx.group;
  const LatticeModel model(p);
  const long double budget = budget_of(o);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<LatticeChain> points = model.enumerate_points(budget);
  const auto orbits = model.stratify(points);
  const StrataReport report = p.model == ModelKind::Grass
                                  ? match_grass_strata(orbits, p, g)
                                  : match_strata(orbits, candidate_set(p, g), g, p.q);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json doc = base_doc(name, rd);
  doc["parameters"] = params_json(p);
  doc["estimate"] = static_cast<double>(model.estimate());
  doc["total_points"] = points.size();
  doc["orbit_count"] = orbits.size();
  doc["orbit_sizes"] = report.orbit_sizes;
  doc["predicted_sizes"] = report.predicted_sizes;
  doc["predicted_count"] = report.predicted_total;
  doc["verdict"] = report.verdict();
  if (p.model == ModelKind::Grass) {
    doc["candidate"] = "K-orbit sizes of t^lambda, lambda in Lambda";
  } else {
    json cand = json::array();
    for (const AffineWeylElement& x : candidate_set(p, g)) cand.push_back(element_json(g, x));
    doc["candidate"] = cand;
  }
  if (o.timing) doc["wall_seconds"] = seconds;

  std::ostringstream t;
  t << name << " " << to_string(p.kind) << " d=" << p.d << " (" << p.n_minus << "," << p.n_plus << ")"
    << (p.r ? " r=" + std::to_string(*p.r) : "") << " q=" << p.q << " model " << to_string(p.model) << "\n";
  t << "points: " << points.size() << "  predicted: " << report.predicted_total << "\n";
  t << "orbit sizes:";
  for (auto s : report.orbit_sizes) t << " " << s;
  t << "\npredicted:  ";
  for (auto s : report.predicted_sizes) t << " " << s;
  t << "\nverdict: " << report.verdict() << "\n";
  if (o.timing) t << "wall time: " << seconds << " s\n";
  ctx.save();
  const int code = name == "match-strata" && !report.match ? kVerification : kOk;
  return {doc, t.str(), code};
}

json error_body(const std::string& kind, const std::string& message) {
  return {{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
}

void emit(const Options& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw InvalidInput("cannot open output file " + o.out);
  out << payload;
}

std::string render(const Options& o, const Outcome& r) { return o.format == "text" ? r.text : r.doc.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwahori-Hecke algebras of GL(d) and GSp(2d): Bernstein elements, spherical checks, lattice models"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool coweight) {
    sub->add_option("--group", o.group, "GL or GSp")->check(CLI::IsMember({"GL", "GSp"}));
    sub->add_option("--d", o.d, "rank d (GL(d) or GSp(2d))")->required();
    if (coweight) {
      sub->add_option("--mu,--lambda", o.coweight, "comma-separated coweight")->required();
      sub->add_option("--similitude", o.similitude, "GSp similitude when only d entries are given");
      sub->add_option("--n-minus", o.n_minus, "lower bound n_-, used for the default similitude");
      sub->add_option("--n-plus", o.n_plus, "upper bound n_+, used for the default similitude");
    }
    sub->add_option("--out", o.out, "write output to FILE instead of stdout");
    sub->add_option("--cache", o.cache, "directory for the persistent reduced-word memo");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", o.timing, "include wall time in the output");
  };
  auto lattice = [&](CLI::App* sub) {
    common(sub, false);
    sub->add_option("--n-minus", o.n_minus, "n_- <= 0");
    sub->add_option("--n-plus", o.n_plus, "n_+ > 0");
    sub->add_option("--q", o.q, "field size (2, 3 or 4)");
    sub->add_option("--r", o.r, "GL: rank parameter r");
    sub->add_option("--model", o.model, "M, Grass or N");
    sub->add_option("--budget", o.budget, "maximum number of candidate subspaces");
  };

  auto* roots = app.add_subcommand("roots", "root datum, simple reflections and omega");
  common(roots, false);
  auto* lset = app.add_subcommand("lambda-set", "the set Lambda(n_-, n_+) (optionally with fixed r)");
  common(lset, false);
  lset->add_option("--n-minus", o.n_minus, "lower bound");
  lset->add_option("--n-plus", o.n_plus, "upper bound");
  lset->add_option("--r", o.r, "fix the central coordinate");
  auto* adm = app.add_subcommand("admissible", "the admissible set Adm(mu)");
  common(adm, true);
  auto* z = app.add_subcommand("z", "the central element z_lambda");
  common(z, true);
  auto* th = app.add_subcommand("theorem11", "(-1)^{2<rho,lambda>} Bern(chi_lambda)");
  common(th, true);
  auto* tri = app.add_subcommand("triangle", "spherical triangle matrix below mu");
  common(tri, true);
  auto* vm = app.add_subcommand("verify-minuscule", "v^l z_mu e_K = 1_{K mu K} for minuscule mu");
  common(vm, true);
  auto* count = app.add_subcommand("count-points", "enumerate lattice-model points and strata");
  lattice(count);
  auto* match = app.add_subcommand("match-strata", "compare strata with the candidate set");
  lattice(match);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_body("invalid_input", e.what()).dump(2) << "\n";
    return kInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
      Outcome result;
    if (name == "roots") result = cmd_roots(o);
    else if (name == "lambda-set") result = cmd_lambda_set(o);
    else if (name == "admissible") result = cmd_admissible(o);
    else if (name == "z") result = cmd_z(o);
    else if (name == "theorem11") result = cmd_theorem11(o);
    else if (name == "triangle") result = cmd_triangle(o);
    else if (name == "verify-minuscule") result = cmd_verify_minuscule(o);
    else result = lattice_command(o, name);
    emit(o, render(o, result));
    return result.code;
  } catch (const InvalidInput& e) {
    std::cout << error_body("invalid_input", e.what()).dump(2) << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    json body = error_body("budget_exceeded", e.what());
    body["error"]["estimate"] = e.estimate();
    body["error"]["budget"] = e.budget();
    std::cout << body.dump(2) << "\n";
    return kBudget;
  } catch (const VerificationFailure& e) {
    std::cout << error_body("verification_failure", e.what()).dump(2) << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    std::cout << error_body("internal_error", e.what()).dump(2) << "\n";
    return kVerification;
  }
}
