#include "iwahori/serialize.hpp"

#include <algorithm>
#include <fstream>

#include "iwahori/errors.hpp"

namespace iwahori {

using nlohmann::json;

json to_json(const Coweight& lambda) { return lambda.entries(); }

Coweight coweight_from_json(const json& j) { return Coweight(j.get<std::vector<int>>()); }

json to_json(const Laurent& c) {
  json out = json::array();
  for (const auto& [e, k] : c.terms()) out.push_back({e, k});
  return out;
}

Laurent laurent_from_json(const json& j) {
  std::vector<std::pair<int, std::int64_t>> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
  return Laurent::from_terms(terms);
}

json element_json(const AffineWeylGroup& g, const AffineWeylElement& x) {
  const ReducedWord w = g.reduced_word(x);
  return {{"translation", to_json(g.translation_part(x))},
          {"finite", x.finite_part().images(g.datum().ambient())},
          {"word", w.letters},
          {"omega", w.omega_power},
          {"length", static_cast<int>(w.letters.size())}};
}

json hecke_json(const AffineWeylGroup& g, const HeckeElement& h) {
  std::vector<std::pair<ReducedWord, const Laurent*>> rows;
  rows.reserve(h.size());
  for (const auto& [x, c] : h.terms()) rows.emplace_back(g.reduced_word(x), &c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.letters != b.first.letters) return a.first.letters < b.first.letters;
    return a.first.omega_power < b.first.omega_power;
  });
  json out = json::array();
  for (const auto& [w, c] : rows) out.push_back({{"word", w.letters}, {"omega", w.omega_power}, {"coeffs", to_json(*c)}});
  return out;
}

HeckeElement hecke_from_json(const AffineWeylGroup& g, const json& j) {
  HeckeElement out;
  for (const auto& row : j) {
    ReducedWord w{row.at("word").get<std::vector<int>>(), row.at("omega").get<int>()};
    for (int s : w.letters)
      if (s < 0 || s >= g.num_simple()) throw InvalidInput("letter out of range in Hecke element");
    out.add(g.from_word(w), laurent_from_json(row.at("coeffs")));
  }
  return out;
}

json group_algebra_json(const AffineWeylGroup& g, const GroupAlgebraElement& a) {
  std::vector<std::pair<ReducedWord, std::int64_t>> rows;
  for (const auto& [x, c] : a) rows.emplace_back(g.reduced_word(x), c);
  std::sort(rows.begin(), rows.end());
  json out = json::array();
  for (const auto& [w, c] : rows) out.push_back({{"word", w.letters}, {"omega", w.omega_power}, {"coeff", c}});
  return out;
}

json character_json(const Character& chi) {
  json out = json::array();
  for (auto it = chi.rbegin(); it != chi.rend(); ++it) out.push_back({{"weight", to_json(it->first)}, {"mult", it->second}});
  return out;
}

json memo_json(const AffineWeylGroup& g) {
  json entries = json::array();
  const int n = g.datum().ambient();
  for (const auto& [x, w] : g.export_memo()) {
    entries.push_back({{"translation", to_json(g.translation_part(x))},
                       {"finite", x.finite_part().images(n)},
                       {"word", w.letters},
                       {"omega", w.omega_power}});
  }
  return {{"schema", kSchema},
          {"kind", "reduced-word-memo"},
          {"group", to_string(g.datum().kind())},
          {"d", g.datum().rank()},
          {"entries", std::move(entries)}};
}

std::size_t import_memo_json(const AffineWeylGroup& g, const json& j) {
  const RootDatum& rd = g.datum();
  if (!j.is_object() || j.value("schema", "") != kSchema || j.value("kind", "") != "reduced-word-memo") return 0;
  if (j.value("group", "") != to_string(rd.kind()) || j.value("d", -1) != rd.rank()) return 0;
  const auto it = j.find("entries");
  if (it == j.end() || !it->is_array()) return 0;
  std::vector<std::pair<AffineWeylElement, ReducedWord>> parsed;
  for (const auto& e : *it) {
    try {
      const Coweight lambda = coweight_from_json(e.at("translation"));
      const Permutation w = Permutation::from_images(e.at("finite").get<std::vector<int>>());
      ReducedWord word{e.at("word").get<std::vector<int>>(), e.at("omega").get<int>()};
      if (std::any_of(word.letters.begin(), word.letters.end(), [&](int s) { return s < 0 || s >= g.num_simple(); })) continue;
      parsed.emplace_back(g.make(lambda, w), std::move(word));
    } catch (const std::exception&) {
      continue;
    }
  }
  return g.import_memo(parsed);
}

std::filesystem::path memo_path(const std::filesystem::path& dir, const RootDatum& rd) {
  return dir / ("memo-" + to_string(rd.kind()) + "-" + std::to_string(rd.rank()) + ".json");
}

std::size_t load_memo(const std::filesystem::path& dir, const AffineWeylGroup& g) {
  std::ifstream in(memo_path(dir, g.datum()));
  if (!in) return 0;
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return 0;
  return import_memo_json(g, j);
}

void save_memo(const std::filesystem::path& dir, const AffineWeylGroup& g) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = memo_path(dir, g.datum());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidInput("cannot write cache file " + tmp.string());
    out << memo_json(g).dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace iwahori
