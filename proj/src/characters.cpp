#include "iwahori/characters.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "iwahori/errors.hpp"

namespace iwahori {

namespace {

std::int64_t dot(const Coweight& a, const Coweight& b) {
  std::int64_t total = 0;
  for (int i = 0; i < a.size(); ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
  return total;
}

void require_dominant(const Coweight& lambda, const RootDatum& rd, const char* what) {
  if (!is_dominant(lambda, rd)) throw InvalidInput(std::string(what) + " requires a dominant coweight, got " + lambda.str());
}

}  // namespace

std::vector<Coweight> dominant_weights_below(const Coweight& lambda, const RootDatum& rd) {
  require_dominant(lambda, rd, "dominant_weights_below");
  // Every dominant mu < lambda is reachable from lambda by subtracting one
  // positive root at a time without leaving the dominant cone.
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> frontier{lambda};
  while (!frontier.empty()) {
    const Coweight mu = frontier.front();
    frontier.pop_front();
    for (const Coweight& a : rd.positive_coroots()) {
      Coweight next = mu - a;
      if (!is_dominant(next, rd)) continue;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.rbegin(), seen.rend()};
}

std::map<Coweight, std::int64_t> dominant_multiplicities(const Coweight& lambda, const RootDatum& rd) {
  std::vector<Coweight> weights = dominant_weights_below(lambda, rd);
  // A dominant conjugate of mu + k*alpha is strictly higher than mu, so
  // processing by depth below lambda visits every dependency first.
  std::stable_sort(weights.begin(), weights.end(), [&](const Coweight& a, const Coweight& b) {
    return rd.rho_twice(lambda - a) < rd.rho_twice(lambda - b);
  });
  const Coweight& two_rho = rd.two_rho_vee();
  std::map<Coweight, std::int64_t> mult;
  for (const Coweight& w : weights) mult.emplace(w, 0);
  mult[lambda] = 1;
  for (const Coweight& mu : weights) {
    if (mu == lambda) continue;
    std::int64_t numerator = 0;
    for (const Coweight& a : rd.positive_coroots()) {
      Coweight shifted = mu + a;
      while (true) {
        auto it = mult.find(rd.dominant_conjugate(shifted));
        if (it == mult.end()) break;
        numerator += 2 * dot(shifted, a) * it->second;
        shifted = shifted + a;
      }
    }
    const std::int64_t denominator = dot(lambda - mu, lambda + mu + two_rho);
    if (denominator <= 0 || numerator % denominator != 0) {
      throw VerificationFailure("Freudenthal recursion produced a non-integral multiplicity at " + mu.str());
    }
    mult[mu] = numerator / denominator;
  }
  return mult;
}

Multiplicity weight_multiplicity_checked(const Coweight& lambda, const Coweight& mu, const RootDatum& rd) {
  require_dominant(lambda, rd, "weight_multiplicity");
  rd.validate(mu);
  if (rd.central_coordinate(lambda) != rd.central_coordinate(mu)) return {0, true};
  const Coweight dom = rd.dominant_conjugate(mu);
  if (!dominance_leq(dom, lambda, rd)) return {0, false};
  const auto mult = dominant_multiplicities(lambda, rd);
  auto it = mult.find(dom);
  return {it == mult.end() ? 0 : it->second, false};
}

std::int64_t weight_multiplicity(const Coweight& lambda, const Coweight& mu, const RootDatum& rd) {
  return weight_multiplicity_checked(lambda, mu, rd).value;
}

Character character(const Coweight& lambda, const RootDatum& rd) {
  Character chi;
  for (const auto& [dom, m] : dominant_multiplicities(lambda, rd)) {
    if (m == 0) continue;
    for (const Coweight& w : weyl_orbit(dom, rd)) chi[w] = m;
  }
  return chi;
}

Character character_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) out[x + y] += mx * my;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t character_dimension(const Character& chi) {
  return std::accumulate(chi.begin(), chi.end(), std::int64_t{0},
                         [](std::int64_t acc, const auto& kv) { return acc + kv.second; });
}

std::map<Coweight, std::int64_t> decompose_character(const Character& chi, const RootDatum& rd) {
  // Only dominant entries are needed; the lexicographically largest one is
  // maximal for the dominance order.
  std::map<Coweight, std::int64_t> remaining;
  for (const auto& [w, m] : chi)
    if (m != 0 && is_dominant(w, rd)) remaining[w] = m;
  for (const auto& [w, m] : chi) {
    auto it = remaining.find(rd.dominant_conjugate(w));
    if (m != 0 && (it == remaining.end() || it->second != m)) {
      throw VerificationFailure("character is not W_0-invariant at " + w.str());
    }
  }
  for (const auto& [w, m] : remaining)
    for (const Coweight& conj : weyl_orbit(w, rd)) {
      auto it = chi.find(conj);
      if (it == chi.end() || it->second != m) throw VerificationFailure("character is not W_0-invariant at " + conj.str());
    }
  std::map<Coweight, std::int64_t> out;
  while (!remaining.empty()) {
    const auto top = *remaining.rbegin();
    out[top.first] = top.second;
    for (const auto& [mu, m] : dominant_multiplicities(top.first, rd)) {
      auto& slot = remaining[mu];
      slot -= top.second * m;
      if (slot == 0) remaining.erase(mu);
    }
  }
  return out;
}

std::map<Coweight, std::int64_t> decompose_product(const Coweight& lambda, const Coweight& mu, const RootDatum& rd) {
  require_dominant(lambda, rd, "decompose_product");
  require_dominant(mu, rd, "decompose_product");
  return decompose_character(character_product(character(lambda, rd), character(mu, rd)), rd);
}

bool is_minuscule(const Coweight& lambda, const RootDatum& rd) {
  require_dominant(lambda, rd, "is_minuscule");
  for (RootPair a : rd.positive_roots())
    if (std::abs(rd.pairing(lambda, a)) > 1) return false;
  return true;
}

namespace {

// q-Kostant partition function: sum over ways to write gamma as a
// non-negative combination of positive coroots of q^(number of parts).
class KostantPartition {
 public:
  explicit KostantPartition(const RootDatum& rd) : rd_(rd) {}

  Laurent operator()(const Coweight& gamma) { return count(gamma, 0); }

 private:
  Laurent count(const Coweight& gamma, std::size_t from) {
    const auto& coroots = rd_.positive_coroots();
    if (rd_.rho_twice(gamma) < 0) return {};
    if (from == coroots.size()) return gamma.is_zero() ? Laurent(1) : Laurent();
    auto key = std::make_pair(gamma, from);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Laurent total;
    Coweight rest = gamma;
    for (int parts = 0; rd_.rho_twice(rest) >= 0; ++parts) {
      total += count(rest, from + 1).shifted(2 * parts);
      rest = rest - coroots[from];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  const RootDatum& rd_;
  std::map<std::pair<Coweight, std::size_t>, Laurent> memo_;
};

}  // namespace

Laurent q_weight_multiplicity(const Coweight& lambda, const Coweight& mu, const RootDatum& rd) {
  require_dominant(lambda, rd, "q_weight_multiplicity");
  require_dominant(mu, rd, "q_weight_multiplicity");
  if (!dominance_leq(mu, lambda, rd)) return {};
  KostantPartition partition(rd);
  const Coweight& two_rho = rd.two_rho_vee();
  Laurent total;
  for (const Permutation& w : rd.weyl_group()) {
    // w(lambda + rho) - (mu + rho), with w(rho) - rho = (w(2rho) - 2rho)/2.
    Coweight rho_shift = rd.act(w, two_rho) - two_rho;
    for (int i = 0; i < rho_shift.size(); ++i) rho_shift[i] /= 2;
    const Coweight gamma = rd.act(w, lambda) + rho_shift - mu;
    Laurent term = partition(gamma);
    if (rd.finite_length(w) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace iwahori
