#include "gradealg/grading_spec.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace gradealg {

GradingSpec GradingSpec::constant(Degree d) {
  GradingSpec s;
  s.pattern_ = {std::move(d)};
  s.prefix_.clear();
  return s;
}

GradingSpec GradingSpec::list(std::vector<Degree> prefix, Degree tail) {
  GradingSpec s;
  s.prefix_ = std::move(prefix);
  s.pattern_ = {std::move(tail)};
  s.normalize_();
  return s;
}

GradingSpec GradingSpec::periodic(std::vector<Degree> pattern) {
  if (pattern.empty()) throw DegreeError("empty grading pattern");
  GradingSpec s;
  s.pattern_ = std::move(pattern);
  s.normalize_();
  return s;
}

GradingSpec GradingSpec::eventually_periodic(std::vector<Degree> prefix,
                                             std::vector<Degree> pattern) {
  if (pattern.empty()) throw DegreeError("empty grading pattern");
  GradingSpec s;
  s.prefix_ = std::move(prefix);
  s.pattern_ = std::move(pattern);
  s.normalize_();
  return s;
}

void GradingSpec::normalize_() {
  for (const Degree& d : prefix_)
    if (d.dim() != deg_dim()) throw DegreeError("grading spec mixes degree dimensions");
  for (const Degree& d : pattern_)
    if (d.dim() != deg_dim()) throw DegreeError("grading spec mixes degree dimensions");
  // shrink the pattern to its least period
  for (long p = 1; p < period(); ++p) {
    if (period() % p) continue;
    bool ok = true;
    for (long i = 0; i < period() && ok; ++i)
      if (!(pattern_[i] == pattern_[i % p])) ok = false;
    if (ok) {
      pattern_.resize(p);
      break;
    }
  }
  // Absorb prefix entries into the pattern: dropping the last prefix entry
  // shifts the pattern phase by one, so it must match the pattern's last
  // value and the pattern rotates right to compensate.
  while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
    prefix_.pop_back();
    std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
  }
}

Degree GradingSpec::at(long n) const {
  if (n < 1) throw DegreeError("grading spec index must be >= 1");
  long L = prefix_len();
  if (n <= L) return prefix_[n - 1];
  return pattern_[(n - 1 - L) % period()];
}

bool GradingSpec::is_constant() const { return prefix_.empty() && period() == 1; }

bool GradingSpec::is_zero() const { return is_constant() && pattern_[0].is_zero(); }

bool GradingSpec::operator==(const GradingSpec& o) const {
  if (deg_dim() != o.deg_dim()) return false;
  long L = std::max(prefix_len(), o.prefix_len());
  long P = std::lcm(period(), o.period());
  for (long n = 1; n <= L + P; ++n)
    if (!(at(n) == o.at(n))) return false;
  return true;
}

bool GradingSpec::all_values_recur() const {
  std::set<Degree> tail(pattern_.begin(), pattern_.end());
  for (const Degree& d : prefix_)
    if (!tail.count(d)) return false;
  return true;
}

GradingSpec GradingSpec::compose_perm(const IndexPerm& pi) const {
  // pi moves indices only within [1..B] (finite kind) or within K-blocks;
  // past max(prefix, B) aligned to lcm(P, K), delta(pi(n)) is periodic.
  long P = period();
  long K = pi.block_period();
  long B = pi.finite_bound();
  long lcm = std::lcm(P, K);
  long L = ((std::max(prefix_len(), B) + K + lcm - 1) / lcm) * lcm;
  std::vector<Degree> prefix, pattern;
  for (long n = 1; n <= L; ++n) prefix.push_back(at(pi.apply(n)));
  for (long n = L + 1; n <= L + lcm; ++n) pattern.push_back(at(pi.apply(n)));
  return eventually_periodic(std::move(prefix), std::move(pattern));
}

std::string GradingSpec::str() const {
  std::string s = "[";
  for (const Degree& d : prefix_) s += d.str() + ",";
  s += "(";
  for (long i = 0; i < period(); ++i) {
    if (i) s += ",";
    s += pattern_[i].str();
  }
  return s + ")*]";
}

std::string GradingSpec::to_json() const {
  nlohmann::json j;
  if (is_constant()) {
    j["kind"] = "constant";
    j["value"] = pattern_[0].coords();
  } else if (prefix_.empty()) {
    j["kind"] = "periodic";
    j["pattern"] = nlohmann::json::array();
    for (const Degree& d : pattern_) j["pattern"].push_back(d.coords());
  } else {
    j["kind"] = "list";
    j["prefix"] = nlohmann::json::array();
    for (const Degree& d : prefix_) j["prefix"].push_back(d.coords());
    j["pattern"] = nlohmann::json::array();
    for (const Degree& d : pattern_) j["pattern"].push_back(d.coords());
  }
  return j.dump();
}

GradingSpec GradingSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  auto degs = [](const nlohmann::json& arr) {
    std::vector<Degree> out;
    for (auto& d : arr) out.push_back(Degree(d.get<std::vector<long>>()));
    return out;
  };
  if (kind == "constant") return constant(Degree(j.at("value").get<std::vector<long>>()));
  if (kind == "periodic") return periodic(degs(j.at("pattern")));
  if (kind == "list")
    return eventually_periodic(degs(j.at("prefix")), degs(j.at("pattern")));
  throw DegreeError("unknown grading spec kind: " + kind);
}

}  // namespace gradealg
