#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trivext/homengine/resolution.hpp"
#include "trivext/homengine/stable.hpp"
#include "trivext/singeq/verdict.hpp"

namespace trivext::cli {

using nlohmann::ordered_json;

inline const char* kBanner =
    "checks verify module-level shadows of singularity-category statements "
    "(syzygy relations, stabilized stable Hom tables, bounded resolutions)";

/// 64-bit FNV-1a, used as the inputs digest.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = d[v & 15];
  return s;
}

struct Section {
  std::string title;
  std::vector<std::pair<std::string, std::string>> rows;
  void add(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
};

class Report {
public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_seed(std::uint64_t s) { seed_ = s; }
  void add_input(const std::string& name, const std::string& content) {
    digest_ = fnv1a(name + '\0' + content, digest_);
    inputs_.push_back(name);
  }
  void set_timing(double seconds) { timing_ = seconds; }

  Section& section(const std::string& title) {
    for (auto& s : sections_)
      if (s.title == title) return s;
    sections_.push_back({title, {}});
    return sections_.back();
  }

  void verdict(const std::string& name, Verdict v, const std::string& detail = "") {
    checks_.push_back({name, v, detail});
  }
  void verdict(const Check& c) { checks_.push_back(c); }

  const std::vector<Check>& checks() const { return checks_; }

  Verdict overall() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : checks_) v = combine(v, c.verdict);
    return v;
  }

  /// 0 all Pass, 1 any Fail, 3 Undetermined under strict.
  int exit_code(bool strict) const {
    Verdict v = overall();
    if (v == Verdict::Fail) return 1;
    if (v == Verdict::Undetermined && strict) return 3;
    return 0;
  }

  std::string text() const {
    std::string out = "report: " + command_ + "\n";
    out += "inputs: " + hex64(digest_);
    for (const auto& i : inputs_) out += " " + i;
    out += "\nseed: " + std::to_string(seed_) + "\n";
    out += std::string("note: ") + kBanner + "\n";
    for (const auto& s : sections_) {
      out += "\n[" + s.title + "]\n";
      for (const auto& [k, v] : s.rows) out += k + ": " + v + "\n";
    }
    out += "\n";
    for (const auto& c : checks_) {
      out += "VERDICT " + c.name + ": " + to_string(c.verdict);
      if (!c.detail.empty()) out += " (" + c.detail + ")";
      out += "\n";
    }
    out += std::string("VERDICT overall: ") + to_string(overall()) + "\n";
    if (timing_ >= 0) out += "timing: " + std::to_string(timing_) + " s\n";
    return out;
  }

  ordered_json json() const {
    ordered_json j;
    j["report"] = command_;
    j["inputs"] = {{"digest", hex64(digest_)}, {"files", inputs_}};
    j["seed"] = seed_;
    j["note"] = kBanner;
    ordered_json secs = ordered_json::array();
    for (const auto& s : sections_) {
      ordered_json rows = ordered_json::array();
      for (const auto& [k, v] : s.rows) rows.push_back({{"key", k}, {"value", v}});
      secs.push_back({{"title", s.title}, {"rows", rows}});
    }
    j["sections"] = secs;
    ordered_json vs = ordered_json::array();
    for (const auto& c : checks_) vs.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    j["verdicts"] = vs;
    j["overall"] = to_string(overall());
    if (timing_ >= 0) j["timing_seconds"] = timing_;
    return j;
  }

private:
  std::string command_;
  std::uint64_t digest_ = 14695981039346656037ull;
  std::vector<std::string> inputs_;
  std::uint64_t seed_ = 0;
  double timing_ = -1;
  std::vector<Section> sections_;
  std::vector<Check> checks_;
};

inline std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline void add_table(Section& s, const std::string& prefix, const StableHomTable& t) {
  s.add(prefix + "trace", t.trace());
  s.add(prefix + "transition ranks", join(t.transition_ranks));
  s.add(prefix + "stabilized", t.stabilized ? "yes, dim " + std::to_string(*t.value()) : "no");
  if (!t.stop_reason.empty()) s.add(prefix + "stop", t.stop_reason);
}

inline std::string describe(const ProjDimResult& r, std::size_t bound) {
  std::string s;
  switch (r.status) {
    case PdStatus::Finite: s = "pd " + std::to_string(r.value); break;
    case PdStatus::ExceedsBound: s = "pd > " + std::to_string(bound); break;
    default: s = "undetermined"; break;
  }
  if (r.certificate)
    s += ", Omega^" + std::to_string(r.certificate->first) + (r.certificate->isomorphic ? " iso to " : " summand of ") +
         "Omega^" + std::to_string(r.certificate->second);
  if (!r.note.empty()) s += ", " + r.note;
  return s;
}

}  // namespace trivext::cli
