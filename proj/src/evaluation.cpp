// Copyright 2026 The ccdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccdep/evaluation.hpp"

#include <cstdio>
#include <map>
#include <json.hpp>

#include "ccdep/error.hpp"

namespace ccdep {
namespace {

using nlohmann::json;

struct Counts {
  std::size_t tp = 0, fp = 0, fn = 0;
  std::size_t supported_tp = 0, supported_total = 0;
};

std::string canon(const AliasTable* aliases, const std::string& name) {
  return aliases ? aliases->canonical(name) : name;
}

Counts count(const ScanReport* report, const GroundTruth& truth, MatchOn on,
             const AliasTable* aliases) {
  if (truth.labeled.empty()) {
    throw Error(ErrorCode::kInvalidInput, "ground truth for " + truth.repo_id + " has no labels");
  }
  std::set<std::pair<std::string, ToolKind>> detected;
  if (report) {
    for (const auto& r : report->records) detected.emplace(canon(aliases, r.library), r.tool);
  }
  std::set<TruthLabel> labels;
  for (const auto& l : truth.labeled) labels.insert({canon(aliases, l.library), l.tool});

  auto consistent = [&](const std::pair<std::string, ToolKind>& d, const TruthLabel& l) {
    if (d.first != l.library) return false;
    return on == MatchOn::kName || !l.tool || *l.tool == d.second;
  };

  Counts c;
  if (on == MatchOn::kName) {
    std::set<std::string> names, truth_names;
    for (const auto& d : detected) names.insert(d.first);
    for (const auto& l : labels) truth_names.insert(l.library);
    for (const auto& n : names) (truth_names.count(n) ? c.tp : c.fp)++;
    for (const auto& n : truth_names) {
      const bool hit = names.count(n) > 0;
      c.fn += !hit;
      if (truth.supported && truth.supported->count(n)) {
        ++c.supported_total;
        c.supported_tp += hit;
      }
    }
    return c;
  }
  for (const auto& l : labels) {
    bool hit = false;
    for (const auto& d : detected) hit = hit || consistent(d, l);
    (hit ? c.tp : c.fn)++;
    if (truth.supported && truth.supported->count(l.library)) {
      ++c.supported_total;
      c.supported_tp += hit;
    }
  }
  for (const auto& d : detected) {
    bool hit = false;
    for (const auto& l : labels) hit = hit || consistent(d, l);
    c.fp += !hit;
  }
  return c;
}

EvalResult finish(const Counts& c, bool any_supported) {
  std::optional<std::pair<std::size_t, std::size_t>> sup;
  if (any_supported) sup = std::pair{c.supported_tp, c.supported_total};
  return metrics_from_counts(c.tp, c.fp, c.fn, sup);
}

std::string fmt(const std::optional<double>& v) {
  if (!v) return "/";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *v);
  return buf;
}

}  // namespace

std::vector<GroundTruth> parse_ground_truth(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("repos") || !doc["repos"].is_array()) {
    throw Error(ErrorCode::kParse, "ground truth must be an object with a \"repos\" array");
  }
  std::vector<GroundTruth> out;
  for (const auto& r : doc["repos"]) {
    if (!r.is_object() || !r.contains("repo_id") || !r["repo_id"].is_string()) {
      throw Error(ErrorCode::kParse, "ground truth repo without repo_id");
    }
    GroundTruth g;
    g.repo_id = r["repo_id"].get<std::string>();
    if (!r.contains("labels") || !r["labels"].is_array()) {
      throw Error(ErrorCode::kParse, "repo " + g.repo_id + " has no labels array");
    }
    for (const auto& l : r["labels"]) {
      TruthLabel label;
      if (l.is_string()) {
        label.library = normalize_name(l.get<std::string>(), NameStyle::kPlain);
      } else if (l.is_object() && l.contains("library") && l["library"].is_string()) {
        label.library = normalize_name(l["library"].get<std::string>(), NameStyle::kPlain);
        if (l.contains("tool") && !l["tool"].is_null()) {
          auto t = l["tool"].is_string() ? tool_from_string(l["tool"].get<std::string>()) : std::nullopt;
          if (!t) throw Error(ErrorCode::kParse, "unknown tool in label for " + label.library);
          label.tool = *t;
        }
      } else {
        throw Error(ErrorCode::kParse, "malformed label in repo " + g.repo_id);
      }
      g.labeled.insert(std::move(label));
    }
    if (g.labeled.empty()) throw Error(ErrorCode::kParse, "repo " + g.repo_id + " has no labels");
    if (r.contains("supported") && !r["supported"].is_null()) {
      if (!r["supported"].is_array()) throw Error(ErrorCode::kParse, "supported must be an array");
      std::set<std::string> s;
      for (const auto& n : r["supported"]) {
        if (!n.is_string()) throw Error(ErrorCode::kParse, "supported entries must be strings");
        s.insert(normalize_name(n.get<std::string>(), NameStyle::kPlain));
      }
      g.supported = std::move(s);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<MatchOn> match_on_from_string(std::string_view s) {
  if (s == "name") return MatchOn::kName;
  if (s == "name+tool") return MatchOn::kNameAndTool;
  return std::nullopt;
}

double f1_score(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

EvalResult metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t fn,
                               std::optional<std::pair<std::size_t, std::size_t>> supported) {
  EvalResult r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  if (tp + fp > 0) r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall_full = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  if (supported && supported->second > 0) {
    r.recall_supported = static_cast<double>(supported->first) / static_cast<double>(supported->second);
  }
  if (r.precision) r.f1 = f1_score(*r.precision, r.recall_full);
  return r;
}

EvalResult evaluate(const ScanReport& report, const GroundTruth& truth, MatchOn on,
                    const AliasTable* aliases) {
  return finish(count(&report, truth, on, aliases), truth.supported.has_value());
}

EvalResult evaluate_corpus(const std::vector<ScanReport>& reports,
                           const std::vector<GroundTruth>& truths, MatchOn on,
                           const AliasTable* aliases) {
  std::map<std::string, const ScanReport*> by_id;
  for (const auto& r : reports) by_id.emplace(r.repo_id, &r);
  Counts total;
  bool any_supported = false;
  for (const auto& t : truths) {
    auto it = by_id.find(t.repo_id);
    Counts c = count(it == by_id.end() ? nullptr : it->second, t, on, aliases);
    total.tp += c.tp;
    total.fp += c.fp;
    total.fn += c.fn;
    total.supported_tp += c.supported_tp;
    total.supported_total += c.supported_total;
    any_supported = any_supported || t.supported.has_value();
  }
  return finish(total, any_supported);
}

std::string eval_to_text(const EvalResult& r) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "tp %zu  fp %zu  fn %zu\nP %s  R1 %s  R2 %s  F1 %s\n", r.tp, r.fp,
                r.fn, fmt(r.precision).c_str(), fmt(r.recall_full).c_str(),
                fmt(r.recall_supported).c_str(), fmt(r.f1).c_str());
  return buf;
}

std::string eval_to_json(const EvalResult& r) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  nlohmann::ordered_json j{{"tp", r.tp},
                           {"fp", r.fp},
                           {"fn", r.fn},
                           {"precision", opt(r.precision)},
                           {"recall_full", r.recall_full},
                           {"recall_supported", opt(r.recall_supported)},
                           {"f1", opt(r.f1)}};
  return j.dump(2) + "\n";
}

}  // namespace ccdep
