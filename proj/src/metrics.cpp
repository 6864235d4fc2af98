// Copyright 2026 The anion-forge Authors
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

#include "anionforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "anionforge/error.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

namespace {

std::string label_key(std::string_view head, RelationType relation, std::string_view tail) {
  return normalize_text(head) + "\x1f" + to_string(relation) + "\x1f" + normalize_text(tail);
}

}  // namespace

LabelSource LabelSource::from_file(const std::string& path) {
  LabelSource source;
  source.provenance_ = Provenance::kFile;
  std::ifstream in = open_input(path);
  std::string line;
  std::int64_t line_no = 0;
  bool saw_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_tsv_row(line, line_no);
    if (!saw_row && fields.size() == 4 && fields[0] == "head" && fields[3] == "label") {
      continue;  // header
    }
    saw_row = true;
    if (fields.size() != 4) {
      throw FormatError("label rows need 4 columns (head, relation, tail, label)", line_no);
    }
    if (fields[3] != "0" && fields[3] != "1") {
      throw FormatError("label must be 0 or 1, got \"" + fields[3] + "\"", line_no);
    }
    const RelationType relation = parse_relation(fields[1]);
    source.table_[label_key(fields[0], relation, fields[2])] = fields[3] == "1" ? 1 : 0;
  }
  return source;
}

LabelSource LabelSource::from_oracle(
    std::function<int(const std::string&, RelationType, const std::string&)> oracle) {
  LabelSource source;
  source.provenance_ = Provenance::kOracle;
  source.oracle_ = std::move(oracle);
  return source;
}

int LabelSource::label(const std::string& head, RelationType relation,
                       const std::string& tail) const {
  if (oracle_) {
    const int value = oracle_(head, relation, tail);
    if (value != 0 && value != 1) throw DataError("oracle returned a non-binary label");
    return value;
  }
  auto it = table_.find(label_key(head, relation, tail));
  if (it == table_.end()) {
    throw DataError("missing label for (" + head + ", " + to_string(relation) + ", " + tail +
                    ")");
  }
  return it->second;
}

double p_at_k(const std::vector<int>& labels, std::size_t k) {
  if (k == 0 || k > labels.size()) {
    throw DataError("p_at_k: k must be in [1, |options|]");
  }
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < k; ++i) correct += labels[i] == 1 ? 1 : 0;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(k);
}

std::optional<PrunedPrecision> p_at_num_valid(const PartitionResult& partition,
                                              const LabelSource& labels) {
  if (partition.valid.empty()) return std::nullopt;

  auto precision_of = [&](const std::vector<ScoredCandidate>& set) {
    std::int64_t correct = 0;
    for (const ScoredCandidate& c : set) {
      correct += labels.label(partition.event.text, partition.relation, c.tail);
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(set.size());
  };

  // The |valid| lowest-perplexity members of the all set; ties keep beam order.
  std::vector<std::size_t> order(partition.all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return partition.all[a].perplexity < partition.all[b].perplexity;
  });
  order.resize(partition.valid.size());
  std::vector<ScoredCandidate> pruned;
  pruned.reserve(order.size());
  for (std::size_t i : order) pruned.push_back(partition.all[i]);

  PrunedPrecision out;
  out.pruned_all = precision_of(pruned);
  out.valid = precision_of(partition.valid);
  return out;
}

namespace {

std::map<std::string, int> ngram_counts(const std::vector<std::string>& tokens, int n) {
  std::map<std::string, int> counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) key += " " + tokens[i + j];
    ++counts[key];
  }
  return counts;
}

constexpr double kBleuEpsilon = 1e-9;

}  // namespace

double bleu2(const std::string& hypothesis, const std::vector<std::string>& references) {
  const std::vector<std::string> hyp = split_ws(normalize_text(hypothesis));
  if (hyp.empty()) throw DataError("bleu2: empty hypothesis");
  if (references.empty()) throw DataError("bleu2: no references");

  std::vector<std::vector<std::string>> refs;
  refs.reserve(references.size());
  for (const std::string& r : references) refs.push_back(split_ws(normalize_text(r)));

  // Brevity penalty against the closest reference length (shorter on ties).
  const std::size_t c = hyp.size();
  std::size_t r_len = refs.front().size();
  for (const auto& ref : refs) {
    const auto diff = [&](std::size_t len) {
      return len > c ? len - c : c - len;
    };
    if (diff(ref.size()) < diff(r_len) || (diff(ref.size()) == diff(r_len) && ref.size() < r_len)) {
      r_len = ref.size();
    }
  }
  const double bp = c >= r_len ? 1.0
                               : std::exp(1.0 - static_cast<double>(r_len) /
                                                    static_cast<double>(c));

  // Modified n-gram precision, clipped by the max reference count. Hypotheses
  // with fewer than two tokens use the effective order (unigrams only).
  const int max_order = c >= 2 ? 2 : 1;
  double log_sum = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const auto hyp_counts = ngram_counts(hyp, n);
    std::map<std::string, int> max_ref;
    for (const auto& ref : refs) {
      for (const auto& [gram, count] : ngram_counts(ref, n)) {
        max_ref[gram] = std::max(max_ref[gram], count);
      }
    }
    std::int64_t clipped = 0;
    std::int64_t total = 0;
    for (const auto& [gram, count] : hyp_counts) {
      total += count;
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) clipped += std::min(count, it->second);
    }
    const double precision =
        clipped > 0 ? static_cast<double>(clipped) / static_cast<double>(total)
                    : kBleuEpsilon / static_cast<double>(std::max<std::int64_t>(total, 1));
    log_sum += std::log(precision) / max_order;
  }
  return bp * std::exp(log_sum);
}

Json MetricReport::to_json() const {
  Json j;
  j["prompts"] = prompts;
  j["prompts_without_valid"] = prompts_without_valid;
  auto set_json = [](const SetMetrics& m) {
    Json s;
    s["mean_size"] = m.mean_size;
    s["precision"] = m.mean_precision;
    s["total_correct"] = m.total_correct;
    s["total_size"] = m.total_size;
    s["bleu2"] = m.bleu2.has_value() ? Json(*m.bleu2) : Json();
    return s;
  };
  j["sets"]["all"] = set_json(all);
  j["sets"]["valid"] = set_json(valid);
  j["sets"]["invalid"] = set_json(invalid);
  j["p_at_num_valid"]["all"] = pruned_all_precision;
  j["p_at_num_valid"]["valid"] = valid_precision;
  j["p_at_num_valid"]["improvement_pct"] = improvement_pct;
  j["p_value"] = p_value;
  j["significant_05"] = significant_05;
  j["significant_01"] = significant_01;
  j["permutations"] = permutations;
  j["alpha"] = alpha;
  return j;
}

MetricReport MetricReport::from_json(const Json& j) {
  MetricReport r;
  r.prompts = j.at("prompts").get<std::int64_t>();
  r.prompts_without_valid = j.at("prompts_without_valid").get<std::int64_t>();
  auto set_from = [](const Json& s) {
    SetMetrics m;
    m.mean_size = s.at("mean_size").get<double>();
    m.mean_precision = s.at("precision").get<double>();
    m.total_correct = s.at("total_correct").get<std::int64_t>();
    m.total_size = s.at("total_size").get<std::int64_t>();
    if (!s.at("bleu2").is_null()) m.bleu2 = s.at("bleu2").get<double>();
    return m;
  };
  r.all = set_from(j.at("sets").at("all"));
  r.valid = set_from(j.at("sets").at("valid"));
  r.invalid = set_from(j.at("sets").at("invalid"));
  r.pruned_all_precision = j.at("p_at_num_valid").at("all").get<double>();
  r.valid_precision = j.at("p_at_num_valid").at("valid").get<double>();
  r.improvement_pct = j.at("p_at_num_valid").at("improvement_pct").get<double>();
  r.p_value = j.at("p_value").get<double>();
  r.significant_05 = j.at("significant_05").get<bool>();
  r.significant_01 = j.at("significant_01").get<bool>();
  r.permutations = j.at("permutations").get<std::int64_t>();
  r.alpha = j.at("alpha").get<double>();
  return r;
}

std::string MetricReport::to_table() const {
  std::ostringstream out;
  char line[160];
  out << "set      |     # |   BL2 |   P@k\n";
  out << "---------+-------+-------+------\n";
  auto row = [&](const char* name, const SetMetrics& m) {
    if (m.bleu2.has_value()) {
      std::snprintf(line, sizeof(line), "%-8s | %5.1f | %5.2f | %5.2f\n", name, m.mean_size,
                    *m.bleu2 * 100.0, m.mean_precision);
    } else {
      std::snprintf(line, sizeof(line), "%-8s | %5.1f |     - | %5.2f\n", name, m.mean_size,
                    m.mean_precision);
    }
    out << line;
  };
  row("all", all);
  row("valid", valid);
  row("invalid", invalid);
  const char* stars = significant_01 ? "**" : (significant_05 ? "*" : "");
  std::snprintf(line, sizeof(line),
                "P@{#valid}: all=%.2f valid=%s%.2f iprv%%=%.2f (p=%.5g, %lld perms)\n",
                pruned_all_precision, stars, valid_precision, improvement_pct, p_value,
                static_cast<long long>(permutations));
  out << line;
  return out.str();
}

MetricReport evaluate_run(const std::vector<PartitionResult>& partitions,
                          const LabelSource& labels, const EvalConfig& config) {
  if (partitions.empty()) throw DataError("evaluate_run: no partitions");

  MetricReport report;
  report.prompts = static_cast<std::int64_t>(partitions.size());
  report.permutations = config.permutations;
  report.alpha = config.alpha;

  struct SetAccumulator {
    double size_sum = 0.0;
    double precision_sum = 0.0;
    std::int64_t precision_count = 0;
    std::int64_t correct = 0;
    std::int64_t total = 0;
    double bleu_sum = 0.0;
    std::int64_t bleu_count = 0;

    void add(const std::vector<ScoredCandidate>& set, const PartitionResult& p,
             const LabelSource& labels, const KnowledgeGraph* refs) {
      size_sum += static_cast<double>(set.size());
      if (!set.empty()) {
        std::int64_t c = 0;
        for (const ScoredCandidate& cand : set) {
          c += labels.label(p.event.text, p.relation, cand.tail);
        }
        correct += c;
        total += static_cast<std::int64_t>(set.size());
        precision_sum += 100.0 * static_cast<double>(c) / static_cast<double>(set.size());
        ++precision_count;
      }
      if (refs != nullptr) {
        const std::set<std::string>& tails = refs->tails(p.event.text, p.relation);
        if (!tails.empty()) {
          const std::vector<std::string> ref_list(tails.begin(), tails.end());
          for (const ScoredCandidate& cand : set) {
            bleu_sum += bleu2(cand.tail, ref_list);
            ++bleu_count;
          }
        }
      }
    }

    SetMetrics finish(std::int64_t prompts, bool with_bleu) const {
      SetMetrics m;
      m.mean_size = prompts > 0 ? size_sum / static_cast<double>(prompts) : 0.0;
      m.mean_precision =
          precision_count > 0 ? precision_sum / static_cast<double>(precision_count) : 0.0;
      m.total_correct = correct;
      m.total_size = total;
      if (with_bleu && bleu_count > 0) {
        m.bleu2 = bleu_sum / static_cast<double>(bleu_count);
      }
      return m;
    }
  };

  SetAccumulator all_acc;
  SetAccumulator valid_acc;
  SetAccumulator invalid_acc;
  std::vector<double> pruned_series;
  std::vector<double> valid_series;

  for (const PartitionResult& p : partitions) {
    all_acc.add(p.all, p, labels, config.references);
    valid_acc.add(p.valid, p, labels, config.references);
    invalid_acc.add(p.invalid, p, labels, config.references);

    const auto pruned = p_at_num_valid(p, labels);
    if (pruned.has_value()) {
      pruned_series.push_back(pruned->pruned_all);
      valid_series.push_back(pruned->valid);
    } else {
      ++report.prompts_without_valid;
    }
  }

  const bool with_bleu = config.references != nullptr;
  report.all = all_acc.finish(report.prompts, with_bleu);
  report.valid = valid_acc.finish(report.prompts, with_bleu);
  report.invalid = invalid_acc.finish(report.prompts, with_bleu);

  if (!pruned_series.empty()) {
    const double n = static_cast<double>(pruned_series.size());
    report.pruned_all_precision =
        std::accumulate(pruned_series.begin(), pruned_series.end(), 0.0) / n;
    report.valid_precision =
        std::accumulate(valid_series.begin(), valid_series.end(), 0.0) / n;
    report.improvement_pct =
        report.pruned_all_precision > 0.0
            ? 100.0 * (report.valid_precision - report.pruned_all_precision) /
                  report.pruned_all_precision
            : 0.0;
    report.p_value =
        permutation_test(valid_series, pruned_series, config.permutations, config.seed);
    report.significant_05 = report.p_value < 0.05;
    report.significant_01 = report.p_value < 0.01;
  }

  return report;
}

}  // namespace anionforge
