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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "anionforge/error.hpp"
#include "anionforge/metrics.hpp"
#include "anionforge/text.hpp"
#include "doctest.h"

using namespace anionforge;

namespace {

PartitionResult make_partition(const std::vector<double>& probs,
                               const std::vector<double>& ppls, double threshold = 0.7) {
  PartitionResult p;
  p.event.text = "PersonX sings";
  p.relation = RelationType::kXWant;
  p.threshold = threshold;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    ScoredCandidate c;
    c.tail = "tail " + std::to_string(i);
    c.logp = -static_cast<double>(i);
    c.perplexity = ppls[i];
    c.probability = probs[i];
    p.all.push_back(c);
    (probs[i] >= threshold ? p.valid : p.invalid).push_back(c);
  }
  return p;
}

LabelSource labels_from_map(std::map<std::string, int> table) {
  return LabelSource::from_oracle(
      [table = std::move(table)](const std::string&, RelationType, const std::string& tail) {
        auto it = table.find(normalize_text(tail));
        if (it == table.end()) throw DataError("missing label for " + tail);
        return it->second;
      });
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("p_at_k counts the leading window") {
  CHECK(p_at_k({1, 1, 0, 1, 0, 0, 0, 0, 0, 0}, 10) == doctest::Approx(30.0));
  CHECK(p_at_k({1, 1, 1}, 3) == doctest::Approx(100.0));
  CHECK(p_at_k({1, 1, 1}, 2) == doctest::Approx(100.0));
  CHECK(p_at_k({0, 1}, 1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(p_at_k({1, 0}, 3), DataError);
  CHECK_THROWS_AS(p_at_k({1, 0}, 0), DataError);
}

TEST_CASE("p_at_k matches a recount oracle over random prompts") {
  std::mt19937_64 rng(21);
  for (int prompt = 0; prompt < 200; ++prompt) {
    std::vector<int> labels(1 + rng() % 12);
    for (int& l : labels) l = static_cast<int>(rng() % 2);
    const std::size_t k = 1 + rng() % labels.size();
    int recount = 0;
    for (std::size_t i = 0; i < k; ++i) recount += labels[i];
    CHECK(p_at_k(labels, k) ==
          doctest::Approx(100.0 * recount / static_cast<double>(k)).epsilon(1e-12));
  }
}

TEST_CASE("pruned precision equals full precision when everything is valid") {
  const PartitionResult p = make_partition({0.9, 0.8, 0.9}, {3.0, 2.0, 1.0});
  const LabelSource labels =
      labels_from_map({{"tail 0", 1}, {"tail 1", 0}, {"tail 2", 1}});
  const auto result = p_at_num_valid(p, labels);
  REQUIRE(result.has_value());
  CHECK(result->pruned_all == doctest::Approx(result->valid));
}

TEST_CASE("empty valid set is excluded") {
  const PartitionResult p = make_partition({0.1, 0.2}, {1.0, 2.0});
  const LabelSource labels = labels_from_map({{"tail 0", 1}, {"tail 1", 1}});
  CHECK_FALSE(p_at_num_valid(p, labels).has_value());
}

TEST_CASE("pruned set picks lowest perplexity with beam-order ties") {
  // 10 candidates; valid = first 4 by probability; perplexities pick others.
  std::vector<double> probs = {0.9, 0.9, 0.9, 0.9, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
  std::vector<double> ppls = {9.0, 8.0, 7.0, 6.0, 1.0, 2.0, 2.0, 3.0, 9.5, 9.6};
  const PartitionResult p = make_partition(probs, ppls);
  // Labels: low-perplexity candidates 4..7 are wrong, valid ones right.
  const LabelSource labels = labels_from_map({
      {"tail 0", 1}, {"tail 1", 1}, {"tail 2", 1}, {"tail 3", 1},
      {"tail 4", 0}, {"tail 5", 0}, {"tail 6", 1}, {"tail 7", 0},
      {"tail 8", 0}, {"tail 9", 0},
  });
  const auto result = p_at_num_valid(p, labels);
  REQUIRE(result.has_value());
  // Hand enumeration: |valid| = 4; lowest ppl members are tails 4,5,6,7
  // (tie between 5 and 6 at 2.0 keeps beam order: 5 before 6).
  CHECK(result->pruned_all == doctest::Approx(25.0));
  CHECK(result->valid == doctest::Approx(100.0));
}

TEST_CASE("missing labels are an error, never a default") {
  const PartitionResult p = make_partition({0.9}, {1.0});
  const LabelSource labels = labels_from_map({});
  CHECK_THROWS_AS(p_at_num_valid(p, labels), DataError);

  const std::string path = "test_labels_tmp.tsv";
  {
    std::ofstream out(path);
    out << "head\trelation\ttail\tlabel\n";
    out << "PersonX sings\txWant\ttail 0\t1\n";
  }
  const LabelSource file_labels = LabelSource::from_file(path);
  CHECK(file_labels.label("PersonX sings", RelationType::kXWant, "Tail 0") == 1);
  CHECK_THROWS_AS(file_labels.label("PersonX sings", RelationType::kXWant, "tail 9"),
                  DataError);
  CHECK_THROWS_AS(file_labels.label("PersonX sings", RelationType::kXNeed, "tail 0"),
                  DataError);
  std::remove(path.c_str());
}

TEST_CASE("bleu2 on the anchor examples") {
  CHECK(bleu2("to be happy", {"to be happy"}) == doctest::Approx(1.0));
  // No overlap: epsilon-dominated.
  CHECK(bleu2("alpha beta", {"gamma delta"}) < 1e-4);
  // Hand computation: p1 = 1, p2 = 1/2, BP = exp(1 - 4/3).
  const double expected = std::exp(1.0 - 4.0 / 3.0) * std::sqrt(0.5);
  CHECK(bleu2("to be happy", {"to be very happy"}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bleu2 is invariant under reference permutation") {
  const std::vector<std::string> refs = {"to eat well", "to sleep", "to be very happy"};
  std::vector<std::string> shuffled = {"to sleep", "to be very happy", "to eat well"};
  CHECK(bleu2("to be happy", refs) == bleu2("to be happy", shuffled));
}

TEST_CASE("single-token hypotheses fall back to unigram precision") {
  CHECK(bleu2("lazy", {"lazy"}) == doctest::Approx(1.0));
  CHECK(bleu2("lazy", {"tired"}) < 1e-4);
}

TEST_CASE("evaluate_run on a single all-correct prompt") {
  const PartitionResult p = make_partition({0.9, 0.8, 0.1}, {1.0, 2.0, 3.0});
  const LabelSource labels =
      labels_from_map({{"tail 0", 1}, {"tail 1", 1}, {"tail 2", 1}});
  EvalConfig config;
  config.permutations = 200;
  const MetricReport report = evaluate_run({p}, labels, config);
  CHECK(report.prompts == 1);
  CHECK(report.all.mean_precision == doctest::Approx(100.0));
  CHECK(report.valid.mean_precision == doctest::Approx(100.0));
  CHECK(report.invalid.mean_precision == doctest::Approx(100.0));
  CHECK(report.pruned_all_precision == doctest::Approx(100.0));
  CHECK(report.valid_precision == doctest::Approx(100.0));
  CHECK(report.p_value == 1.0);  // no difference anywhere
}

TEST_CASE("correct counts are conserved across the partition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<double> probs(n);
    std::vector<double> ppls(n);
    std::map<std::string, int> table;
    for (std::size_t i = 0; i < n; ++i) {
      probs[i] = static_cast<double>(rng() % 100) / 100.0;
      ppls[i] = 1.0 + static_cast<double>(rng() % 50);
      table["tail " + std::to_string(i)] = static_cast<int>(rng() % 2);
    }
    const PartitionResult p = make_partition(probs, ppls);
    const LabelSource labels = labels_from_map(table);
    const MetricReport report = evaluate_run({p}, labels, EvalConfig{.permutations = 10});
    // P_all * |all| = P_valid * |valid| + P_invalid * |invalid| for one prompt,
    // as an exact integer identity on the correct counts.
    CHECK(report.all.total_correct ==
          report.valid.total_correct + report.invalid.total_correct);
    CHECK(report.all.total_size == report.valid.total_size + report.invalid.total_size);
    const double lhs = report.all.mean_precision * static_cast<double>(report.all.total_size);
    const double rhs =
        report.valid.mean_precision * static_cast<double>(report.valid.total_size) +
        report.invalid.mean_precision * static_cast<double>(report.invalid.total_size);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("reports serialize and recompute identically") {
  const PartitionResult p = make_partition({0.9, 0.3, 0.8}, {2.0, 1.0, 3.0});
  const LabelSource labels =
      labels_from_map({{"tail 0", 1}, {"tail 1", 0}, {"tail 2", 1}});
  EvalConfig config;
  config.permutations = 100;
  const MetricReport report = evaluate_run({p}, labels, config);
  const Json j = report.to_json();
  const MetricReport reparsed = MetricReport::from_json(j);
  CHECK(reparsed.to_json().dump() == j.dump());

  const MetricReport again = evaluate_run({p}, labels, config);
  CHECK(again.to_json().dump() == j.dump());
  CHECK_FALSE(report.to_table().empty());
}

TEST_CASE("evaluate_run reports BLEU against a reference graph") {
  KnowledgeGraph refs;
  Event head;
  head.text = "PersonX sings";
  refs.add({head, RelationType::kXWant, "tail 0"});
  refs.add({head, RelationType::kXWant, "tail 1"});

  const PartitionResult p = make_partition({0.9, 0.2}, {1.0, 2.0});
  const LabelSource labels = labels_from_map({{"tail 0", 1}, {"tail 1", 0}});
  EvalConfig config;
  config.permutations = 10;
  config.references = &refs;
  const MetricReport report = evaluate_run({p}, labels, config);
  REQUIRE(report.all.bleu2.has_value());
  CHECK(*report.all.bleu2 == doctest::Approx(1.0));  // every candidate matches a reference
}

TEST_CASE("evaluate_run rejects empty input") {
  const LabelSource labels = labels_from_map({});
  CHECK_THROWS_AS(evaluate_run({}, labels, EvalConfig{}), DataError);
}

TEST_SUITE_END();
