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
#include <optional>
#include <random>
#include <set>

#include "anionforge/contrast.hpp"
#include "anionforge/discriminator.hpp"
#include "anionforge/error.hpp"
#include "anionforge/generator.hpp"
#include "anionforge/io.hpp"
#include "anionforge/stats.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace anionforge;

namespace {

LabeledSample sample_of(const std::string& sentence, int label) {
  LabeledSample s;
  s.sentence = sentence;
  s.label = label;
  s.origin = label == 1 ? SampleOrigin::kKgPositive : SampleOrigin::kSwappedNegative;
  return s;
}

// Label is the presence of the token "good".
std::vector<LabeledSample> separable_set(int n, std::uint64_t seed) {
  const char* fillers[] = {"day", "walk", "meal", "film", "song", "trip", "game", "talk"};
  std::mt19937_64 rng(seed);
  std::vector<LabeledSample> samples;
  for (int i = 0; i < n; ++i) {
    const bool positive = i % 2 == 0;
    std::string sentence = "PersonX has a ";
    sentence += positive ? "good " : "bad ";
    sentence += fillers[rng() % 8];
    sentence += ". As a result, PersonX feels ";
    sentence += fillers[rng() % 8];
    sentence += ".";
    samples.push_back(sample_of(sentence, positive ? 1 : 0));
  }
  return samples;
}

class ConstantModel : public DiscriminatorModel {
 public:
  explicit ConstantModel(double p) : p_(p) {}
  double score(const std::string&) const override { return p_; }
  std::string metadata() const override { return "constant"; }

 private:
  double p_;
};

class TailLengthModel : public DiscriminatorModel {
 public:
  // Longer rendered sentences score higher; deterministic and order free.
  double score(const std::string& sentence) const override {
    return std::min(1.0, static_cast<double>(sentence.size()) / 100.0);
  }
  std::string metadata() const override { return "length"; }
};

std::vector<GenerationCandidate> fake_candidates(const std::vector<double>& ppls) {
  std::vector<GenerationCandidate> out;
  for (std::size_t i = 0; i < ppls.size(); ++i) {
    GenerationCandidate c;
    c.tail = "tail number " + std::to_string(i);
    c.logp = -static_cast<double>(i);
    c.perplexity = ppls[i];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("discriminator");

TEST_CASE("training requires both labels") {
  std::vector<LabeledSample> one_class = {sample_of("a b c", 1), sample_of("d e f", 1)};
  CHECK_THROWS_AS(train_reference(one_class, {}, 1), DataError);
  CHECK_THROWS_AS(train_reference({}, {}, 1), DataError);
}

TEST_CASE("loss vanishes on perfectly predicted samples") {
  // Drive the model to near-certainty on a single feature direction.
  std::vector<LabeledSample> samples = separable_set(200, 4);
  TrainOptions options;
  options.epochs = 30;
  options.learning_rate = 0.5;
  TrainStats stats;
  const ReferenceLinearModel model = train_reference(samples, options, 1, &stats);
  CHECK(stats.final_loss < 0.05);
  for (int i = 0; i < 10; ++i) {
    const LabeledSample& s = samples[i];
    const double p = model.score(s.sentence);
    // Per-sample loss -> 0 as p -> y.
    const double loss = s.label == 1 ? -std::log(p) : -std::log(1.0 - p);
    CHECK(loss < 0.2);
  }
}

TEST_CASE("linearly separable set trains to high accuracy") {
  TrainOptions options;
  options.epochs = 5;
  TrainStats stats;
  train_reference(separable_set(400, 9), options, 2, &stats);
  CHECK(stats.train_accuracy >= 0.99);
}

TEST_CASE("training is deterministic in (samples, seed)") {
  const auto samples = separable_set(100, 5);
  const ReferenceLinearModel a = train_reference(samples, {}, 42);
  const ReferenceLinearModel b = train_reference(samples, {}, 42);
  CHECK(a.bias() == b.bias());
  CHECK(a.weights() == b.weights());
  const ReferenceLinearModel c = train_reference(samples, {}, 43);
  CHECK(c.weights() != a.weights());
}

TEST_CASE("scores stay inside the open unit interval") {
  const ReferenceLinearModel model = train_reference(separable_set(100, 6), {}, 3);
  for (const char* s : {"PersonX sings", "totally unseen words here", ""}) {
    const double p = model.score(s);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
  }
}

TEST_CASE("BCE gradient matches central finite differences") {
  std::mt19937_64 rng(12);
  std::vector<HashedFeatures> features;
  std::vector<int> labels;
  const std::uint64_t hash_seed = 77;
  const char* words[] = {"sun", "rain", "wind", "snow", "mist", "hail"};
  for (int i = 0; i < 100; ++i) {
    std::string sentence;
    for (int j = 0; j < 4; ++j) sentence += std::string(words[rng() % 6]) + " ";
    sentence += ". as a result feels " + std::string(words[rng() % 6]);
    features.push_back(extract_features(sentence, hash_seed));
    labels.push_back(static_cast<int>(rng() % 2));
  }

  std::vector<double> weights(kFeatureDimension, 0.0);
  std::set<std::uint32_t> touched;
  for (const HashedFeatures& f : features) {
    for (const auto& [idx, value] : f.entries) touched.insert(idx);
  }
  for (std::uint32_t idx : touched) {
    weights[idx] = (static_cast<double>(rng() % 2000) - 1000.0) / 1000.0;
  }
  double bias = 0.25;

  std::vector<double> grad;
  double grad_bias = 0.0;
  logistic_loss_gradient(weights, bias, features, labels, &grad, &grad_bias);

  // One coordinate per sample, 100 samples.
  const double eps = 1e-5;
  for (const HashedFeatures& f : features) {
    const std::uint32_t idx = f.entries[rng() % f.entries.size()].first;
    const double saved = weights[idx];
    weights[idx] = saved + eps;
    const double up = logistic_loss(weights, bias, features, labels);
    weights[idx] = saved - eps;
    const double down = logistic_loss(weights, bias, features, labels);
    weights[idx] = saved;
    const double numeric = (up - down) / (2.0 * eps);
    const double analytic = grad[idx];
    const double denom = std::max({1e-8, std::abs(numeric), std::abs(analytic)});
    CHECK(std::abs(numeric - analytic) / denom < 1e-5);
  }
  const double bup = logistic_loss(weights, bias + eps, features, labels);
  const double bdown = logistic_loss(weights, bias - eps, features, labels);
  const double bnum = (bup - bdown) / (2.0 * eps);
  CHECK(std::abs(bnum - grad_bias) / std::max(1e-8, std::abs(bnum)) < 1e-5);
}

TEST_CASE("partition respects the threshold boundary") {
  std::vector<GenerationCandidate> candidates = fake_candidates({2.0, 3.0, 4.0});
  Event e;
  e.text = "PersonX sings";

  struct FixedModel : DiscriminatorModel {
    double score(const std::string& sentence) const override {
      if (sentence.find("0") != std::string::npos) return 0.71;
      if (sentence.find("1") != std::string::npos) return 0.70;
      return 0.69;
    }
    std::string metadata() const override { return "fixed"; }
  } model;

  const PartitionResult r = partition(model, e, RelationType::kXWant, candidates, 0.7);
  CHECK(r.valid.size() == 2);  // >= keeps the exact-threshold candidate
  CHECK(r.invalid.size() == 1);
  CHECK(r.valid[0].tail == "tail number 0");
  CHECK(r.valid[1].tail == "tail number 1");
  CHECK(r.invalid[0].tail == "tail number 2");
}

TEST_CASE("constant half-probability model marks everything invalid at 0.7") {
  const ConstantModel model(0.5);
  Event e;
  e.text = "PersonX sings";
  const PartitionResult r =
      partition(model, e, RelationType::kXWant, fake_candidates({1, 2, 3}), 0.7);
  CHECK(r.valid.empty());
  CHECK(r.invalid.size() == 3);
}

TEST_CASE("partition conserves the beam") {
  Event e;
  e.text = "PersonX sings";
  std::vector<double> ppls(10);
  for (int i = 0; i < 10; ++i) ppls[i] = 1.0 + i;
  const TailLengthModel model;
  const PartitionResult r =
      partition(model, e, RelationType::kXWant, fake_candidates(ppls), 0.7);
  CHECK(r.all.size() == 10);
  CHECK(r.valid.size() + r.invalid.size() == 10);
}

TEST_CASE("partition is stable under candidate permutation") {
  Event e;
  e.text = "PersonX sings";
  const TailLengthModel model;
  std::vector<GenerationCandidate> candidates = fake_candidates({5, 1, 4, 2, 3});
  const PartitionResult base = partition(model, e, RelationType::kXWant, candidates, 0.5);

  std::vector<GenerationCandidate> reversed(candidates.rbegin(), candidates.rend());
  const PartitionResult flipped = partition(model, e, RelationType::kXWant, reversed, 0.5);
  REQUIRE(base.all.size() == flipped.all.size());
  for (std::size_t i = 0; i < base.all.size(); ++i) {
    const ScoredCandidate& a = base.all[i];
    const ScoredCandidate& b = flipped.all[flipped.all.size() - 1 - i];
    CHECK(a.tail == b.tail);
    CHECK(a.probability == b.probability);
  }
}

TEST_CASE("raising the threshold never revalidates a candidate") {
  Event e;
  e.text = "PersonX sings";
  const TailLengthModel model;
  const auto candidates = fake_candidates({1, 2, 3, 4, 5, 6});
  std::set<std::string> previous_valid;
  bool first = true;
  for (double threshold : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const PartitionResult r = partition(model, e, RelationType::kXWant, candidates, threshold);
    std::set<std::string> now;
    for (const ScoredCandidate& c : r.valid) now.insert(c.tail);
    if (!first) {
      for (const std::string& t : now) CHECK(previous_valid.contains(t));
    }
    previous_valid = now;
    first = false;
  }
}

TEST_CASE("planted-contrast accuracy on held-out swapped negatives") {
  testing::PlantedOptions options;
  options.pairs = 120;
  const testing::PlantedKg kg = testing::build_planted_kg(options);
  const auto pairs = pair_events_all(kg.affirmative, kg.opposed);

  std::vector<ContrastPair> train_pairs;
  std::vector<ContrastPair> test_pairs;
  for (const ContrastPair& p : pairs) {
    (p.affirmative.split == Split::kTrain ? train_pairs : test_pairs).push_back(p);
  }
  REQUIRE_FALSE(test_pairs.empty());

  TrainOptions train_options;
  train_options.epochs = 8;
  train_options.learning_rate = 0.4;
  const ReferenceLinearModel model =
      train_reference(build_discriminator_dataset(train_pairs, 5), train_options, 5);

  const auto held_out = build_discriminator_dataset(test_pairs, 6);
  std::int64_t correct = 0;
  for (const LabeledSample& s : held_out) {
    const int predicted = model.score(s.sentence) >= 0.5 ? 1 : 0;
    correct += predicted == s.label ? 1 : 0;
  }
  const double accuracy = static_cast<double>(correct) / held_out.size();
  CHECK(accuracy >= 0.95);
}

TEST_CASE("model files round trip") {
  const ReferenceLinearModel model = train_reference(separable_set(60, 2), {}, 11);
  const std::string path = "test_model_tmp.json";
  model.save(path, "beefcafe");
  const ReferenceLinearModel loaded = ReferenceLinearModel::load(path);
  CHECK(loaded.bias() == model.bias());
  CHECK(loaded.hash_seed() == model.hash_seed());
  CHECK(loaded.weights() == model.weights());
  CHECK(read_config_hash(path) == std::optional<std::string>{"beefcafe"});
  std::remove(path.c_str());
}

TEST_CASE("external scorer speaks the line protocol") {
  const ExternalScorer scorer("awk '{ n += 1; print 0.25 }'");
  const auto probs = scorer.score_batch({"a b", "c d", "e f"});
  REQUIRE(probs.size() == 3);
  for (double p : probs) CHECK(p == 0.25);

  const ExternalScorer broken("awk 'NR % 2 { print 0.5 }'");  // drops every other line
  CHECK_THROWS_AS(broken.score_batch({"a", "b"}), DataError);

  const ExternalScorer failing("exit 3");
  CHECK_THROWS_AS(failing.score_batch({"a"}), DataError);
}

TEST_SUITE_END();
