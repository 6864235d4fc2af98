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

#include "anionforge/discriminator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "anionforge/error.hpp"
#include "anionforge/io.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/subprocess.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

std::vector<double> DiscriminatorModel::score_batch(
    const std::vector<std::string>& sentences) const {
  std::vector<double> out;
  out.reserve(sentences.size());
  for (const std::string& s : sentences) out.push_back(score(s));
  return out;
}

namespace {

std::uint32_t hash_feature(std::string_view ns, std::string_view key, std::uint64_t seed) {
  std::uint64_t h = fnv1a64(ns, seed ^ 0x100000001b3ULL);
  h = fnv1a64(key, h);
  return static_cast<std::uint32_t>(h & (kFeatureDimension - 1));
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

HashedFeatures extract_features(std::string_view sentence, std::uint64_t hash_seed) {
  const std::vector<std::string> tokens = feature_tokens(sentence);

  std::map<std::uint32_t, float> counts;
  auto bump = [&](std::string_view ns, std::string_view key) {
    counts[hash_feature(ns, key, hash_seed)] += 1.0f;
  };

  // The event clause ends at the first sentence period; everything after is
  // the rendered inference clause.
  std::size_t boundary = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == ".") {
      boundary = i;
      break;
    }
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    bump("u", tokens[i]);
    if (i + 1 < tokens.size()) bump("b", tokens[i] + " " + tokens[i + 1]);
  }
  // Head x inference conjunctions.
  for (std::size_t i = 0; i < boundary; ++i) {
    if (tokens[i] == ".") continue;
    for (std::size_t j = boundary + 1; j < tokens.size(); ++j) {
      if (tokens[j] == ".") continue;
      bump("x", tokens[i] + "\x1f" + tokens[j]);
    }
  }

  HashedFeatures features;
  features.entries.assign(counts.begin(), counts.end());
  return features;
}

ReferenceLinearModel::ReferenceLinearModel(std::vector<float> weights, double bias,
                                           std::uint64_t hash_seed, std::string metadata,
                                           double threshold)
    : weights_(std::move(weights)), bias_(bias), hash_seed_(hash_seed),
      metadata_(std::move(metadata)), threshold_(threshold) {
  if (weights_.size() != kFeatureDimension) {
    throw DataError("discriminator weight vector must have dimension " +
                    std::to_string(kFeatureDimension));
  }
}

double ReferenceLinearModel::score(const std::string& sentence) const {
  const HashedFeatures features = extract_features(sentence, hash_seed_);
  double z = bias_;
  for (const auto& [index, value] : features.entries) {
    z += static_cast<double>(weights_[index]) * value;
  }
  return sigmoid(z);
}

double logistic_loss(const std::vector<double>& weights, double bias,
                     const std::vector<HashedFeatures>& features,
                     const std::vector<int>& labels) {
  double total = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    double z = bias;
    for (const auto& [index, value] : features[i].entries) {
      z += weights[index] * value;
    }
    total += labels[i] == 1 ? softplus(-z) : softplus(z);
  }
  return total / static_cast<double>(features.size());
}

void logistic_loss_gradient(const std::vector<double>& weights, double bias,
                            const std::vector<HashedFeatures>& features,
                            const std::vector<int>& labels, std::vector<double>* grad_weights,
                            double* grad_bias) {
  grad_weights->assign(weights.size(), 0.0);
  *grad_bias = 0.0;
  const double inv_n = 1.0 / static_cast<double>(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    double z = bias;
    for (const auto& [index, value] : features[i].entries) {
      z += weights[index] * value;
    }
    const double residual = (sigmoid(z) - labels[i]) * inv_n;
    for (const auto& [index, value] : features[i].entries) {
      (*grad_weights)[index] += residual * value;
    }
    *grad_bias += residual;
  }
}

ReferenceLinearModel train_reference(const std::vector<LabeledSample>& samples,
                                     const TrainOptions& options, std::uint64_t seed,
                                     TrainStats* stats) {
  if (samples.empty()) throw DataError("cannot train on an empty sample set");
  bool has_pos = false;
  bool has_neg = false;
  for (const LabeledSample& s : samples) {
    (s.label == 1 ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg) {
    throw DataError("training set must contain both labels");
  }

  std::vector<HashedFeatures> features;
  std::vector<int> labels;
  features.reserve(samples.size());
  labels.reserve(samples.size());
  for (const LabeledSample& s : samples) {
    features.push_back(extract_features(s.sentence, options.hash_seed));
    labels.push_back(s.label);
  }

  std::vector<float> weights(kFeatureDimension, 0.0f);
  double bias = 0.0;
  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(epoch)));
    deterministic_shuffle(order, rng);
    for (std::size_t i : order) {
      double z = bias;
      for (const auto& [index, value] : features[i].entries) {
        z += static_cast<double>(weights[index]) * value;
      }
      const double residual = sigmoid(z) - labels[i];
      const double step = options.learning_rate * residual;
      for (const auto& [index, value] : features[i].entries) {
        weights[index] -= static_cast<float>(step * value);
      }
      bias -= step;
    }
  }

  if (stats != nullptr) {
    const std::vector<double> dweights(weights.begin(), weights.end());
    stats->final_loss = logistic_loss(dweights, bias, features, labels);
    std::int64_t correct = 0;
    for (std::size_t i = 0; i < features.size(); ++i) {
      double z = bias;
      for (const auto& [index, value] : features[i].entries) {
        z += static_cast<double>(weights[index]) * value;
      }
      if ((sigmoid(z) >= 0.5 ? 1 : 0) == labels[i]) ++correct;
    }
    stats->train_accuracy = static_cast<double>(correct) / static_cast<double>(features.size());
  }

  const std::string metadata = "reference-linear trained on " +
                               std::to_string(samples.size()) + " samples, epochs=" +
                               std::to_string(options.epochs);
  return ReferenceLinearModel(std::move(weights), bias, options.hash_seed, metadata);
}

void ReferenceLinearModel::save(const std::string& path, std::string_view hash) const {
  Json j;
  j["format"] = "anion-forge-discriminator";
  j["version"] = 1;
  j["dimension"] = kFeatureDimension;
  j["hash_seed"] = hash_seed_;
  j["bias"] = bias_;
  j["threshold"] = threshold_;
  j["metadata"] = metadata_;
  if (!hash.empty()) j["config_hash"] = std::string(hash);
  Json sparse = Json::object();
  for (std::uint32_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0.0f) sparse[std::to_string(i)] = weights_[i];
  }
  j["weights"] = std::move(sparse);
  std::ofstream out = open_output(path);
  out << j.dump() << '\n';
}

ReferenceLinearModel ReferenceLinearModel::load(const std::string& path) {
  std::ifstream in = open_input(path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw DataError("invalid model file " + path + ": " + e.what());
  }
  if (j.value("format", "") != "anion-forge-discriminator" || j.value("version", 0) != 1) {
    throw DataError("unsupported model file format: " + path);
  }
  if (j.value("dimension", 0u) != kFeatureDimension) {
    throw DataError("model dimension mismatch in " + path);
  }
  std::vector<float> weights(kFeatureDimension, 0.0f);
  for (const auto& [key, value] : j.at("weights").items()) {
    const unsigned long index = std::stoul(key);
    if (index >= kFeatureDimension) throw DataError("weight index out of range in " + path);
    weights[index] = value.get<float>();
  }
  return ReferenceLinearModel(std::move(weights), j.at("bias").get<double>(),
                              j.at("hash_seed").get<std::uint64_t>(), j.value("metadata", ""),
                              j.value("threshold", 0.7));
}

ExternalScorer::ExternalScorer(std::string command) : command_(std::move(command)) {}

double ExternalScorer::score(const std::string& sentence) const {
  return score_batch({sentence}).front();
}

std::vector<double> ExternalScorer::score_batch(const std::vector<std::string>& sentences) const {
  const std::vector<std::string> lines =
      run_line_filter(command_, sentences, static_cast<long>(sentences.size()));
  std::vector<double> probs;
  probs.reserve(lines.size());
  for (const std::string& line : lines) {
    std::size_t consumed = 0;
    double p = 0.0;
    try {
      p = std::stod(line, &consumed);
    } catch (const std::exception&) {
      throw DataError("external scorer produced a non-numeric line: \"" + line + "\"");
    }
    if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
      throw DataError("external scorer probability out of range: \"" + line + "\"");
    }
    probs.push_back(p);
  }
  return probs;
}

PartitionResult partition(const DiscriminatorModel& model, const Event& event,
                          RelationType relation,
                          const std::vector<GenerationCandidate>& candidates,
                          double threshold) {
  if (candidates.empty()) throw DataError("partition: candidate list is empty");
  PartitionResult result;
  result.event = event;
  result.relation = relation;
  result.threshold = threshold;

  std::vector<std::string> sentences;
  sentences.reserve(candidates.size());
  for (const GenerationCandidate& c : candidates) {
    sentences.push_back(render_patterned_sentence(event.text, relation, c.tail));
  }
  const std::vector<double> probs = model.score_batch(sentences);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ScoredCandidate sc;
    sc.tail = candidates[i].tail;
    sc.logp = candidates[i].logp;
    sc.perplexity = candidates[i].perplexity;
    sc.probability = probs[i];
    result.all.push_back(sc);
    if (sc.probability >= threshold) {
      result.valid.push_back(sc);
    } else {
      result.invalid.push_back(sc);
    }
  }
  return result;
}

void save_partitions(const std::vector<PartitionResult>& partitions, std::ostream& out,
                     std::string_view hash) {
  write_jsonl_meta(out, hash, "partition");
  for (const PartitionResult& p : partitions) {
    Json record;
    record["head"] = p.event.text;
    record["polarity"] = to_string(p.event.polarity);
    record["split"] = to_string(p.event.split);
    record["source_head"] = p.event.source_head ? Json(*p.event.source_head) : Json();
    record["cue"] = p.event.cue ? Json(*p.event.cue) : Json();
    record["relation"] = to_string(p.relation);
    record["threshold"] = p.threshold;
    Json candidates = Json::array();
    for (const ScoredCandidate& c : p.all) {
      Json jc;
      jc["tail"] = c.tail;
      jc["logp"] = c.logp;
      jc["ppl"] = c.perplexity;
      jc["prob"] = c.probability;
      jc["valid"] = c.probability >= p.threshold;
      candidates.push_back(std::move(jc));
    }
    record["candidates"] = std::move(candidates);
    out << record.dump() << '\n';
  }
}

std::vector<PartitionResult> load_partitions(const std::string& path) {
  std::vector<PartitionResult> partitions;
  for_each_jsonl_file(path, [&](const Json& j, std::int64_t line) {
    PartitionResult p;
    try {
      p.event.text = j.at("head").get<std::string>();
      p.event.polarity = parse_polarity(j.value("polarity", "affirmative"));
      p.event.split = parse_split(j.value("split", "test"));
      if (j.contains("source_head") && !j["source_head"].is_null()) {
        p.event.source_head = j["source_head"].get<std::string>();
      }
      if (j.contains("cue") && !j["cue"].is_null()) {
        p.event.cue = j["cue"].get<std::string>();
      }
      p.relation = parse_relation(j.at("relation").get<std::string>());
      p.threshold = j.at("threshold").get<double>();
      for (const Json& jc : j.at("candidates")) {
        ScoredCandidate c;
        c.tail = jc.at("tail").get<std::string>();
        c.logp = jc.at("logp").get<double>();
        c.perplexity = jc.at("ppl").get<double>();
        c.probability = jc.at("prob").get<double>();
        p.all.push_back(c);
        if (jc.at("valid").get<bool>()) {
          p.valid.push_back(c);
        } else {
          p.invalid.push_back(c);
        }
      }
    } catch (const Json::exception& e) {
      throw FormatError(std::string("bad partition record: ") + e.what(), line);
    }
    if (p.all.empty()) throw FormatError("partition record without candidates", line);
    partitions.push_back(std::move(p));
  });
  return partitions;
}

}  // namespace anionforge
