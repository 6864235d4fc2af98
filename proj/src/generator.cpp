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

#include "anionforge/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>

#include "anionforge/error.hpp"
#include "anionforge/io.hpp"
#include "anionforge/subprocess.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

namespace {

constexpr const char* kEndMarker = "</s>";
constexpr const char* kUnkMarker = "<unk>";
constexpr int kStartId = -1;  // <s> context; never predicted

}  // namespace

std::uint32_t ReferenceNGramModel::head_bucket(std::string_view token) const {
  return static_cast<std::uint32_t>(fnv1a64(token, options_.hash_seed) % options_.head_buckets);
}

int ReferenceNGramModel::vocab_id(std::string_view token) const {
  auto it = vocab_ids_.find(std::string(token));
  if (it != vocab_ids_.end()) return it->second;
  return vocab_ids_.at(kUnkMarker);
}

ReferenceNGramModel ReferenceNGramModel::train(const KnowledgeGraph& graph, Options options) {
  if (graph.empty()) throw DataError("cannot train a generator on an empty graph");
  if (options.smoothing <= 0.0) throw DataError("smoothing must be positive");

  ReferenceNGramModel model;
  model.options_ = options;

  std::set<std::string> vocab_set;
  for (const KnowledgeTuple& t : graph.tuples()) {
    for (const std::string& tok : feature_tokens(t.tail)) vocab_set.insert(tok);
  }
  model.vocab_.assign(vocab_set.begin(), vocab_set.end());
  model.vocab_.push_back(kUnkMarker);
  model.vocab_.push_back(kEndMarker);
  for (std::size_t i = 0; i < model.vocab_.size(); ++i) {
    model.vocab_ids_[model.vocab_[i]] = static_cast<int>(i);
  }

  model.bigram_.resize(kNumRelations);
  model.bigram_totals_.resize(kNumRelations);
  model.head_counts_.resize(kNumRelations);
  model.head_totals_.resize(kNumRelations);

  for (const KnowledgeTuple& t : graph.tuples()) {
    const int r = static_cast<int>(t.relation);
    std::vector<std::string> tokens = feature_tokens(t.tail);
    std::vector<int> ids;
    ids.reserve(tokens.size() + 1);
    for (const std::string& tok : tokens) ids.push_back(model.vocab_ids_.at(tok));
    ids.push_back(model.vocab_ids_.at(kEndMarker));

    std::vector<std::uint32_t> buckets;
    for (const std::string& h : feature_tokens(t.head.text)) {
      if (h == ".") continue;
      buckets.push_back(model.head_bucket(h));
    }

    int prev = kStartId;
    for (int id : ids) {
      model.bigram_[r][prev][id] += 1.0;
      model.bigram_totals_[r][prev] += 1.0;
      for (std::uint32_t b : buckets) {
        model.head_counts_[r][{b, prev}][id] += 1.0;
        model.head_totals_[r][{b, prev}] += 1.0;
      }
      prev = id;
    }
  }
  return model;
}

ReferenceNGramModel ReferenceNGramModel::uniform_over(const std::vector<std::string>& vocabulary,
                                                      Options options) {
  ReferenceNGramModel model;
  model.options_ = options;
  std::set<std::string> vocab_set(vocabulary.begin(), vocabulary.end());
  model.vocab_.assign(vocab_set.begin(), vocab_set.end());
  model.vocab_.push_back(kUnkMarker);
  model.vocab_.push_back(kEndMarker);
  for (std::size_t i = 0; i < model.vocab_.size(); ++i) {
    model.vocab_ids_[model.vocab_[i]] = static_cast<int>(i);
  }
  model.bigram_.resize(kNumRelations);
  model.bigram_totals_.resize(kNumRelations);
  model.head_counts_.resize(kNumRelations);
  model.head_totals_.resize(kNumRelations);
  return model;
}

double ReferenceNGramModel::token_logp(RelationType relation,
                                       const std::vector<std::string>& head_tokens,
                                       std::string_view prev, std::string_view token) const {
  const int r = static_cast<int>(relation);
  const int prev_id = prev == "<s>" ? kStartId : vocab_id(prev);
  const int token_id = vocab_id(token);
  const double v = static_cast<double>(vocab_.size());
  const double lambda = options_.smoothing;

  auto count_of = [](const std::map<int, double>& m, int key) {
    auto it = m.find(key);
    return it == m.end() ? 0.0 : it->second;
  };

  // Relation-level bigram with additive smoothing.
  double bi_num = lambda;
  double bi_den = lambda * v;
  if (auto it = bigram_[r].find(prev_id); it != bigram_[r].end()) {
    bi_num += count_of(it->second, token_id);
  }
  if (auto it = bigram_totals_[r].find(prev_id); it != bigram_totals_[r].end()) {
    bi_den += it->second;
  }
  const double p_bigram = bi_num / bi_den;

  // Head-conditioned term averaged over the head's hashed buckets.
  double p_head = 0.0;
  std::vector<std::uint32_t> buckets;
  for (const std::string& h : head_tokens) {
    if (h == ".") continue;
    buckets.push_back(head_bucket(h));
  }
  if (buckets.empty()) {
    p_head = p_bigram;
  } else {
    for (std::uint32_t b : buckets) {
      double num = lambda;
      double den = lambda * v;
      if (auto it = head_counts_[r].find({b, prev_id}); it != head_counts_[r].end()) {
        num += count_of(it->second, token_id);
      }
      if (auto it = head_totals_[r].find({b, prev_id}); it != head_totals_[r].end()) {
        den += it->second;
      }
      p_head += num / den;
    }
    p_head /= static_cast<double>(buckets.size());
  }

  const double alpha = options_.head_weight;
  return std::log(alpha * p_head + (1.0 - alpha) * p_bigram);
}

std::map<std::string, double> ReferenceNGramModel::next_distribution(
    RelationType relation, const std::vector<std::string>& head_tokens,
    std::string_view prev) const {
  std::map<std::string, double> dist;
  for (const std::string& token : vocab_) {
    dist[token] = std::exp(token_logp(relation, head_tokens, prev, token));
  }
  return dist;
}

namespace {

struct BeamState {
  std::vector<int> tokens;
  double logp = 0.0;
  bool done = false;
};

bool better(const BeamState& a, const BeamState& b) {
  if (a.logp != b.logp) return a.logp > b.logp;
  return a.tokens < b.tokens;  // deterministic tie-break
}

}  // namespace

std::vector<GenerationCandidate> ReferenceNGramModel::generate(const Event& head,
                                                               RelationType relation,
                                                               int beam) const {
  if (beam < 1) throw DataError("beam must be >= 1");
  const std::vector<std::string> head_tokens = feature_tokens(head.text);
  const int end_id = vocab_ids_.at(kEndMarker);

  // Token-level transition scores depend only on (prev, token); cache them.
  std::map<int, std::vector<std::pair<double, int>>> expansions;
  auto expand = [&](int prev_id) -> const std::vector<std::pair<double, int>>& {
    auto it = expansions.find(prev_id);
    if (it != expansions.end()) return it->second;
    std::vector<std::pair<double, int>> exp;
    exp.reserve(vocab_.size());
    const std::string prev = prev_id == kStartId ? "<s>" : vocab_[prev_id];
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
      if (vocab_[i] == kUnkMarker) continue;  // never generate the unknown marker
      exp.emplace_back(token_logp(relation, head_tokens, prev, vocab_[i]),
                       static_cast<int>(i));
    }
    std::sort(exp.begin(), exp.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    return expansions.emplace(prev_id, std::move(exp)).first->second;
  };

  std::vector<BeamState> active = {BeamState{}};
  std::vector<BeamState> done;

  for (std::size_t step = 0; step <= kMaxTailTokens && !active.empty(); ++step) {
    std::vector<BeamState> next;
    for (const BeamState& state : active) {
      const int prev = state.tokens.empty() ? kStartId : state.tokens.back();
      if (state.tokens.size() >= kMaxTailTokens) {
        // Length cap: force termination with the end marker's probability.
        const std::string prev_tok = prev == kStartId ? "<s>" : vocab_[prev];
        BeamState finished = state;
        finished.logp += token_logp(relation, head_tokens, prev_tok, kEndMarker);
        finished.done = true;
        done.push_back(std::move(finished));
        continue;
      }
      for (const auto& [lp, token_id] : expand(prev)) {
        if (token_id == end_id && state.tokens.empty()) continue;  // empty tail
        BeamState child = state;
        child.logp += lp;
        if (token_id == end_id) {
          child.done = true;
          done.push_back(std::move(child));
        } else {
          child.tokens.push_back(token_id);
          next.push_back(std::move(child));
        }
      }
    }
    std::sort(next.begin(), next.end(), better);
    if (next.size() > static_cast<std::size_t>(beam)) next.resize(beam);
    std::sort(done.begin(), done.end(), better);
    if (done.size() > static_cast<std::size_t>(beam)) done.resize(beam);
    // Stop once no active state can still beat the worst kept finished one.
    if (done.size() == static_cast<std::size_t>(beam) && !next.empty() &&
        next.front().logp <= done.back().logp) {
      break;
    }
    active = std::move(next);
  }

  std::sort(done.begin(), done.end(), better);

  // Deduplicate after normalization, keeping the higher-scoring variant.
  std::vector<GenerationCandidate> out;
  std::set<std::string> seen;
  for (const BeamState& state : done) {
    if (state.tokens.empty()) continue;  // an empty tail is not a candidate
    std::vector<std::string> words;
    words.reserve(state.tokens.size());
    for (int id : state.tokens) words.push_back(vocab_[id]);
    std::string tail = join(words);
    const std::string key = normalize_text(tail);
    if (!seen.insert(key).second) continue;
    GenerationCandidate c;
    c.tail = std::move(tail);
    c.logp = state.logp;
    c.perplexity =
        std::exp(-state.logp / static_cast<double>(state.tokens.size() + 1));  // + end marker
    out.push_back(std::move(c));
    if (out.size() == static_cast<std::size_t>(beam)) break;
  }
  return out;
}

double ReferenceNGramModel::perplexity(const Event& head, RelationType relation,
                                       const std::string& tail) const {
  const std::vector<std::string> head_tokens = feature_tokens(head.text);
  std::vector<std::string> tokens = feature_tokens(tail);
  if (tokens.empty()) throw DataError("perplexity of an empty tail is undefined");
  tokens.push_back(kEndMarker);
  double total = 0.0;
  std::string prev = "<s>";
  for (const std::string& tok : tokens) {
    total += token_logp(relation, head_tokens, prev, tok);
    prev = vocab_ids_.contains(tok) ? tok : kUnkMarker;
  }
  return std::exp(-total / static_cast<double>(tokens.size()));
}

std::vector<GenerationCandidate> enumerate_top_candidates(const ReferenceNGramModel& model,
                                                          const Event& head,
                                                          RelationType relation, int k) {
  // Uniform-cost search over token sequences: log-probabilities only decrease
  // along a path, so the first k completed sequences popped are the exact
  // top k.
  struct Node {
    double logp;
    std::vector<std::string> tokens;
    bool done;
  };
  auto cmp = [](const Node& a, const Node& b) {
    if (a.logp != b.logp) return a.logp < b.logp;
    return a.tokens > b.tokens;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> queue(cmp);
  queue.push(Node{0.0, {}, false});
  const std::vector<std::string> head_tokens = feature_tokens(head.text);

  std::vector<GenerationCandidate> out;
  std::set<std::string> seen;
  while (!queue.empty() && out.size() < static_cast<std::size_t>(k)) {
    Node node = queue.top();
    queue.pop();
    if (node.done) {
      if (node.tokens.empty()) continue;
      std::string tail = join(node.tokens);
      if (!seen.insert(normalize_text(tail)).second) continue;
      GenerationCandidate c;
      c.tail = std::move(tail);
      c.logp = node.logp;
      c.perplexity = std::exp(-node.logp / static_cast<double>(node.tokens.size() + 1));
      out.push_back(std::move(c));
      continue;
    }
    const std::string prev = node.tokens.empty() ? "<s>" : node.tokens.back();
    for (const std::string& token : model.vocabulary()) {
      if (token == "<unk>") continue;
      const double lp = model.token_logp(relation, head_tokens, prev, token);
      if (token == "</s>") {
        queue.push(Node{node.logp + lp, node.tokens, true});
      } else if (node.tokens.size() < kMaxTailTokens) {
        Node child{node.logp + lp, node.tokens, false};
        child.tokens.push_back(token);
        queue.push(std::move(child));
      }
    }
  }
  return out;
}

ExternalGenerator::ExternalGenerator(std::string command) : command_(std::move(command)) {}

std::vector<GenerationCandidate> ExternalGenerator::generate(const Event& head,
                                                             RelationType relation,
                                                             int beam) const {
  const std::string request =
      head.text + "\t" + to_string(relation) + "\t" + std::to_string(beam);
  const std::vector<std::string> lines = run_line_filter(command_, {request}, 1);
  Json j;
  try {
    j = Json::parse(lines.front());
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("external generator produced invalid JSON: ") + e.what());
  }
  std::vector<GenerationCandidate> out;
  for (const Json& jc : j.at("candidates")) {
    GenerationCandidate c;
    c.tail = jc.at("tail").get<std::string>();
    c.logp = jc.at("logp").get<double>();
    c.perplexity = jc.value("ppl", 1.0);
    out.push_back(std::move(c));
  }
  if (out.size() > static_cast<std::size_t>(beam)) out.resize(beam);
  return out;
}

double ExternalGenerator::perplexity(const Event& head, RelationType relation,
                                     const std::string& tail) const {
  for (const GenerationCandidate& c : generate(head, relation, 64)) {
    if (normalize_text(c.tail) == normalize_text(tail)) return c.perplexity;
  }
  throw DataError("external generator cannot score tail \"" + tail + "\"");
}

void save_candidates(const std::vector<GeneratedBeam>& beams, std::ostream& out,
                     std::string_view hash) {
  write_jsonl_meta(out, hash, "generate");
  for (const GeneratedBeam& beam : beams) {
    Json record;
    record["head"] = beam.prompt.head.text;
    record["polarity"] = to_string(beam.prompt.head.polarity);
    record["split"] = to_string(beam.prompt.head.split);
    record["source_head"] =
        beam.prompt.head.source_head ? Json(*beam.prompt.head.source_head) : Json();
    record["cue"] = beam.prompt.head.cue ? Json(*beam.prompt.head.cue) : Json();
    record["relation"] = to_string(beam.prompt.relation);
    Json candidates = Json::array();
    for (const GenerationCandidate& c : beam.candidates) {
      Json jc;
      jc["tail"] = c.tail;
      jc["logp"] = c.logp;
      jc["ppl"] = c.perplexity;
      candidates.push_back(std::move(jc));
    }
    record["candidates"] = std::move(candidates);
    out << record.dump() << '\n';
  }
}

std::vector<GeneratedBeam> load_candidates(const std::string& path) {
  std::vector<GeneratedBeam> beams;
  for_each_jsonl_file(path, [&](const Json& j, std::int64_t line) {
    GeneratedBeam beam;
    try {
      beam.prompt.head.text = j.at("head").get<std::string>();
      beam.prompt.head.polarity = parse_polarity(j.value("polarity", "affirmative"));
      beam.prompt.head.split = parse_split(j.value("split", "test"));
      if (j.contains("source_head") && !j["source_head"].is_null()) {
        beam.prompt.head.source_head = j["source_head"].get<std::string>();
      }
      if (j.contains("cue") && !j["cue"].is_null()) {
        beam.prompt.head.cue = j["cue"].get<std::string>();
      }
      beam.prompt.relation = parse_relation(j.at("relation").get<std::string>());
      for (const Json& jc : j.at("candidates")) {
        GenerationCandidate c;
        c.tail = jc.at("tail").get<std::string>();
        c.logp = jc.at("logp").get<double>();
        c.perplexity = jc.value("ppl", 1.0);
        beam.candidates.push_back(std::move(c));
      }
    } catch (const Json::exception& e) {
      throw FormatError(std::string("bad candidate record: ") + e.what(), line);
    }
    beams.push_back(std::move(beam));
  });
  return beams;
}

std::vector<Prompt> load_prompts(const std::string& path) {
  std::vector<Prompt> prompts;
  for_each_jsonl_file(path, [&](const Json& j, std::int64_t line) {
    Prompt p;
    try {
      p.head.text = j.at("head").get<std::string>();
      p.head.polarity = parse_polarity(j.value("polarity", "affirmative"));
      p.head.split = parse_split(j.value("split", "test"));
      if (j.contains("source_head") && !j["source_head"].is_null()) {
        p.head.source_head = j["source_head"].get<std::string>();
      }
      if (j.contains("cue") && !j["cue"].is_null()) {
        p.head.cue = j["cue"].get<std::string>();
      }
      p.relation = parse_relation(j.at("relation").get<std::string>());
    } catch (const Json::exception& e) {
      throw FormatError(std::string("bad prompt record: ") + e.what(), line);
    }
    prompts.push_back(std::move(p));
  });
  return prompts;
}

}  // namespace anionforge
