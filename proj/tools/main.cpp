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
//
// anion-forge: negated-event construction, contrastive dataset building,
// discriminator training/application, generation, and evaluation, as one
// pipeline or as individual subcommands.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anionforge/contrast.hpp"
#include "anionforge/discriminator.hpp"
#include "anionforge/error.hpp"
#include "anionforge/generator.hpp"
#include "anionforge/io.hpp"
#include "anionforge/kg.hpp"
#include "anionforge/log.hpp"
#include "anionforge/metrics.hpp"
#include "anionforge/negation.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/text.hpp"

namespace af = anionforge;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonArgs {
  std::string kg_path;
  std::string anion_path;
  std::string cues_path;
  std::string labels_path;
  std::string out_path;
  std::string format = "jsonl";
  std::uint64_t seed = 0;
  int beam = 10;
  double threshold = 0.7;
  std::int64_t permutations = 10000;
  double alpha = 0.05;
  double smoothing = 0.1;
  double learning_rate = 0.1;
  int epochs = 5;
  std::size_t sample_per_cue = 0;
  bool contractions = false;
  std::string external_scorer;
  std::string external_generator;
  bool force = false;
};

af::KgFormat format_of(const CommonArgs& args) { return af::parse_kg_format(args.format); }

std::vector<af::CueLexiconEntry> cues_of(const CommonArgs& args) {
  if (args.cues_path.empty()) return af::default_cue_lexicon();
  return af::load_cue_lexicon(args.cues_path);
}

af::Json negate_config_json(const CommonArgs& args) {
  af::Json j;
  j["command"] = "negate";
  j["kg"] = args.kg_path;
  j["cues"] = args.cues_path;
  j["seed"] = args.seed;
  j["sample_per_cue"] = args.sample_per_cue;
  j["contractions"] = args.contractions;
  return j;
}

void write_negations(const std::vector<af::NegationResult>& results,
                     const af::BatchNegateReport& report, const std::string& out_path,
                     const std::string& report_path, const std::string& hash) {
  std::ofstream out = af::open_output(out_path);
  af::write_jsonl_meta(out, hash, "negate");
  for (const af::NegationResult& r : results) {
    af::Json record;
    record["text"] = r.event.text;
    record["polarity"] = af::to_string(r.event.polarity);
    record["source_head"] = *r.event.source_head;
    record["split"] = af::to_string(r.event.split);
    record["cue"] = r.applied_cue;
    out << record.dump() << '\n';
  }
  if (report_path.empty()) return;
  std::ofstream rep = af::open_output(report_path);
  af::write_jsonl_meta(rep, hash, "negate-report");
  for (const auto& [cue, produced] : report.produced) {
    af::Json record;
    record["cue"] = cue;
    record["produced"] = produced;
    af::Json rejections = af::Json::object();
    if (auto it = report.rejections.find(cue); it != report.rejections.end()) {
      for (const auto& [reason, count] : it->second) rejections[reason] = count;
    }
    record["rejections"] = std::move(rejections);
    rep << record.dump() << '\n';
  }
}

int run_negate(const CommonArgs& args, const std::string& report_path) {
  const af::KnowledgeGraph graph = af::load_kg(args.kg_path, format_of(args));
  af::BatchNegateOptions options;
  options.negation.contractions = args.contractions;
  options.sample_per_cue = args.sample_per_cue;
  af::BatchNegateReport report;
  const std::vector<af::NegationResult> results =
      af::batch_negate(graph, cues_of(args), args.seed, options, &report);
  write_negations(results, report, args.out_path,
                  report_path.empty() ? args.out_path + ".report.jsonl" : report_path,
                  af::config_hash(negate_config_json(args)));
  std::cerr << "negate: " << results.size() << " events from " << report.events_considered
            << " heads\n";
  return 0;
}

int run_contrast(const CommonArgs& args, const std::string& report_path) {
  const af::KnowledgeGraph kg = af::load_kg(args.kg_path, format_of(args));
  const af::KnowledgeGraph anion = af::load_kg(args.anion_path, format_of(args));
  af::PairReport pair_report;
  const std::vector<af::ContrastPair> pairs = af::pair_events_all(kg, anion, &pair_report);
  af::DatasetReport dataset_report;
  const std::vector<af::LabeledSample> samples =
      af::build_discriminator_dataset(pairs, args.seed, &dataset_report);

  af::Json config;
  config["command"] = "contrast";
  config["kg"] = args.kg_path;
  config["anion"] = args.anion_path;
  config["seed"] = args.seed;
  const std::string hash = af::config_hash(config);

  std::ofstream out = af::open_output(args.out_path);
  af::save_dataset(samples, out, hash);

  if (!report_path.empty()) {
    std::ofstream rep = af::open_output(report_path);
    af::write_jsonl_meta(rep, hash, "contrast-report");
    af::Json record;
    record["pairs_emitted"] = pair_report.pairs_emitted;
    record["unresolved_source"] = pair_report.unresolved_source;
    record["empty_side"] = pair_report.empty_side;
    record["pairs_used"] = dataset_report.pairs_used;
    record["pairs_without_contrast"] = dataset_report.pairs_without_contrast;
    record["positive_candidates"] = dataset_report.positive_candidates;
    record["negative_candidates"] = dataset_report.negative_candidates;
    rep << record.dump() << '\n';
  }
  std::cerr << "contrast: " << samples.size() << " samples from " << pair_report.pairs_emitted
            << " pairs\n";
  return 0;
}

std::vector<af::LabeledSample> samples_from_dataset(const std::string& path) {
  std::vector<af::LabeledSample> samples;
  for (const af::DatasetRecord& r : af::load_dataset(path)) {
    af::LabeledSample s;
    s.sentence = r.sentence;
    s.label = r.label;
    s.origin = r.origin == "kg_positive" ? af::SampleOrigin::kKgPositive
                                         : af::SampleOrigin::kSwappedNegative;
    samples.push_back(std::move(s));
  }
  return samples;
}

int run_disc_train(const CommonArgs& args, const std::string& data_path) {
  const std::vector<af::LabeledSample> samples = samples_from_dataset(data_path);
  af::TrainOptions options;
  options.epochs = args.epochs;
  options.learning_rate = args.learning_rate;
  af::TrainStats stats;
  const af::ReferenceLinearModel model = af::train_reference(samples, options, args.seed, &stats);

  af::Json config;
  config["command"] = "disc-train";
  config["data"] = data_path;
  config["data_hash"] = af::read_config_hash(data_path).value_or("");
  config["epochs"] = args.epochs;
  config["learning_rate"] = args.learning_rate;
  config["seed"] = args.seed;
  model.save(args.out_path, af::config_hash(config));
  std::cerr << "disc-train: loss=" << stats.final_loss << " acc=" << stats.train_accuracy
            << " on " << samples.size() << " samples\n";
  return 0;
}

int run_generate(const CommonArgs& args, const std::string& prompts_path) {
  af::KnowledgeGraph graph = af::load_kg(args.kg_path, format_of(args));
  if (!args.anion_path.empty()) {
    for (const af::KnowledgeTuple& t : af::load_kg(args.anion_path, format_of(args)).tuples()) {
      graph.add(t);
    }
  }
  const std::vector<af::Prompt> prompts = af::load_prompts(prompts_path);

  std::unique_ptr<af::GeneratorModel> model;
  if (!args.external_generator.empty()) {
    model = std::make_unique<af::ExternalGenerator>(args.external_generator);
  } else {
    af::ReferenceNGramModel::Options options;
    options.smoothing = args.smoothing;
    model = std::make_unique<af::ReferenceNGramModel>(
        af::ReferenceNGramModel::train(graph, options));
  }

  std::vector<af::GeneratedBeam> beams;
  for (const af::Prompt& p : prompts) {
    af::GeneratedBeam beam;
    beam.prompt = p;
    beam.candidates = model->generate(p.head, p.relation, args.beam);
    beams.push_back(std::move(beam));
  }

  af::Json config;
  config["command"] = "generate";
  config["kg"] = args.kg_path;
  config["anion"] = args.anion_path;
  config["prompts"] = prompts_path;
  config["beam"] = args.beam;
  config["smoothing"] = args.smoothing;
  config["external_generator"] = args.external_generator;
  std::ofstream out = af::open_output(args.out_path);
  af::save_candidates(beams, out, af::config_hash(config));
  std::cerr << "generate: " << beams.size() << " prompts, beam " << args.beam << "\n";
  return 0;
}

int run_disc_apply(const CommonArgs& args, const std::string& model_path,
                   const std::string& candidates_path, bool threshold_given) {
  const std::vector<af::GeneratedBeam> beams = af::load_candidates(candidates_path);

  double threshold = args.threshold;
  std::unique_ptr<af::DiscriminatorModel> model;
  if (!args.external_scorer.empty()) {
    model = std::make_unique<af::ExternalScorer>(args.external_scorer);
  } else {
    auto reference =
        std::make_unique<af::ReferenceLinearModel>(af::ReferenceLinearModel::load(model_path));
    if (!threshold_given) threshold = reference->threshold();
    model = std::move(reference);
  }

  std::vector<af::PartitionResult> partitions;
  for (const af::GeneratedBeam& beam : beams) {
    if (beam.candidates.empty()) continue;
    partitions.push_back(af::partition(*model, beam.prompt.head, beam.prompt.relation,
                                       beam.candidates, threshold));
  }

  af::Json config;
  config["command"] = "disc-apply";
  config["model"] = model_path;
  config["candidates"] = candidates_path;
  config["candidates_hash"] = af::read_config_hash(candidates_path).value_or("");
  config["threshold"] = threshold;
  config["external_scorer"] = args.external_scorer;
  std::ofstream out = af::open_output(args.out_path);
  af::save_partitions(partitions, out, af::config_hash(config));
  std::cerr << "disc-apply: partitioned " << partitions.size() << " beams at threshold "
            << threshold << "\n";
  return 0;
}

int run_partition(const CommonArgs& args, const std::string& partitions_path) {
  // Re-threshold an existing partition artifact using its stored probabilities.
  std::vector<af::PartitionResult> partitions = af::load_partitions(partitions_path);
  for (af::PartitionResult& p : partitions) {
    p.threshold = args.threshold;
    p.valid.clear();
    p.invalid.clear();
    for (const af::ScoredCandidate& c : p.all) {
      (c.probability >= args.threshold ? p.valid : p.invalid).push_back(c);
    }
  }
  af::Json config;
  config["command"] = "partition";
  config["partitions"] = partitions_path;
  config["partitions_hash"] = af::read_config_hash(partitions_path).value_or("");
  config["threshold"] = args.threshold;
  std::ofstream out = af::open_output(args.out_path);
  af::save_partitions(partitions, out, af::config_hash(config));
  std::cerr << "partition: re-thresholded " << partitions.size() << " beams\n";
  return 0;
}

int run_eval(const CommonArgs& args, const std::string& partitions_path,
             const std::string& refs_path) {
  // Artifacts produced under different configurations do not mix silently.
  const std::optional<std::string> partitions_hash = af::read_config_hash(partitions_path);
  const std::optional<std::string> labels_hash =
      args.labels_path.empty() ? std::nullopt : af::read_config_hash(args.labels_path);
  if (!args.force && partitions_hash && labels_hash && *partitions_hash != *labels_hash) {
    throw af::DataError("config hash mismatch between " + partitions_path + " and " +
                        args.labels_path + " (use --force to override)");
  }

  const std::vector<af::PartitionResult> partitions = af::load_partitions(partitions_path);
  const af::LabelSource labels = af::LabelSource::from_file(args.labels_path);

  af::KnowledgeGraph refs;
  af::EvalConfig config;
  config.permutations = args.permutations;
  config.alpha = args.alpha;
  config.seed = args.seed;
  if (!refs_path.empty()) {
    refs = af::load_kg(refs_path, format_of(args));
    config.references = &refs;
  }

  const af::MetricReport report = af::evaluate_run(partitions, labels, config);

  af::Json config_json;
  config_json["command"] = "eval";
  config_json["partitions"] = partitions_path;
  config_json["partitions_hash"] = partitions_hash.value_or("");
  config_json["labels"] = args.labels_path;
  config_json["permutations"] = args.permutations;
  config_json["alpha"] = args.alpha;
  config_json["seed"] = args.seed;

  af::Json out_json = report.to_json();
  out_json["config_hash"] = af::config_hash(config_json);
  if (!args.out_path.empty()) {
    std::ofstream out = af::open_output(args.out_path);
    out << out_json.dump(2) << '\n';
  }
  std::cout << report.to_table();
  return 0;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

struct PipelineConfig {
  CommonArgs args;
  std::string out_dir = "pipeline_out";
};

// Returns true when the file provided a seed.
bool apply_config_file(const std::string& path, PipelineConfig* config) {
  std::ifstream in = af::open_input(path);
  af::Json j;
  try {
    in >> j;
  } catch (const af::Json::parse_error& e) {
    throw af::DataError("invalid config " + path + ": " + e.what());
  }
  CommonArgs& a = config->args;
  a.kg_path = j.value("kg", a.kg_path);
  a.anion_path = j.value("anion", a.anion_path);
  a.cues_path = j.value("cues", a.cues_path);
  a.labels_path = j.value("labels", a.labels_path);
  if (j.contains("seed")) a.seed = j["seed"].get<std::uint64_t>();
  a.beam = j.value("beam", a.beam);
  a.threshold = j.value("threshold", a.threshold);
  a.permutations = j.value("permutations", a.permutations);
  a.alpha = j.value("alpha", a.alpha);
  a.smoothing = j.value("smoothing", a.smoothing);
  a.learning_rate = j.value("learning_rate", a.learning_rate);
  a.epochs = j.value("epochs", a.epochs);
  a.sample_per_cue = j.value("sample_per_cue", a.sample_per_cue);
  a.contractions = j.value("contractions", a.contractions);
  a.external_scorer = j.value("external_scorer", a.external_scorer);
  a.external_generator = j.value("external_generator", a.external_generator);
  config->out_dir = j.value("out_dir", config->out_dir);
  if (a.threshold < 0.0 || a.threshold > 1.0) {
    throw af::DataError("config threshold must be in [0,1]");
  }
  return j.contains("seed");
}

af::Json pipeline_config_json(const PipelineConfig& config) {
  const CommonArgs& a = config.args;
  af::Json j;
  j["command"] = "pipeline";
  j["kg"] = a.kg_path;
  j["anion"] = a.anion_path;
  j["cues"] = a.cues_path;
  j["labels"] = a.labels_path;
  j["seed"] = a.seed;
  j["beam"] = a.beam;
  j["threshold"] = a.threshold;
  j["permutations"] = a.permutations;
  j["alpha"] = a.alpha;
  j["smoothing"] = a.smoothing;
  j["learning_rate"] = a.learning_rate;
  j["epochs"] = a.epochs;
  j["sample_per_cue"] = a.sample_per_cue;
  j["contractions"] = a.contractions;
  j["external_scorer"] = a.external_scorer;
  j["external_generator"] = a.external_generator;
  // The output directory does not shape artifact content, so it stays out
  // of the hash; reruns into different directories compare byte-identical.
  return j;
}

int run_pipeline(const PipelineConfig& config) {
  const CommonArgs& a = config.args;
  if (a.kg_path.empty() || a.anion_path.empty()) {
    throw af::DataError("pipeline needs --kg and --anion");
  }
  fs::create_directories(config.out_dir);
  const std::string hash = af::config_hash(pipeline_config_json(config));
  auto path_of = [&](const char* name) { return (fs::path(config.out_dir) / name).string(); };

  const af::KnowledgeGraph kg = af::load_kg(a.kg_path, format_of(a));
  const af::KnowledgeGraph anion = af::load_kg(a.anion_path, format_of(a));

  // 1. Negation events from the affirmative graph.
  af::BatchNegateOptions negate_options;
  negate_options.negation.contractions = a.contractions;
  negate_options.sample_per_cue = a.sample_per_cue;
  af::BatchNegateReport negate_report;
  const std::vector<af::NegationResult> negations =
      af::batch_negate(kg, cues_of(a), a.seed, negate_options, &negate_report);
  write_negations(negations, negate_report, path_of("negations.jsonl"),
                  path_of("negation_report.jsonl"), hash);

  // 2. Contrastive dataset from paired graphs.
  af::PairReport pair_report;
  const std::vector<af::ContrastPair> pairs = af::pair_events_all(kg, anion, &pair_report);
  af::DatasetReport dataset_report;
  const std::vector<af::LabeledSample> samples =
      af::build_discriminator_dataset(pairs, a.seed, &dataset_report);
  {
    std::ofstream out = af::open_output(path_of("contrast_dataset.jsonl"));
    af::save_dataset(samples, out, hash);
  }

  // 3. Discriminator.
  af::TrainOptions train_options;
  train_options.epochs = a.epochs;
  train_options.learning_rate = a.learning_rate;
  af::TrainStats train_stats;
  const af::ReferenceLinearModel discriminator =
      af::train_reference(samples, train_options, a.seed, &train_stats);
  discriminator.save(path_of("discriminator.json"), hash);

  // 4. Generation for opposed test-split prompts.
  af::KnowledgeGraph train_graph;
  for (const af::KnowledgeGraph* g : {&kg, &anion}) {
    for (const af::KnowledgeTuple& t : g->tuples()) {
      if (t.head.split == af::Split::kTrain) train_graph.add(t);
    }
  }
  std::unique_ptr<af::GeneratorModel> generator;
  if (!a.external_generator.empty()) {
    generator = std::make_unique<af::ExternalGenerator>(a.external_generator);
  } else {
    af::ReferenceNGramModel::Options gen_options;
    gen_options.smoothing = a.smoothing;
    generator = std::make_unique<af::ReferenceNGramModel>(
        af::ReferenceNGramModel::train(train_graph, gen_options));
  }
  std::vector<af::GeneratedBeam> beams;
  for (const af::Event& head : anion.heads()) {
    if (head.split != af::Split::kTest) continue;
    for (af::RelationType r : af::all_relations()) {
      if (anion.tails(head.text, r).empty()) continue;
      af::GeneratedBeam beam;
      beam.prompt = af::Prompt{head, r};
      beam.candidates = generator->generate(head, r, a.beam);
      if (!beam.candidates.empty()) beams.push_back(std::move(beam));
    }
  }
  {
    std::ofstream out = af::open_output(path_of("candidates.jsonl"));
    af::save_candidates(beams, out, hash);
  }

  // 5. Partition.
  std::unique_ptr<af::DiscriminatorModel> scorer;
  if (!a.external_scorer.empty()) {
    scorer = std::make_unique<af::ExternalScorer>(a.external_scorer);
  } else {
    scorer = std::make_unique<af::ReferenceLinearModel>(discriminator);
  }
  std::vector<af::PartitionResult> partitions;
  for (const af::GeneratedBeam& beam : beams) {
    partitions.push_back(af::partition(*scorer, beam.prompt.head, beam.prompt.relation,
                                       beam.candidates, a.threshold));
  }
  {
    std::ofstream out = af::open_output(path_of("partitions.jsonl"));
    af::save_partitions(partitions, out, hash);
  }

  // 6. Evaluation, when labels are available.
  if (!a.labels_path.empty()) {
    const af::LabelSource labels = af::LabelSource::from_file(a.labels_path);
    af::EvalConfig eval_config;
    eval_config.permutations = a.permutations;
    eval_config.alpha = a.alpha;
    eval_config.seed = a.seed;
    eval_config.references = &anion;
    const af::MetricReport report = af::evaluate_run(partitions, labels, eval_config);
    af::Json out_json = report.to_json();
    out_json["config_hash"] = hash;
    std::ofstream out = af::open_output(path_of("report.json"));
    out << out_json.dump(2) << '\n';
    std::cout << report.to_table();
  }

  std::cerr << "pipeline: wrote artifacts to " << config.out_dir << " (config " << hash
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negated-event knowledge tooling"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonArgs args;
  std::string report_path;
  std::string data_path;
  std::string model_path;
  std::string candidates_path;
  std::string partitions_path;
  std::string prompts_path;
  std::string refs_path;
  std::string config_path;
  PipelineConfig pipeline_config;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "Input/output format")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
  };

  CLI::App* negate = app.add_subcommand("negate", "Derive negated events from a KG");
  negate->add_option("--kg", args.kg_path, "Affirmative KG")->required();
  negate->add_option("--cues", args.cues_path, "Cue lexicon TSV (default: shipped)");
  negate->add_option("--seed", args.seed, "Random seed")->required();
  negate->add_option("--sample-per-cue", args.sample_per_cue,
                     "Keep at most this many events per cue (0 = all)");
  negate->add_flag("--contractions", args.contractions, "Emit contracted forms");
  negate->add_option("--out", args.out_path, "Output events JSONL")->required();
  negate->add_option("--report", report_path, "Rejection report JSONL");
  add_format(negate);

  CLI::App* contrast = app.add_subcommand("contrast", "Build the contrastive dataset");
  contrast->add_option("--kg", args.kg_path, "Affirmative KG")->required();
  contrast->add_option("--anion", args.anion_path, "Opposed KG")->required();
  contrast->add_option("--seed", args.seed, "Random seed")->required();
  contrast->add_option("--out", args.out_path, "Dataset JSONL")->required();
  contrast->add_option("--report", report_path, "Pairing report JSONL");
  add_format(contrast);

  CLI::App* disc_train = app.add_subcommand("disc-train", "Train the reference discriminator");
  disc_train->add_option("--data", data_path, "Dataset JSONL")->required();
  disc_train->add_option("--seed", args.seed, "Random seed")->required();
  disc_train->add_option("--epochs", args.epochs, "Training epochs");
  disc_train->add_option("--lr", args.learning_rate, "Learning rate");
  disc_train->add_option("--out", args.out_path, "Model file")->required();

  CLI::App* generate = app.add_subcommand("generate", "Generate candidate inferences");
  generate->add_option("--kg", args.kg_path, "Training KG")->required();
  generate->add_option("--anion", args.anion_path, "Additional training KG");
  generate->add_option("--prompts", prompts_path, "Prompts JSONL (head, relation)")->required();
  generate->add_option("--beam", args.beam, "Beam size")->check(CLI::PositiveNumber);
  generate->add_option("--smoothing", args.smoothing, "Additive smoothing")
      ->check(CLI::PositiveNumber);
  generate->add_option("--external-generator", args.external_generator,
                       "External generator command");
  generate->add_option("--out", args.out_path, "Candidates JSONL")->required();
  add_format(generate);

  CLI::App* disc_apply = app.add_subcommand("disc-apply", "Score and partition candidates");
  disc_apply->add_option("--model", model_path, "Discriminator model file");
  disc_apply->add_option("--candidates", candidates_path, "Candidates JSONL")->required();
  disc_apply->add_option("--threshold", args.threshold, "Validity threshold")
      ->check(CLI::Range(0.0, 1.0));
  disc_apply->add_option("--external-scorer", args.external_scorer, "External scorer command");
  disc_apply->add_option("--out", args.out_path, "Partitions JSONL")->required();

  CLI::App* partition = app.add_subcommand("partition", "Re-threshold a partition artifact");
  partition->add_option("--partitions", partitions_path, "Partitions JSONL")->required();
  partition->add_option("--threshold", args.threshold, "Validity threshold")
      ->check(CLI::Range(0.0, 1.0));
  partition->add_option("--out", args.out_path, "Partitions JSONL")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a partitioned run");
  eval->add_option("--partitions", partitions_path, "Partitions JSONL")->required();
  eval->add_option("--labels", args.labels_path, "Label TSV")->required();
  eval->add_option("--kg", refs_path, "Reference KG for BLEU-2");
  eval->add_option("--permutations", args.permutations, "Permutation count")
      ->check(CLI::PositiveNumber);
  eval->add_option("--alpha", args.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  eval->add_option("--seed", args.seed, "Random seed");
  eval->add_option("--out", args.out_path, "Report JSON");
  eval->add_flag("--force", args.force, "Ignore config hash mismatches");
  add_format(eval);

  CLI::App* pipeline = app.add_subcommand("pipeline", "Run every stage end to end");
  pipeline->add_option("--config", config_path, "Pipeline config JSON");
  pipeline->add_option("--kg", pipeline_config.args.kg_path, "Affirmative KG");
  pipeline->add_option("--anion", pipeline_config.args.anion_path, "Opposed KG");
  pipeline->add_option("--cues", pipeline_config.args.cues_path, "Cue lexicon TSV");
  pipeline->add_option("--labels", pipeline_config.args.labels_path, "Label TSV for eval");
  CLI::Option* pipeline_seed =
      pipeline->add_option("--seed", pipeline_config.args.seed, "Random seed");
  pipeline->add_option("--beam", pipeline_config.args.beam, "Beam size")
      ->check(CLI::PositiveNumber);
  pipeline->add_option("--threshold", pipeline_config.args.threshold, "Validity threshold")
      ->check(CLI::Range(0.0, 1.0));
  pipeline->add_option("--permutations", pipeline_config.args.permutations, "Permutation count")
      ->check(CLI::PositiveNumber);
  pipeline->add_option("--alpha", pipeline_config.args.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  pipeline->add_option("--out", pipeline_config.out_dir, "Output directory");
  pipeline->add_flag("--contractions", pipeline_config.args.contractions,
                     "Emit contracted forms");
  pipeline->add_option("--external-scorer", pipeline_config.args.external_scorer,
                       "External scorer command");
  pipeline->add_option("--external-generator", pipeline_config.args.external_generator,
                       "External generator command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return 1;
  }

  try {
    if (negate->parsed()) return run_negate(args, report_path);
    if (contrast->parsed()) return run_contrast(args, report_path);
    if (disc_train->parsed()) return run_disc_train(args, data_path);
    if (generate->parsed()) return run_generate(args, prompts_path);
    if (disc_apply->parsed()) {
      return run_disc_apply(args, model_path, candidates_path,
                            disc_apply->count("--threshold") > 0);
    }
    if (partition->parsed()) return run_partition(args, partitions_path);
    if (eval->parsed()) return run_eval(args, partitions_path, refs_path);
    if (pipeline->parsed()) {
      bool have_seed = pipeline_seed->count() > 0;
      if (!config_path.empty()) {
        // Defaults < config file < explicit flags.
        PipelineConfig merged;
        have_seed = apply_config_file(config_path, &merged) || have_seed;
        const PipelineConfig& flags = pipeline_config;
        auto take = [&](const char* name, auto member) {
          if (pipeline->count(name) > 0) merged.args.*member = flags.args.*member;
        };
        take("--kg", &CommonArgs::kg_path);
        take("--anion", &CommonArgs::anion_path);
        take("--cues", &CommonArgs::cues_path);
        take("--labels", &CommonArgs::labels_path);
        take("--seed", &CommonArgs::seed);
        take("--beam", &CommonArgs::beam);
        take("--threshold", &CommonArgs::threshold);
        take("--permutations", &CommonArgs::permutations);
        take("--alpha", &CommonArgs::alpha);
        take("--contractions", &CommonArgs::contractions);
        take("--external-scorer", &CommonArgs::external_scorer);
        take("--external-generator", &CommonArgs::external_generator);
        if (pipeline->count("--out") > 0) merged.out_dir = flags.out_dir;
        pipeline_config = merged;
      }
      if (!have_seed) {
        std::cerr << "pipeline: --seed or a config file with \"seed\" is required\n";
        return 1;
      }
      return run_pipeline(pipeline_config);
    }
  } catch (const af::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
