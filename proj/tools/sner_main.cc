// tools/sner_main.cc

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"

#include "sner/corpus.h"
#include "sner/errorsim.h"
#include "sner/metrics.h"

namespace {

using namespace sner;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

EntitySchema ResolveSchema(const std::string &spec) {
  if (spec.empty() || spec == "wojood") return DefaultSchema();
  return LoadSchemaFile(spec);
}

NormalizationProfile ResolveProfile(const std::string &spec) {
  if (spec.empty() || spec == "default") return NormalizationProfile{};
  return LoadProfileFile(spec);
}

std::string ReadWholeStream(std::istream &in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------

struct EvaluateArgs {
  std::string ref_path, hyp_path, schema, profile, report_path;
  std::string format = "text";
  std::string cver_unit = "token";
  bool per_tag = false;
  unsigned jobs = 1;
  bool quiet = false;
};

int RunEvaluate(const EvaluateArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  ScoringOptions options;
  options.profile = ResolveProfile(args.profile);
  options.cver_unit =
      args.cver_unit == "span" ? CverUnit::kSpan : CverUnit::kToken;

  auto refs = ReadManifestFile(args.ref_path);
  if (refs.empty()) throw EmptyCorpus("reference manifest is empty");
  auto hyp_records = ReadManifestFile(args.hyp_path);
  std::unordered_map<std::string, std::string> hyps;
  for (auto &r : hyp_records) hyps.emplace(r.id, r.text);
  if (!args.quiet) {
    std::unordered_map<std::string, bool> ref_ids;
    for (const auto &ref : refs) ref_ids.emplace(ref.id, true);
    for (const auto &r : hyp_records)
      if (!ref_ids.count(r.id))
        std::cerr << "warning: hypothesis id not in reference set: " << r.id
                  << "\n";
  }

  std::vector<CorpusPair> pairs;
  pairs.reserve(refs.size());
  for (const auto &r : refs) {
    CorpusPair pair;
    pair.id = r.id;
    try {
      pair.ref = ParseInline(r.text, schema, ParseMode::kStrict);
    } catch (const MarkupError &e) {
      throw CorpusError("reference " + r.id + ": " + e.what());
    }
    auto it = hyps.find(r.id);
    if (it != hyps.end()) {
      try {
        pair.hyp = ParseInline(it->second, schema, ParseMode::kLenient);
      } catch (const MarkupError &e) {
        throw CorpusError("hypothesis " + r.id + ": " + e.what());
      }
    }
    pairs.push_back(std::move(pair));
  }

  // Scores land in a vector indexed by utterance, then merge in input
  // order, so the report is identical for any job count.
  std::vector<UtteranceScore> scores(pairs.size());
  unsigned jobs = std::max(1u, args.jobs);
  auto worker = [&](size_t begin, size_t end) {
    static const TaggedTranscript kEmptyHyp;
    for (size_t i = begin; i < end; ++i) {
      scores[i] = ScoreUtterance(pairs[i].id, pairs[i].ref,
                                 pairs[i].hyp ? *pairs[i].hyp : kEmptyHyp,
                                 options);
      scores[i].missing_hyp = !pairs[i].hyp.has_value();
    }
  };
  if (jobs == 1) {
    worker(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    size_t chunk = (pairs.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      size_t begin = std::min<size_t>(t * chunk, pairs.size());
      size_t end = std::min<size_t>(begin + chunk, pairs.size());
      if (begin < end) threads.emplace_back(worker, begin, end);
    }
    for (auto &th : threads) th.join();
  }

  MetricReport report;
  for (const auto &score : scores) report.Merge(score);

  ReportStyle style = args.format == "structured" ? ReportStyle::kStructured
                                                  : ReportStyle::kTextTable;
  WriteOutput(args.report_path, FormatReport(report, style, args.per_tag));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  std::string manifest, schema;
  std::string format = "text";
  bool bio = false;
};

int RunStats(const StatsArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  auto records = ReadManifestFile(args.manifest);
  CorpusStats stats = ComputeStats(records, schema, args.bio);
  if (args.format == "structured") {
    nlohmann::ordered_json j;
    j["utterances"] = stats.utterance_count;
    j["duration_seconds"] = stats.total_duration_s;
    j["duration_hmm"] = FormatDurationHMM(stats.total_duration_s);
    j["tokens"] = stats.token_count;
    j["tag_distribution"] = nlohmann::ordered_json::object();
    for (const auto &[key, count] : stats.tag_distribution)
      j["tag_distribution"][key] = count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Utterances: " << stats.utterance_count << "\n"
              << "Duration (h:mm): " << FormatDurationHMM(stats.total_duration_s)
              << "\n"
              << "Tokens: " << stats.token_count << "\n"
              << (args.bio ? "BIO tag distribution:" : "Entity distribution:")
              << "\n";
    for (const auto &[key, count] : stats.tag_distribution)
      std::cout << "  " << key << " " << count << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct FilterArgs {
  std::string in_path, out_path, schema;
  bool invert = false;
};

int RunFilter(const FilterArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  auto records = ReadManifestFile(args.in_path);
  auto kept = FilterEntities(records, schema, args.invert);
  if (args.out_path.empty() || args.out_path == "-")
    WriteManifest(kept, std::cout);
  else
    WriteManifestFile(kept, args.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::string manifest, schema;
  bool quiet = false;
};

int RunValidate(const ValidateArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  auto records = ReadManifestFile(args.manifest);
  size_t violations = 0;
  for (const auto &record : records) {
    try {
      ParseInline(record.text, schema, ParseMode::kStrict);
    } catch (const MarkupError &e) {
      ++violations;
      std::cerr << record.id << ": " << e.what() << "\n";
    }
  }
  if (!args.quiet)
    std::cout << records.size() << " utterances, " << violations
              << " BIO violations\n";
  return violations == 0 ? kExitOk : kExitData;
}

// ---------------------------------------------------------------------------

struct NormalizeArgs {
  std::string in_path, out_path, profile;
};

int RunNormalize(const NormalizeArgs &args) {
  NormalizationProfile profile = ResolveProfile(args.profile);
  std::ifstream file_in;
  if (!args.in_path.empty() && args.in_path != "-") {
    file_in.open(args.in_path);
    if (!file_in)
      throw std::runtime_error("cannot open input file: " + args.in_path);
  }
  std::istream &in = file_in.is_open() ? file_in : std::cin;
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out << NormalizeText(line, profile) << "\n";
  }
  WriteOutput(args.out_path, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ConvertArgs {
  std::string in_path, out_path, schema;
  std::string from = "jsonl";
  std::string to = "columns";
};

std::vector<UtteranceRecord> ReadColumnsDocument(std::istream &in,
                                                 const EntitySchema &schema) {
  // Blank-line-separated utterances; a "# <id>" comment line before a
  // block names it, otherwise ids are generated.
  std::vector<UtteranceRecord> records;
  std::string line, block, id;
  size_t counter = 0;
  auto flush = [&]() {
    if (block.empty()) return;
    TaggedTranscript t = FromColumns(block, schema);
    UtteranceRecord record;
    record.id = id.empty() ? "u" + std::to_string(++counter) : id;
    record.text = RenderInline(t);
    records.push_back(std::move(record));
    block.clear();
    id.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
    } else if (line[0] == '#') {
      auto begin = line.find_first_not_of("# \t");
      if (begin != std::string::npos) id = line.substr(begin);
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  return records;
}

int RunConvert(const ConvertArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  std::ifstream file_in;
  if (!args.in_path.empty() && args.in_path != "-") {
    file_in.open(args.in_path);
    if (!file_in)
      throw std::runtime_error("cannot open input file: " + args.in_path);
  }
  std::istream &in = file_in.is_open() ? file_in : std::cin;

  std::vector<UtteranceRecord> records;
  if (args.from == "jsonl") {
    records = ReadManifest(in);
  } else if (args.from == "tsv") {
    records = ReadTsv(in);
  } else if (args.from == "columns") {
    records = ReadColumnsDocument(in, schema);
  } else {
    throw CLI::ValidationError("--from must be jsonl, tsv, or columns");
  }

  std::ostringstream out;
  if (args.to == "jsonl") {
    WriteManifest(records, out);
  } else if (args.to == "tsv") {
    WriteTsv(records, out);
  } else if (args.to == "columns") {
    for (const auto &record : records) {
      TaggedTranscript t =
          ParseInline(record.text, schema, ParseMode::kLenient);
      out << "# " << record.id << "\n" << ToColumns(t) << "\n";
    }
  } else {
    throw CLI::ValidationError("--to must be jsonl, tsv, or columns");
  }
  WriteOutput(args.out_path, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string in_path, out_path, schema, vocab = "from-corpus";
  double p_sub = 0.0, p_del = 0.0, p_ins = 0.0, tag_noise = 0.0;
  uint64_t seed = 0;
};

int RunSimulate(const SimulateArgs &args) {
  EntitySchema schema = ResolveSchema(args.schema);
  auto records = ReadManifestFile(args.in_path);

  std::vector<TaggedTranscript> transcripts;
  transcripts.reserve(records.size());
  for (const auto &record : records)
    transcripts.push_back(
        ParseInline(record.text, schema, ParseMode::kLenient));

  ErrorModel model;
  model.p_sub = args.p_sub;
  model.p_del = args.p_del;
  model.p_ins = args.p_ins;
  model.tag_noise = args.tag_noise;
  model.seed = args.seed;
  if (args.tag_noise > 0.0) {
    for (const auto &token : schema.TagTokens())
      model.tag_pool.push_back(*schema.ParseTagToken(token));
  }
  if (args.vocab == "from-corpus") {
    for (const auto &t : transcripts)
      for (const auto &tok : t.tokens) model.vocabulary.push_back(tok.word);
    std::sort(model.vocabulary.begin(), model.vocabulary.end());
    model.vocabulary.erase(
        std::unique(model.vocabulary.begin(), model.vocabulary.end()),
        model.vocabulary.end());
  } else {
    std::ifstream vf(args.vocab);
    if (!vf)
      throw std::runtime_error("cannot open vocabulary file: " + args.vocab);
    std::string word;
    while (vf >> word) model.vocabulary.push_back(word);
  }

  std::vector<UtteranceRecord> out;
  out.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    ErrorModel per = model;
    per.seed = DeriveSeed(model.seed, records[i].id);
    UtteranceRecord record = records[i];
    record.text = RenderInline(Inject(transcripts[i], per));
    out.push_back(std::move(record));
  }
  if (args.out_path.empty() || args.out_path == "-")
    WriteManifest(out, std::cout);
  else
    WriteManifestFile(out, args.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Evaluation toolkit for NER-enriched speech transcripts"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto *evaluate = app.add_subcommand(
      "evaluate", "Score hypothesis transcripts against references");
  evaluate->add_option("--ref", ev.ref_path, "Reference manifest (JSONL)")
      ->required();
  evaluate->add_option("--hyp", ev.hyp_path, "Hypothesis manifest (JSONL)")
      ->required();
  evaluate->add_option("--schema", ev.schema, "Schema file or 'wojood'");
  evaluate->add_option("--profile", ev.profile,
                       "Normalization profile file or 'default'");
  evaluate->add_option("--report", ev.report_path, "Report output path");
  evaluate->add_option("--format", ev.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  evaluate->add_option("--cver-unit", ev.cver_unit, "token|span")
      ->check(CLI::IsMember({"token", "span"}));
  evaluate->add_flag("--per-tag", ev.per_tag, "Include the per-tag table");
  evaluate->add_option("--jobs", ev.jobs, "Parallel scoring threads");
  evaluate->add_flag("--quiet", ev.quiet, "Suppress warnings");

  StatsArgs st;
  auto *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--manifest", st.manifest, "Manifest (JSONL)")->required();
  stats->add_option("--schema", st.schema, "Schema file or 'wojood'");
  stats->add_flag("--bio", st.bio, "Count per BIO tag token, not per entity");
  stats->add_option("--format", st.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  FilterArgs fi;
  auto *filter =
      app.add_subcommand("filter", "Keep only utterances with entities");
  filter->add_option("--in", fi.in_path, "Input manifest")->required();
  filter->add_option("--out", fi.out_path, "Output manifest (default stdout)");
  filter->add_option("--schema", fi.schema, "Schema file or 'wojood'");
  filter->add_flag("--invert", fi.invert, "Keep entity-free utterances");

  ValidateArgs va;
  auto *validate =
      app.add_subcommand("validate", "Check BIO well-formedness of a manifest");
  validate->add_option("--manifest", va.manifest, "Manifest (JSONL)")
      ->required();
  validate->add_option("--schema", va.schema, "Schema file or 'wojood'");
  validate->add_flag("--quiet", va.quiet, "Suppress the summary line");

  NormalizeArgs no;
  auto *normalize =
      app.add_subcommand("normalize", "Normalize text lines (stdin/stdout)");
  normalize->add_option("--in", no.in_path, "Input file (default stdin)");
  normalize->add_option("--out", no.out_path, "Output file (default stdout)");
  normalize->add_option("--profile", no.profile,
                        "Normalization profile file or 'default'");

  ConvertArgs co;
  auto *convert =
      app.add_subcommand("convert", "Convert between manifest formats");
  convert->add_option("--in", co.in_path, "Input file (default stdin)");
  convert->add_option("--out", co.out_path, "Output file (default stdout)");
  convert->add_option("--from", co.from, "jsonl|tsv|columns")
      ->check(CLI::IsMember({"jsonl", "tsv", "columns"}));
  convert->add_option("--to", co.to, "jsonl|tsv|columns")
      ->check(CLI::IsMember({"jsonl", "tsv", "columns"}));
  convert->add_option("--schema", co.schema, "Schema file or 'wojood'");

  SimulateArgs si;
  auto *simulate =
      app.add_subcommand("simulate", "Inject seeded ASR-style errors");
  simulate->add_option("--in", si.in_path, "Input manifest")->required();
  simulate->add_option("--out", si.out_path, "Output manifest (default stdout)");
  simulate->add_option("--schema", si.schema, "Schema file or 'wojood'");
  simulate->add_option("--p-sub", si.p_sub, "Substitution probability");
  simulate->add_option("--p-del", si.p_del, "Deletion probability");
  simulate->add_option("--p-ins", si.p_ins, "Insertion probability");
  simulate->add_option("--tag-noise", si.tag_noise,
                       "Tag drop/re-type probability");
  simulate->add_option("--seed", si.seed, "RNG seed");
  simulate->add_option("--vocab", si.vocab,
                       "Vocabulary file or 'from-corpus'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (evaluate->parsed()) return RunEvaluate(ev);
    if (stats->parsed()) return RunStats(st);
    if (filter->parsed()) return RunFilter(fi);
    if (validate->parsed()) return RunValidate(va);
    if (normalize->parsed()) return RunNormalize(no);
    if (convert->parsed()) return RunConvert(co);
    if (simulate->parsed()) return RunSimulate(si);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
