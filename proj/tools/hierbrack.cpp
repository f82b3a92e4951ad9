// hierbrack: encode CoNLL-U trees as bracket labels and back, plus
// treebank statistics and coverage scores.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hierbrack/batch.hpp"
#include "hierbrack/conllu.hpp"
#include "hierbrack/label_tsv.hpp"
#include "hierbrack/metrics.hpp"
#include "hierbrack/pseudoproj.hpp"
#include "hierbrack/testkit.hpp"

namespace hb = hierbrack;

namespace {

struct Files {
  std::string input = "-";
  std::string output = "-";
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<hb::Sentence> load_conllu(const std::string& path) {
  Input in(path);
  return hb::read_conllu(in.get());
}

std::string sentence_name(const hb::Sentence& s, std::size_t ordinal) {
  const std::string id = s.id();
  return id.empty() ? "sentence " + std::to_string(ordinal + 1) : "sentence " + id;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * v);
  return buf;
}

std::string fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

hb::Scheme scheme_from(const std::string& name) {
  auto s = hb::parse_scheme(name);
  if (!s) throw CLI::ValidationError("--scheme", "unknown scheme " + name);
  return *s;
}

const std::vector<std::string> kSchemes = {"naive", "fourbit", "optimal", "optimal-np"};

int cmd_encode(const Files& f, const std::string& scheme, bool pseudo,
               std::optional<std::uint32_t> max_index, int jobs, bool emit_root) {
  const std::vector<hb::Sentence> sentences = load_conllu(f.input);
  const std::vector<hb::DepGraph> trees = hb::graphs_of(sentences);
  hb::BatchConfig config;
  config.scheme = scheme_from(scheme);
  config.pseudoprojective = pseudo;
  config.max_index = max_index;
  const std::vector<hb::EncodeOutcome> enc = hb::encode_corpus(trees, config, jobs);

  std::vector<hb::TaggedSentence> tagged;
  int failures = 0;
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (!enc[i].labels) {
      std::cerr << sentence_name(sentences[i], i) << ": " << enc[i].error << '\n';
      ++failures;
      continue;
    }
    hb::TaggedSentence t;
    t.forms.emplace_back();
    for (const hb::ConlluColumns& row : sentences[i].tokens) t.forms.push_back(row[1]);
    t.labels = *enc[i].labels;
    tagged.push_back(std::move(t));
  }
  Output out(f.output);
  hb::write_label_tsv(out.get(), tagged, emit_root);
  if (failures) std::cerr << failures << " of " << enc.size() << " sentences not encoded\n";
  return failures ? 1 : 0;
}

int cmd_decode(const Files& f, bool deproj, const std::string& diag_path, int jobs) {
  std::vector<hb::TaggedSentence> tagged;
  {
    Input in(f.input);
    tagged = hb::read_label_tsv(in.get());
  }
  std::vector<hb::LabelSequence> seqs;
  seqs.reserve(tagged.size());
  for (const hb::TaggedSentence& t : tagged) seqs.push_back(t.labels);
  std::vector<hb::DecodeOutcome> dec = hb::decode_corpus(seqs, deproj, jobs);

  std::vector<hb::Sentence> sentences;
  sentences.reserve(dec.size());
  for (std::size_t i = 0; i < dec.size(); ++i) {
    hb::Sentence s = hb::make_sentence(dec[i].graph);
    for (std::size_t k = 0; k < s.tokens.size(); ++k)
      if (!tagged[i].forms[k + 1].empty()) s.tokens[k][1] = tagged[i].forms[k + 1];
    sentences.push_back(std::move(s));
  }
  Output out(f.output);
  hb::write_conllu(sentences, out.get());

  if (!diag_path.empty()) {
    Output diag(diag_path);
    for (std::size_t i = 0; i < dec.size(); ++i) {
      for (const hb::Diagnostic& d : dec[i].diagnostics)
        diag.get() << i + 1 << '\t' << hb::format_diagnostic(d) << '\n';
      for (const std::string& u : dec[i].unresolved_lifts)
        diag.get() << i + 1 << "\t_\t_\tunresolved-lift\t" << u << '\n';
    }
  }
  return 0;
}

int cmd_stats(const Files& f, const std::string& scheme, bool pseudo, bool table, int jobs) {
  const std::vector<hb::DepGraph> trees = hb::graphs_of(load_conllu(f.input));
  hb::PipelineConfig config{scheme_from(scheme), pseudo, jobs};
  const hb::EncodingStats st = hb::encoding_stats(trees, config);
  std::size_t arcs = 0, nonprojective = 0;
  for (const hb::DepGraph& t : trees) {
    arcs += t.arc_count();
    nonprojective += hb::has_crossing_arcs(t);
  }
  char buf[256];
  Output out(f.output);
  std::ostream& os = out.get();
  if (table) {
    std::snprintf(buf, sizeof buf, "%-12s %8s %8s %8s %8s %8s %8s %8s %8s %8s\n", "scheme",
                  "trees", "nonproj", "skipped", "#labels", "idx0%", "idx1%", "idx2%",
                  "idx3+%", "thick");
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "%-12s %8zu %8zu %8zu %8zu %8.2f %8.2f %8.2f %8.2f %8d\n",
                  (scheme + (pseudo ? "+" : "")).c_str(), trees.size(), nonprojective,
                  st.skipped, st.distinct_labels, st.index_histogram[0],
                  st.index_histogram[1], st.index_histogram[2], st.index_histogram[3],
                  st.rope_thickness_max);
    os << buf;
    return 0;
  }
  os << "scheme=" << scheme << (pseudo ? "+" : "") << '\n'
     << "sentences=" << trees.size() << '\n'
     << "arcs=" << arcs << '\n'
     << "nonprojective=" << nonprojective << '\n'
     << "encoded=" << st.trees << '\n'
     << "skipped=" << st.skipped << '\n'
     << "labels=" << st.distinct_labels << '\n';
  const char* names[] = {"index0", "index1", "index2", "index3plus"};
  for (int k = 0; k < 4; ++k) {
    std::snprintf(buf, sizeof buf, "%s=%.2f\n", names[k], st.index_histogram[k]);
    os << buf;
  }
  os << "rope_thickness=" << st.rope_thickness_max << '\n';
  return 0;
}

void print_score(std::ostream& os, const hb::Score& s, bool as_percent) {
  auto fmt = as_percent ? percent : fraction;
  os << "uas=" << fmt(s.uas) << '\n'
     << "las=" << fmt(s.las) << '\n'
     << "um=" << fmt(s.um) << '\n'
     << "lm=" << fmt(s.lm) << '\n'
     << "tokens=" << s.tokens << '\n'
     << "sentences=" << s.sentences << '\n';
}

int cmd_eval(const std::string& gold, const std::string& pred, const std::string& output) {
  const auto g = hb::graphs_of(load_conllu(gold));
  const auto p = hb::graphs_of(load_conllu(pred));
  Output out(output);
  print_score(out.get(), hb::score(g, p), false);
  return 0;
}

int cmd_coverage(const std::string& train, const std::string& eval, const std::string& scheme,
                 bool pseudo, bool empirical, int jobs, const std::string& output) {
  hb::PipelineConfig config{scheme_from(scheme), pseudo, jobs};
  const auto e = hb::graphs_of(load_conllu(eval));
  hb::Score s;
  if (empirical) {
    if (train.empty()) throw CLI::ValidationError("--train", "required with --empirical");
    s = hb::empirical_coverage(hb::graphs_of(load_conllu(train)), e, config);
  } else {
    s = hb::theoretical_coverage(e, config);
  }
  Output out(output);
  print_score(out.get(), s, true);
  return 0;
}

int cmd_generate(const std::string& output, std::size_t count, int min_tokens, int max_tokens,
                 bool projective, bool crossing_only) {
  if (max_tokens < min_tokens) max_tokens = min_tokens;
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("HIERBRACK_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::vector<hb::Sentence> sentences;
  sentences.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = min_tokens + static_cast<int>(i % static_cast<std::size_t>(
                                                        max_tokens - min_tokens + 1));
    const std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + i;
    hb::DepGraph t = crossing_only && n >= 3 ? hb::random_nonprojective_tree(n, s)
                                             : hb::random_tree(n, s, !projective);
    std::vector<std::string> rels(t.arc_count());
    for (std::size_t k = 0; k < rels.size(); ++k)
      rels[k] = t.arcs()[k].head == 0 ? "root" : "dep";
    hb::Sentence sentence = hb::make_sentence(t.with_deprels(rels));
    sentence.comments.push_back("# sent_id = gen-" + std::to_string(i + 1));
    sentences.push_back(std::move(sentence));
  }
  Output out(output);
  hb::write_conllu(sentences, out.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical bracketing encodings for dependency trees"};
  app.require_subcommand(1);

  Files files;
  std::string scheme = "optimal-np";
  bool pseudo = false, deproj = false, emit_root = false, table = false, empirical = false;
  bool projective = false, crossing_only = false;
  std::optional<std::uint32_t> max_index;
  int jobs = 0;
  std::string diag_path, gold, pred, train, eval;
  std::size_t count = 100;
  int min_tokens = 10, max_tokens = 0;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", files.input, "Input file (- for stdin)");
    sub->add_option("-o,--output", files.output, "Output file (- for stdout)");
  };
  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", scheme, "Encoding scheme")
        ->check(CLI::IsMember(kSchemes))
        ->capture_default_str();
    sub->add_flag("--pseudoproj", pseudo, "Projectivize before encoding");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  };

  auto* enc = app.add_subcommand("encode", "CoNLL-U to label TSV");
  add_io(enc);
  add_scheme(enc);
  add_jobs(enc);
  enc->add_option("--max-index", max_index, "Reject sentences needing a larger index");
  enc->add_flag("--emit-root-label", emit_root, "Write the root's label as row 0");

  auto* dec = app.add_subcommand("decode", "Label TSV to CoNLL-U");
  add_io(dec);
  add_jobs(dec);
  dec->add_flag("--deproj", deproj, "Undo pseudo-projective lifting after decoding");
  dec->add_option("--diagnostics", diag_path, "Write decoder repairs to this file");

  auto* stats = app.add_subcommand("stats", "Label and index statistics of a treebank");
  add_io(stats);
  add_scheme(stats);
  add_jobs(stats);
  stats->add_flag("--table", table, "Print a table instead of key=value lines");

  auto* ev = app.add_subcommand("eval", "Attachment scores of a prediction");
  ev->add_option("--gold", gold, "Gold CoNLL-U")->required();
  ev->add_option("--pred", pred, "Predicted CoNLL-U")->required();
  ev->add_option("-o,--output", files.output, "Output file (- for stdout)");

  auto* cov = app.add_subcommand("coverage", "Scores of encode/decode round trips");
  add_scheme(cov);
  add_jobs(cov);
  cov->add_option("--eval", eval, "Treebank to encode and score")->required();
  cov->add_option("--train", train, "Training treebank (label inventory)");
  cov->add_flag("--empirical", empirical, "Replace labels unseen in --train");
  cov->add_option("-o,--output", files.output, "Output file (- for stdout)");

  auto* gen = app.add_subcommand("generate", "Random trees as CoNLL-U (seed: HIERBRACK_SEED)");
  gen->add_option("-o,--output", files.output, "Output file (- for stdout)");
  gen->add_option("-n,--count", count, "Number of sentences");
  gen->add_option("--tokens", min_tokens, "Tokens per sentence (minimum)")->check(CLI::PositiveNumber);
  gen->add_option("--max-tokens", max_tokens, "Cycle lengths up to this many tokens");
  gen->add_flag("--projective", projective, "Only projective trees");
  gen->add_flag("--crossing", crossing_only, "Only trees with crossing arcs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) return cmd_encode(files, scheme, pseudo, max_index, jobs, emit_root);
    if (*dec) return cmd_decode(files, deproj, diag_path, jobs);
    if (*stats) return cmd_stats(files, scheme, pseudo, table, jobs);
    if (*ev) return cmd_eval(gold, pred, files.output);
    if (*cov) return cmd_coverage(train, eval, scheme, pseudo, empirical, jobs, files.output);
    if (*gen)
      return cmd_generate(files.output, count, min_tokens, max_tokens, projective,
                          crossing_only);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "hierbrack: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
