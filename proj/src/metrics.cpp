#include "hierbrack/metrics.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hierbrack/pseudoproj.hpp"
#include "hierbrack/ropecover.hpp"

namespace hierbrack {

void ScoreCounts::add(const DepGraph& gold, const DepGraph& pred) {
  const auto gh = gold.heads(), ph = pred.heads();
  const auto gr = gold.dependent_deprels(), pr = pred.dependent_deprels();
  bool all_heads = true, all_labels = true;
  for (int v = 1; v <= gold.size(); ++v) {
    ++tokens;
    const bool head_ok = gh[v] == ph[v];
    const bool label_ok = head_ok && gr[v] == pr[v];
    heads += head_ok;
    labeled += label_ok;
    all_heads = all_heads && head_ok;
    all_labels = all_labels && label_ok;
  }
  ++sentences;
  unlabeled_match += all_heads;
  labeled_match += all_labels;
}

ScoreCounts& ScoreCounts::operator+=(const ScoreCounts& o) {
  tokens += o.tokens;
  heads += o.heads;
  labeled += o.labeled;
  sentences += o.sentences;
  unlabeled_match += o.unlabeled_match;
  labeled_match += o.labeled_match;
  return *this;
}

Score ScoreCounts::finish() const {
  Score s;
  s.tokens = tokens;
  s.sentences = sentences;
  if (tokens > 0) {
    s.uas = static_cast<double>(heads) / static_cast<double>(tokens);
    s.las = static_cast<double>(labeled) / static_cast<double>(tokens);
  }
  if (sentences > 0) {
    s.um = static_cast<double>(unlabeled_match) / static_cast<double>(sentences);
    s.lm = static_cast<double>(labeled_match) / static_cast<double>(sentences);
  }
  return s;
}

Score score(std::span<const DepGraph> gold, std::span<const DepGraph> pred) {
  if (gold.size() != pred.size())
    throw ScoreMismatch("gold has " + std::to_string(gold.size()) +
                        " sentences, prediction has " + std::to_string(pred.size()));
  ScoreCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].size() != pred[i].size())
      throw ScoreMismatch("sentence " + std::to_string(i + 1) + ": gold has " +
                          std::to_string(gold[i].size()) + " tokens, prediction has " +
                          std::to_string(pred[i].size()));
    c.add(gold[i], pred[i]);
  }
  return c.finish();
}

namespace {

BatchConfig batch_config(const PipelineConfig& config) {
  BatchConfig b;
  b.scheme = config.scheme;
  b.pseudoprojective = config.pseudoprojective;
  b.lenient = true;
  return b;
}

std::vector<LabelSequence> encode_all(std::span<const DepGraph> trees,
                                      const PipelineConfig& config) {
  std::vector<EncodeOutcome> enc = encode_corpus(trees, batch_config(config), config.jobs);
  std::vector<LabelSequence> out;
  out.reserve(enc.size());
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (!enc[i].labels)
      throw std::runtime_error("sentence " + std::to_string(i + 1) + ": " + enc[i].error);
    out.push_back(enc[i].labels->without_root_label());
  }
  return out;
}

Score decode_and_score(std::span<const DepGraph> gold, std::span<const LabelSequence> seqs,
                       const PipelineConfig& config) {
  std::vector<DecodeOutcome> dec = decode_corpus(seqs, config.pseudoprojective, config.jobs);
  std::vector<DepGraph> pred;
  pred.reserve(dec.size());
  for (DecodeOutcome& d : dec) pred.push_back(std::move(d.graph));
  return score(gold, pred);
}

template <typename Key>
Key most_frequent(const std::unordered_map<Key, std::size_t>& counts) {
  // ties: smallest key, for determinism
  const std::pair<const Key, std::size_t>* best = nullptr;
  for (const auto& kv : counts)
    if (!best || kv.second > best->second ||
        (kv.second == best->second && kv.first < best->first))
      best = &kv;
  return best ? best->first : Key{};
}

}  // namespace

Score theoretical_coverage(std::span<const DepGraph> treebank, const PipelineConfig& config) {
  const std::vector<LabelSequence> seqs = encode_all(treebank, config);
  return decode_and_score(treebank, seqs, config);
}

Score empirical_coverage(std::span<const DepGraph> train, std::span<const DepGraph> eval,
                         const PipelineConfig& config) {
  std::unordered_map<std::string, std::size_t> label_freq, rel_freq;
  for (const LabelSequence& ls : encode_all(train, config))
    for (int p = 1; p <= ls.size(); ++p) {
      ++label_freq[render_label(ls.labels[p])];
      ++rel_freq[ls.deprels[p]];
    }
  const Label fallback_label = parse_label(most_frequent(label_freq));
  const std::string fallback_rel = most_frequent(rel_freq);

  std::vector<LabelSequence> seqs = encode_all(eval, config);
  for (LabelSequence& ls : seqs)
    for (int p = 1; p <= ls.size(); ++p) {
      if (!label_freq.contains(render_label(ls.labels[p]))) ls.labels[p] = fallback_label;
      if (!rel_freq.contains(ls.deprels[p])) ls.deprels[p] = fallback_rel;
    }
  return decode_and_score(eval, seqs, config);
}

EncodingStats encoding_stats(std::span<const DepGraph> treebank, const PipelineConfig& config) {
  BatchConfig b = batch_config(config);
  b.lenient = false;
  const std::vector<EncodeOutcome> enc = encode_corpus(treebank, b, config.jobs);

  EncodingStats st;
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (!enc[i].labels) {
      ++st.skipped;
      continue;
    }
    const LabelSequence& ls = *enc[i].labels;
    ++st.trees;
    for (int p = 1; p <= ls.size(); ++p) ++st.label_counts[render_label(ls.labels[p])];
    ++st.index_trees[std::min<std::uint32_t>(ls.max_index(), 3)];
    const DepGraph& t = config.pseudoprojective ? projectivize(treebank[i]) : treebank[i];
    st.rope_thickness_max = std::max(st.rope_thickness_max, rope_thickness(t));
  }
  st.distinct_labels = st.label_counts.size();
  for (std::size_t k = 0; k < 4; ++k)
    st.index_histogram[k] =
        st.trees ? 100.0 * static_cast<double>(st.index_trees[k]) / static_cast<double>(st.trees)
                 : 0.0;
  return st;
}

int rope_thickness(const DepGraph& t) {
  const RopeCover cover = proper_rope_cover(t);
  std::vector<int> delta(static_cast<std::size_t>(t.size()) + 1, 0);
  for (const Arc& a : cover.structural) {
    ++delta[a.left()];
    --delta[a.right()];
  }
  int depth = 0, best = 0;
  for (int k = 0; k < t.size(); ++k) {
    depth += delta[k];
    best = std::max(best, depth);
  }
  return best;
}

}  // namespace hierbrack
