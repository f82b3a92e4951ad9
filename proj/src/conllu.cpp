#include "hierbrack/conllu.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace hierbrack {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(const std::string& s, int& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

class Builder {
 public:
  explicit Builder(std::vector<Sentence>& out) : out_(out) {}

  void comment(std::string line) { current_.comments.push_back(std::move(line)); }

  void verbatim(std::string line) {
    current_.verbatim.emplace_back(current_.tokens.size(), std::move(line));
    started_ = true;
  }

  void token(std::size_t lineno, ConlluColumns cols) {
    int id = 0;
    if (!parse_int(cols[0], id) ||
        id != static_cast<int>(current_.tokens.size()) + 1)
      throw ConlluParseError(lineno, "expected token id " +
                                         std::to_string(current_.tokens.size() + 1) +
                                         ", got '" + cols[0] + "'");
    int head = 0;
    if (!parse_int(cols[6], head))
      throw ConlluParseError(lineno, "HEAD column '" + cols[6] +
                                         "' is not an integer");
    heads_.push_back(head);
    head_lines_.push_back(lineno);
    current_.tokens.push_back(std::move(cols));
    started_ = true;
  }

  void finish() {
    if (!started_ && current_.comments.empty()) return;
    const int n = static_cast<int>(current_.tokens.size());
    std::vector<std::string> rels;
    std::string name = current_.id().empty()
                           ? "sentence " + std::to_string(out_.size() + 1)
                           : "sentence '" + current_.id() + "'";
    for (int k = 0; k < n; ++k) {
      if (heads_[k] < 0 || heads_[k] > n)
        throw ConlluStructureError(name + ": HEAD " + std::to_string(heads_[k]) +
                                   " of token " + std::to_string(k + 1) +
                                   " (line " + std::to_string(head_lines_[k]) +
                                   ") out of range 0.." + std::to_string(n));
      if (heads_[k] == k + 1)
        throw ConlluStructureError(name + ": token " + std::to_string(k + 1) +
                                   " is its own head");
      const std::string& rel = current_.tokens[k][7];
      rels.push_back(rel == "_" ? std::string() : rel);
    }
    current_.graph = DepGraph::from_heads(heads_, rels);
    out_.push_back(std::move(current_));
    current_ = Sentence{};
    heads_.clear();
    head_lines_.clear();
    started_ = false;
  }

 private:
  std::vector<Sentence>& out_;
  Sentence current_;
  std::vector<NodeId> heads_;
  std::vector<std::size_t> head_lines_;
  bool started_ = false;
};

bool is_range_or_empty_id(const std::string& id) {
  return id.find('-') != std::string::npos || id.find('.') != std::string::npos;
}

}  // namespace

std::string Sentence::id() const {
  static const std::string kPrefix = "# sent_id = ";
  for (const std::string& c : comments)
    if (c.rfind(kPrefix, 0) == 0) return c.substr(kPrefix.size());
  return {};
}

std::vector<Sentence> read_conllu(std::istream& in) {
  std::vector<Sentence> sentences;
  Builder builder(sentences);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      builder.finish();
      continue;
    }
    if (line[0] == '#') {
      builder.comment(line);
      continue;
    }
    auto fields = split_tabs(line);
    if (fields.size() != 10)
      throw ConlluParseError(lineno, "expected 10 tab-separated columns, got " +
                                         std::to_string(fields.size()));
    if (is_range_or_empty_id(fields[0])) {
      builder.verbatim(line);
      continue;
    }
    ConlluColumns cols;
    std::move(fields.begin(), fields.end(), cols.begin());
    builder.token(lineno, std::move(cols));
  }
  builder.finish();
  return sentences;
}

void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out) {
  for (const Sentence& s : sentences) {
    for (const std::string& c : s.comments) out << c << '\n';
    auto heads = s.graph.heads();
    auto rels = s.graph.dependent_deprels();
    std::size_t v = 0;
    for (std::size_t k = 0; k <= s.tokens.size(); ++k) {
      while (v < s.verbatim.size() && s.verbatim[v].first == k)
        out << s.verbatim[v++].second << '\n';
      if (k == s.tokens.size()) break;
      ConlluColumns cols = s.tokens[k];
      const NodeId node = static_cast<NodeId>(k + 1);
      if (node <= s.graph.size()) {
        cols[6] = heads[node] < 0 ? "_" : std::to_string(heads[node]);
        cols[7] = rels[node].empty() ? "_" : rels[node];
      }
      for (std::size_t c = 0; c < cols.size(); ++c)
        out << (c ? "\t" : "") << cols[c];
      out << '\n';
    }
    out << '\n';
  }
}

Sentence make_sentence(const DepGraph& g) {
  Sentence s;
  const auto heads = g.heads();
  const auto rels = g.dependent_deprels();
  for (int k = 1; k <= g.size(); ++k) {
    ConlluColumns cols;
    cols.fill("_");
    cols[0] = std::to_string(k);
    cols[1] = "w" + std::to_string(k);
    if (heads[k] >= 0) cols[6] = std::to_string(heads[k]);
    if (!rels[k].empty()) cols[7] = rels[k];
    s.tokens.push_back(std::move(cols));
  }
  s.graph = g;
  return s;
}

Sentence with_graph(Sentence s, DepGraph g) {
  s.graph = std::move(g);
  return s;
}

std::vector<DepGraph> graphs_of(const std::vector<Sentence>& sentences) {
  std::vector<DepGraph> out;
  out.reserve(sentences.size());
  for (const Sentence& s : sentences) out.push_back(s.graph);
  return out;
}

}  // namespace hierbrack
