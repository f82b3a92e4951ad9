#include "hierbrack/label_tsv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace hierbrack {

namespace {

std::string or_underscore(const std::string& s) { return s.empty() ? "_" : s; }
std::string from_underscore(const std::string& s) { return s == "_" ? "" : s; }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

}  // namespace

void write_label_tsv(std::ostream& out, const std::vector<TaggedSentence>& sentences,
                     bool emit_root_label) {
  for (const TaggedSentence& s : sentences) {
    const LabelSequence& ls = s.labels;
    const int first = emit_root_label && ls.has_root_label ? 0 : 1;
    for (int p = first; p <= ls.size(); ++p) {
      const std::string form =
          p == 0 ? "<ROOT>"
                 : (static_cast<std::size_t>(p) < s.forms.size() ? s.forms[p] : "");
      const std::string rel =
          p == 0 || static_cast<std::size_t>(p) >= ls.deprels.size() ? "" : ls.deprels[p];
      out << p << '\t' << or_underscore(form) << '\t'
          << or_underscore(render_label(ls.labels[p])) << '\t' << or_underscore(rel) << '\n';
    }
    out << '\n';
  }
}

std::vector<TaggedSentence> read_label_tsv(std::istream& in) {
  std::vector<TaggedSentence> out;
  TaggedSentence cur;
  bool root_seen = false;
  auto reset = [&] {
    cur = TaggedSentence{};
    cur.forms.emplace_back();
    cur.labels.labels.emplace_back();
    cur.labels.deprels.emplace_back();
    root_seen = false;
  };
  auto flush = [&] {
    if (cur.labels.labels.size() > 1 || root_seen) {
      cur.labels.has_root_label = root_seen;
      out.push_back(std::move(cur));
    }
    reset();
  };
  reset();

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 4)
      throw LabelTsvError(lineno, "expected 4 columns, found " + std::to_string(cols.size()));
    int id = -1;
    const auto [ptr, ec] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), id);
    if (ec != std::errc() || ptr != cols[0].data() + cols[0].size())
      throw LabelTsvError(lineno, "bad ID '" + cols[0] + "'");
    Label label;
    try {
      label = parse_label(from_underscore(cols[2]));
    } catch (const LabelParseError& e) {
      throw LabelTsvError(lineno, "label '" + cols[2] + "': " + e.what());
    }
    if (id == 0) {
      if (root_seen || cur.labels.labels.size() > 1)
        throw LabelTsvError(lineno, "root row must come first");
      cur.labels.labels[0] = std::move(label);
      root_seen = true;
      continue;
    }
    if (static_cast<std::size_t>(id) != cur.labels.labels.size())
      throw LabelTsvError(lineno, "expected ID " + std::to_string(cur.labels.labels.size()) +
                                      ", found " + cols[0]);
    cur.forms.push_back(from_underscore(cols[1]));
    cur.labels.labels.push_back(std::move(label));
    cur.labels.deprels.push_back(from_underscore(cols[3]));
  }
  flush();
  return out;
}

}  // namespace hierbrack
