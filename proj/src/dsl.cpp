// Copyright 2026 The kplanar Authors
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


#include "kplanar/dsl.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

const std::regex& identifier() {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_.]*");
  return re;
}

class Parser {
 public:
  DrawingDocument run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool versioned = false;
    while (std::getline(in, line)) {
      ++line_no_;
      const std::vector<Token> toks = tokenize(line);
      if (toks.empty()) continue;
      const std::string& kw = toks[0].text;
      if (!versioned) {
        if (kw != "kplanar") fail(toks[0], "expected 'kplanar 1' header");
        arity(toks, 2);
        if (toks[1].text != "1") fail(toks[1], "unsupported format version '" + toks[1].text + "'");
        versioned = true;
      } else if (kw == "k") {
        arity(toks, 2);
        doc_.k = integer(toks[1]);
      } else if (kw == "restrict") {
        if (toks.size() > 2) fail(toks[2], "unexpected token");
        try {
          doc_.restrictions = parse_restrictions(toks.size() == 2 ? toks[1].text : "");
        } catch (const Error& e) {
          fail(toks[1], e.what());
        }
      } else if (kw == "node") {
        arity(toks, 3);
        NodeKind kind;
        if (toks[2].text == "real") {
          kind = NodeKind::Real;
        } else if (toks[2].text == "crossing") {
          kind = NodeKind::Crossing;
        } else if (toks[2].text == "isolated") {
          kind = NodeKind::Isolated;
        } else {
          fail(toks[2], "unknown node kind '" + toks[2].text + "'");
        }
        declare(nodes_, toks[1], "node");
        nodes_[toks[1].text] = p().add_node(kind, toks[1].text);
      } else if (kw == "edge") {
        arity(toks, 2);
        declare(edges_, toks[1], "edge");
        edges_[toks[1].text] = p().add_edge(toks[1].text);
      } else if (kw == "seg") {
        arity(toks, 5);
        declare(segs_, toks[1], "segment");
        const EdgeId e = lookup(edges_, toks[2], "edge");
        const NodeId a = lookup(nodes_, toks[3], "node");
        const NodeId b = lookup(nodes_, toks[4], "node");
        segs_[toks[1].text] = p().add_segment(a, b, e);
      } else if (kw == "rot") {
        if (toks.size() < 3) fail(toks[0], "rot needs a node and at least one dart");
        const NodeId v = lookup(nodes_, toks[1], "node");
        if (!rotated_.insert(v).second) fail(toks[1], "second rotation for node '" + toks[1].text + "'");
        std::vector<DartId> ccw;
        for (size_t i = 2; i < toks.size(); ++i) {
          const DartId d = dart(toks[i]);
          if (p().darts[d].node != v) fail(toks[i], "dart '" + toks[i].text + "' does not start at '" + toks[1].text + "'");
          if (!listed_.insert(d).second) fail(toks[i], "dart '" + toks[i].text + "' listed twice");
          ccw.push_back(d);
        }
        p().set_rotation(ccw);
      } else if (kw == "anchor") {
        arity(toks, 4);
        if (toks[2].text != "in") fail(toks[2], "expected 'in'");
        Anchor a;
        if (nodes_.count(toks[1].text)) {
          a.node = nodes_[toks[1].text];
        } else {
          a.dart = dart(toks[1]);
        }
        a.host = toks[3].text == "outer" ? kOuter : dart(toks[3]);
        p().anchors.push_back(a);
      } else if (kw == "outer") {
        arity(toks, 2);
        p().outer = dart(toks[1]);
      } else {
        fail(toks[0], "unknown keyword '" + kw + "'");
      }
    }
    if (!versioned) {
      throw SyntaxError("line 1 column 1: missing 'kplanar 1' header");
    }
    for (DartId d = 0; d < p().num_darts(); ++d) {
      if (!listed_.count(d)) {
        throw SyntaxError("dart of segment '" + seg_name(d) + "' is missing from every rot line");
      }
    }
    require_valid(p());
    return doc_;
  }

 private:
  Planarization& p() { return doc_.drawing; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SyntaxError("line " + std::to_string(line_no_) + " column " +
                      std::to_string(t.column) + ": " + msg);
  }

  void arity(const std::vector<Token>& toks, size_t n) const {
    if (toks.size() < n) fail(toks.back(), "'" + toks[0].text + "' needs " + std::to_string(n - 1) + " arguments");
    if (toks.size() > n) fail(toks[n], "unexpected token '" + toks[n].text + "'");
  }

  int integer(const Token& t) const {
    try {
      size_t used = 0;
      const int v = std::stoi(t.text, &used);
      if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    fail(t, "expected an integer, got '" + t.text + "'");
  }

  void declare(const std::map<std::string, int>& names, const Token& t,
               const char* what) const {
    if (!std::regex_match(t.text, identifier())) fail(t, std::string("bad ") + what + " name '" + t.text + "'");
    if (names.count(t.text)) fail(t, std::string("duplicate ") + what + " '" + t.text + "'");
  }

  int lookup(const std::map<std::string, int>& names, const Token& t,
             const char* what) const {
    auto it = names.find(t.text);
    if (it == names.end()) fail(t, std::string("unknown ") + what + " '" + t.text + "'");
    return it->second;
  }

  DartId dart(const Token& t) const {
    const std::string& s = t.text;
    if (s.size() < 2 || (s.back() != '+' && s.back() != '-')) {
      fail(t, "unknown dart '" + s + "'");
    }
    auto it = segs_.find(s.substr(0, s.size() - 1));
    if (it == segs_.end()) fail(t, "unknown dart '" + s + "'");
    return it->second + (s.back() == '-' ? 1 : 0);
  }

  std::string seg_name(DartId d) const {
    for (const auto& [name, id] : segs_) {
      if (id == (d & ~1)) return name;
    }
    return "?";
  }

  DrawingDocument doc_;
  int line_no_ = 0;
  std::map<std::string, int> nodes_, edges_, segs_;
  std::set<NodeId> rotated_;
  std::set<DartId> listed_;
};

std::vector<std::string> names_for(const std::vector<std::string>& labels,
                                   const std::vector<std::string>& fallback) {
  std::set<std::string> seen;
  bool usable = true;
  for (const std::string& l : labels) {
    if (!std::regex_match(l, identifier()) || !seen.insert(l).second ||
        l == "outer" || l == "in") {
      usable = false;
      break;
    }
  }
  return usable ? labels : fallback;
}

}  // namespace

DrawingDocument parse_document(const std::string& text) {
  return Parser().run(text);
}

Planarization parse(const std::string& text) {
  return parse_document(text).drawing;
}

std::string emit(const Planarization& p, std::optional<int> k,
                 std::optional<unsigned> restrictions) {
  require_valid(p);
  // Segments are numbered by their lower dart; dart twins may be arbitrary.
  std::vector<int> seg_of(p.num_darts(), kNone);
  std::vector<DartId> seg_first;
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (seg_of[d] != kNone) continue;
    seg_of[d] = seg_of[p.twin(d)] = static_cast<int>(seg_first.size());
    seg_first.push_back(d);
  }
  auto dart_name = [&](DartId d) {
    const int s = seg_of[d];
    return "s" + std::to_string(s) + (seg_first[s] == d ? "+" : "-");
  };

  std::vector<std::string> labels, generated;
  int counts[3] = {0, 0, 0};
  for (const Node& n : p.nodes) {
    labels.push_back(n.label);
    const int kind = static_cast<int>(n.kind);
    const char prefix = n.kind == NodeKind::Real ? 'v' : n.kind == NodeKind::Crossing ? 'x' : 'i';
    generated.push_back(prefix + std::to_string(counts[kind]++));
  }
  const std::vector<std::string> node_names = names_for(labels, generated);
  generated.clear();
  for (EdgeId e = 0; e < p.num_edges(); ++e) generated.push_back("e" + std::to_string(e));
  const std::vector<std::string> edge_names = names_for(p.edges, generated);

  std::ostringstream out;
  out << "kplanar 1\n";
  if (k) out << "k " << *k << "\n";
  if (restrictions) {
    const std::string r = restrictions_to_string(*restrictions);
    out << "restrict" << (r.empty() ? "" : " " + r) << "\n";
  }
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    out << "node " << node_names[v] << " " << to_string(p.nodes[v].kind) << "\n";
  }
  for (EdgeId e = 0; e < p.num_edges(); ++e) out << "edge " << edge_names[e] << "\n";
  for (size_t s = 0; s < seg_first.size(); ++s) {
    const DartId d = seg_first[s];
    out << "seg s" << s << " " << edge_names[p.darts[d].edge] << " "
        << node_names[p.darts[d].node] << " "
        << node_names[p.darts[p.twin(d)].node] << "\n";
  }
  const auto rot = rotations(p);
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    if (rot[v].empty()) continue;
    out << "rot " << node_names[v];
    for (DartId d : rot[v]) out << " " << dart_name(d);
    out << "\n";
  }
  for (const Anchor& a : p.anchors) {
    out << "anchor " << (a.node != kNone ? node_names[a.node] : dart_name(a.dart))
        << " in " << (a.host == kOuter ? std::string("outer") : dart_name(a.host))
        << "\n";
  }
  if (p.outer != kNone) out << "outer " << dart_name(p.outer) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace kplanar
