#include "pdd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace pdd {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

Weight parse_int(const Line& line, std::string_view token, std::string_view what) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, std::string(what) + " must be an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Rational parse_rational(const Line& line, std::string_view token, std::string_view what) {
  try {
    return Rational::parse(token);
  } catch (const std::exception& e) {
    throw ParseError(line.number, std::string(what) + ": " + e.what());
  }
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi, std::string_view shape) {
  if (line.tokens.size() < lo || line.tokens.size() > hi) {
    throw ParseError(line.number, "expected '" + std::string(shape) + "'");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  enum class Section { Header, Tree, Web } section = Section::Header;
  InstanceSpec spec;
  std::optional<Weight> k, D;
  std::optional<ViabilityMode> mode;
  bool saw_tree = false, saw_web = false;
  // Lines that global violations are reported against.
  std::size_t tree_line = 0, web_line = 0, header_line = 0;
  std::set<std::pair<std::string, std::string>> tree_seen, web_seen;

  for (const auto& line : tokenize(text)) {
    const auto head = line.tokens.front();
    if (line.tokens.size() == 1 && head == "tree") {
      if (saw_tree) throw ParseError(line.number, "duplicate 'tree' section");
      saw_tree = true;
      tree_line = line.number;
      section = Section::Tree;
      continue;
    }
    if (line.tokens.size() == 1 && head == "foodweb") {
      if (saw_web) throw ParseError(line.number, "duplicate 'foodweb' section");
      saw_web = true;
      web_line = line.number;
      section = Section::Web;
      continue;
    }
    switch (section) {
      case Section::Header:
        header_line = line.number;
        if (head == "mode") {
          if (mode) throw ParseError(line.number, "duplicate mode line");
          expect_arity(line, 2, 3, "mode epsilon|alpha p/q|gamma");
          if (line.tokens[1] == "epsilon" && line.tokens.size() == 2) {
            mode = ViabilityMode::epsilon();
          } else if (line.tokens[1] == "gamma" && line.tokens.size() == 2) {
            mode = ViabilityMode::gamma();
          } else if (line.tokens[1] == "alpha" && line.tokens.size() == 3) {
            auto a = parse_rational(line, line.tokens[2], "alpha");
            try {
              mode = ViabilityMode::alpha(a);
            } catch (const std::invalid_argument& e) {
              throw ParseError(line.number, e.what());
            }
          } else {
            throw ParseError(line.number, "expected 'mode epsilon|alpha p/q|gamma'");
          }
        } else if (head == "k" || head == "D") {
          expect_arity(line, 2, 2, std::string(head) + " <int>");
          auto& slot = head == "k" ? k : D;
          if (slot) throw ParseError(line.number, "duplicate " + std::string(head) + " line");
          slot = parse_int(line, line.tokens[1], head);
        } else {
          throw ParseError(line.number, "unexpected '" + std::string(head) + "' before the tree section");
        }
        break;
      case Section::Tree:
        expect_arity(line, 3, 3, "parent child weight");
        spec.tree.push_back({std::string(line.tokens[0]), std::string(line.tokens[1]),
                             parse_int(line, line.tokens[2], "weight")});
        if (spec.tree.back().weight <= 0) throw ParseError(line.number, "weights are positive integers");
        if (line.tokens[0] == line.tokens[1]) throw ParseError(line.number, "tree edge is a self-loop");
        if (!tree_seen.emplace(line.tokens[0], line.tokens[1]).second) {
          throw ParseError(line.number, "duplicate tree edge");
        }
        break;
      case Section::Web: {
        expect_arity(line, 2, 3, "prey predator [p/q]");
        WebEdge e{std::string(line.tokens[0]), std::string(line.tokens[1]), std::nullopt};
        if (line.tokens.size() == 3) e.gamma = parse_rational(line, line.tokens[2], "gamma");
        if (e.gamma && (*e.gamma <= Rational(0) || Rational(1) < *e.gamma)) {
          throw ParseError(line.number, "gamma must lie in (0,1]");
        }
        if (e.prey == e.predator) throw ParseError(line.number, "food-web edge is a self-loop");
        if (!web_seen.emplace(e.prey, e.predator).second) throw ParseError(line.number, "duplicate food-web edge");
        spec.web.push_back(std::move(e));
        break;
      }
    }
  }
  if (!mode) throw ParseError(0, "missing mode line");
  if (!k) throw ParseError(0, "missing k line");
  if (!D) throw ParseError(0, "missing D line");
  if (!saw_tree) throw ParseError(0, "missing tree section");
  spec.k = *k;
  spec.D = *D;
  spec.mode = *mode;
  if (!validate_instance(spec).empty()) {
    // Whole-structure problems point at the section they concern.
    auto at = [](std::size_t number, const std::string& msg) { return "line " + std::to_string(number) + ": " + msg; };
    std::vector<std::string> located;
    for (const auto& v : tree_violations(spec.tree)) located.push_back(at(tree_line, v));
    if (located.empty()) {
      const auto web = web_violations(PhyloTree::from_edges(spec.tree).taxa(), spec.web);
      for (const auto& v : validate_instance(spec)) {
        const bool in_web = std::find(web.begin(), web.end(), v) != web.end();
        located.push_back(at(in_web ? web_line : header_line, v));
      }
    }
    throw InvalidInstance(std::move(located));
  }
  return Instance::from_spec(spec);
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "mode " << inst.mode().to_string() << "\n";
  out << "k " << inst.k() << "\n";
  out << "D " << inst.D() << "\n";
  out << "tree\n";
  for (const auto& e : inst.tree().edges()) out << e.parent << ' ' << e.child << ' ' << e.weight << "\n";
  out << "foodweb\n";
  for (const auto& e : inst.web().edges()) {
    out << e.prey << ' ' << e.predator;
    if (e.gamma) out << ' ' << e.gamma->num() << '/' << e.gamma->den();
    out << "\n";
  }
  return out.str();
}

void add_graph_edge(CliqueInput& g, const std::string& u, const std::string& v) {
  if (u == v) throw std::invalid_argument("self-loop at " + u);
  auto key = u < v ? std::pair{u, v} : std::pair{v, u};
  if (!g.edges.insert(key).second) throw std::invalid_argument("duplicate edge " + key.first + " " + key.second);
  g.vertices.insert(u);
  g.vertices.insert(v);
}

CliqueInput parse_graph(std::string_view text) {
  CliqueInput g;
  bool saw_k = false;
  for (const auto& line : tokenize(text)) {
    const auto head = line.tokens.front();
    if (head == "k") {
      expect_arity(line, 2, 2, "k <int>");
      if (saw_k) throw ParseError(line.number, "duplicate k line");
      auto k = parse_int(line, line.tokens[1], "k");
      if (k < 0) throw ParseError(line.number, "k must be non-negative");
      g.k = static_cast<std::size_t>(k);
      saw_k = true;
    } else if (head == "vertex") {
      expect_arity(line, 2, 2, "vertex <name>");
      g.vertices.emplace(line.tokens[1]);
    } else {
      expect_arity(line, 2, 2, "u v");
      try {
        add_graph_edge(g, std::string(line.tokens[0]), std::string(line.tokens[1]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    }
  }
  if (!saw_k) throw ParseError(0, "missing k line");
  return g;
}

std::string write_graph(const CliqueInput& g) {
  std::ostringstream out;
  out << "k " << g.k << "\n";
  std::set<std::string> covered;
  for (const auto& [u, v] : g.edges) {
    covered.insert(u);
    covered.insert(v);
  }
  for (const auto& v : g.vertices) {
    if (!covered.count(v)) out << "vertex " << v << "\n";
  }
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << "\n";
  return out.str();
}

TaxonSet parse_taxon_list(std::string_view text) {
  TaxonSet out;
  for (const auto& line : tokenize(text)) {
    for (auto t : line.tokens) out.emplace(t);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace pdd
