#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "pdd/instance.hpp"

namespace pdd {

/// Malformed text input; line() is 1-based, 0 when the problem is global.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected graph with a target clique size.
struct CliqueInput {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;  // stored with first < second
  std::size_t k = 0;

  friend bool operator==(const CliqueInput&, const CliqueInput&) = default;
};

/// Adds an edge, rejecting self-loops and duplicates in either orientation.
void add_graph_edge(CliqueInput& g, const std::string& u, const std::string& v);

/// Instance text:
///   mode epsilon | mode alpha p/q | mode gamma
///   k <int>
///   D <int>
///   tree
///   <parent> <child> <weight>
///   foodweb
///   <prey> <predator> [p/q]
/// Lines starting with '#' and blank lines are ignored. Syntax problems throw
/// ParseError; structural problems throw InvalidInstance.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

/// Graph text: `k <int>`, then `u v` per edge and `vertex w` per vertex.
CliqueInput parse_graph(std::string_view text);
std::string write_graph(const CliqueInput& g);

/// Whitespace-separated taxon names; '#' lines ignored.
TaxonSet parse_taxon_list(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace pdd
