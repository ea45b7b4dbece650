#include "orient/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "orient/error.hpp"
#include "orient/rational.hpp"

namespace orient {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void bad(const Line& line, const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, "line " + std::to_string(line.number) + ": " + what);
}

std::int64_t integer(const Line& line, const std::string& tok) {
  std::int64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) bad(line, "expected an integer, got '" + tok + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    bad(line, "expected " + std::to_string(n) + " fields, got " +
                  std::to_string(line.tokens.size()));
  }
}

VertexId vertex(const Line& line, const std::string& tok, int vertex_count) {
  const std::int64_t v = integer(line, tok);
  if (v < 0 || v >= vertex_count) bad(line, "vertex " + tok + " out of range");
  return static_cast<VertexId>(v);
}

// Tracks that each vertex is assigned exactly once.
class Coverage {
 public:
  explicit Coverage(int n) : seen_(n, 0) {}
  void mark(const Line& line, VertexId v) {
    if (seen_[v]) bad(line, "vertex " + std::to_string(v) + " listed twice");
    seen_[v] = 1;
  }
  void require_all(const char* what) const {
    for (std::size_t v = 0; v < seen_.size(); ++v) {
      if (!seen_[v]) {
        throw Error(ErrorCode::kInvalidInput,
                    std::string(what) + " missing vertex " + std::to_string(v));
      }
    }
  }

 private:
  std::vector<char> seen_;
};

}  // namespace

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  return in;
}

MultiGraph read_graph(std::istream& in) {
  const auto lines = tokenize(in);
  int n = -1;
  std::vector<Edge> edges;
  for (const Line& line : lines) {
    const std::string& tag = line.tokens[0];
    if (tag == "V") {
      expect_arity(line, 2);
      if (n >= 0) bad(line, "duplicate V line");
      const std::int64_t count = integer(line, line.tokens[1]);
      if (count < 0) bad(line, "negative vertex count");
      n = static_cast<int>(count);
    } else if (tag == "E") {
      expect_arity(line, 3);
      if (n < 0) bad(line, "E before V");
      edges.push_back({vertex(line, line.tokens[1], n), vertex(line, line.tokens[2], n)});
      if (edges.back().u == edges.back().v) bad(line, "loop");
    } else {
      bad(line, "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "graph has no V line");
  return MultiGraph(n, std::move(edges));
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "V " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "E " << e.u << ' ' << e.v << '\n';
}

VertexIntMap read_vertex_map(std::istream& in, int vertex_count) {
  VertexIntMap map(vertex_count);
  Coverage cover(vertex_count);
  for (const Line& line : tokenize(in)) {
    expect_arity(line, 2);
    const VertexId v = vertex(line, line.tokens[0], vertex_count);
    cover.mark(line, v);
    map[v] = integer(line, line.tokens[1]);
  }
  cover.require_all("map");
  return map;
}

ModuloSpec read_modulo_spec(std::istream& in, int vertex_count) {
  ModuloSpec spec;
  spec.n = 0;
  spec.residues = VertexIntMap(vertex_count);
  Coverage cover(vertex_count);
  for (const Line& line : tokenize(in)) {
    const std::string& tag = line.tokens[0];
    if (tag == "N") {
      expect_arity(line, 2);
      spec.n = static_cast<int>(integer(line, line.tokens[1]));
    } else if (tag == "ANCHOR") {
      expect_arity(line, 3);
      try {
        spec.anchor = ModuloAnchor{vertex(line, line.tokens[1], vertex_count),
                                   parse_rational(line.tokens[2])};
      } catch (const Error& err) {
        bad(line, err.what());
      }
    } else {
      expect_arity(line, 2);
      const VertexId v = vertex(line, tag, vertex_count);
      cover.mark(line, v);
      spec.residues[v] = integer(line, line.tokens[1]);
    }
  }
  if (spec.n < 1) throw Error(ErrorCode::kInvalidInput, "modulo spec needs a positive N");
  cover.require_all("modulo spec");
  return spec;
}

PQSpec read_pq_spec(std::istream& in, int vertex_count) {
  PQSpec spec;
  spec.k = 0;
  spec.p = VertexIntMap(vertex_count);
  spec.q = VertexIntMap(vertex_count);
  Coverage cover(vertex_count);
  for (const Line& line : tokenize(in)) {
    const std::string& tag = line.tokens[0];
    if (tag == "K") {
      expect_arity(line, 2);
      spec.k = static_cast<int>(integer(line, line.tokens[1]));
    } else if (tag == "Z") {
      expect_arity(line, 2);
      spec.z = vertex(line, line.tokens[1], vertex_count);
    } else if (tag == "X") {
      expect_arity(line, 2);
      try {
        spec.x = parse_rational(line.tokens[1]);
      } catch (const Error& err) {
        bad(line, err.what());
      }
    } else {
      expect_arity(line, 3);
      const VertexId v = vertex(line, tag, vertex_count);
      cover.mark(line, v);
      spec.p[v] = integer(line, line.tokens[1]);
      spec.q[v] = integer(line, line.tokens[2]);
    }
  }
  if (spec.k < 1) throw Error(ErrorCode::kInvalidInput, "pq spec needs a positive K");
  cover.require_all("pq spec");
  return spec;
}

ListAssignment read_lists(std::istream& in, int vertex_count) {
  std::vector<IntList> lists(vertex_count);
  Coverage cover(vertex_count);
  for (const Line& line : tokenize(in)) {
    if (line.tokens.size() < 2) bad(line, "a list needs at least one member");
    const VertexId v = vertex(line, line.tokens[0], vertex_count);
    cover.mark(line, v);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      lists[v].push_back(integer(line, line.tokens[i]));
    }
  }
  cover.require_all("lists");
  return ListAssignment(std::move(lists));
}

ListFloors read_floors(std::istream& in, int vertex_count) {
  ListFloors floors{VertexIntMap(vertex_count), VertexIntMap(vertex_count),
                    VertexIntMap(vertex_count)};
  Coverage cover(vertex_count);
  for (const Line& line : tokenize(in)) {
    expect_arity(line, 4);
    const VertexId v = vertex(line, line.tokens[0], vertex_count);
    cover.mark(line, v);
    floors.s[v] = integer(line, line.tokens[1]);
    floors.s0[v] = integer(line, line.tokens[2]);
    floors.l0[v] = integer(line, line.tokens[3]);
  }
  cover.require_all("floors");
  return floors;
}

SequencePair read_sequence_pair(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.size() != 2) {
    throw Error(ErrorCode::kInvalidInput, "a sequence pair needs exactly two lines");
  }
  SequencePair sp;
  for (const std::string& tok : lines[0].tokens) sp.xs.push_back(integer(lines[0], tok));
  for (const std::string& tok : lines[1].tokens) sp.ys.push_back(integer(lines[1], tok));
  validate_sequence_pair(sp);
  return sp;
}

}  // namespace orient
