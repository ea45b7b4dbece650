#pragma once

#include <fstream>
#include <iosfwd>
#include <string>

#include "orient/graph.hpp"
#include "orient/list_orient.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/pq_orient.hpp"
#include "orient/sequences.hpp"

// Line-oriented text formats.  '#' starts a comment; blank lines are ignored.
// Every reader raises kInvalidInput naming the offending line.

namespace orient {

/// "V <n>" followed by "E <u> <v>" lines; edge ids follow file order.
MultiGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const MultiGraph& g);

/// "<v> <value>" once per vertex.
VertexIntMap read_vertex_map(std::istream& in, int vertex_count);

/// "N <n>", optional "ANCHOR <z> <x>", then "<v> <residue>" per vertex.
ModuloSpec read_modulo_spec(std::istream& in, int vertex_count);

/// "K <k>", optional "Z <z>" and "X <x>", then "<v> <p> <q>" per vertex.
PQSpec read_pq_spec(std::istream& in, int vertex_count);

/// "<v> <c1> <c2> ..." per vertex.
ListAssignment read_lists(std::istream& in, int vertex_count);

struct ListFloors {
  VertexIntMap s, s0, l0;
};

/// "<v> <s> <s0> <l0>" per vertex.
ListFloors read_floors(std::istream& in, int vertex_count);

/// Two lines of positive integers.
SequencePair read_sequence_pair(std::istream& in);

/// kInvalidInput if `path` cannot be opened.
std::ifstream open_input(const std::string& path);

}  // namespace orient
