#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

using IntList = std::vector<std::int64_t>;  // sorted, no repeats

/// Largest difference between consecutive members; 0 for a singleton.
std::int64_t gap_of(const IntList& list);

struct ListAssignment {
  std::vector<IntList> lists;

  ListAssignment() = default;
  explicit ListAssignment(std::vector<IntList> l);

  const IntList& operator[](VertexId v) const { return lists.at(v); }
  std::int64_t gap(VertexId v) const { return gap_of(lists.at(v)); }
  std::int64_t gap() const;
  int size() const noexcept { return static_cast<int>(lists.size()); }
};

struct SparseListProblem {
  MultiGraph g;
  VertexId z = 0;
  ListAssignment lists;
  VertexIntMap s;
  VertexIntMap s0;
  VertexIntMap l0;
  // Skip the partition-connectivity check on entry.
  bool trusted = false;
};

struct ListSolveOptions {
  // Frames plus partition-connectivity checks before giving up.
  std::int64_t budget = 200000;
};

enum class ListStep : std::uint8_t { kBase, kCase1, kCase2, kTerminal };

std::string_view to_string(ListStep step);

struct ListTraceEntry {
  int depth = 0;
  int vertex_count = 0;
  ListStep step = ListStep::kBase;
  VertexId vertex = -1;  // u for Case 1 / Case 2, -1 otherwise
};

struct ListResult {
  Orientation orientation;
  std::vector<ListTraceEntry> trace;  // successful path, outermost first
  std::int64_t work = 0;
  std::int64_t rejected_branches = 0;
};

/// Lists pruned to [0, d(v)] with l0 raised to 0.
SparseListProblem normalize(const SparseListProblem& prob);

/// Violations of the solver's hypotheses (empty when they all hold).  The
/// partition-connectivity hypothesis is included unless `trusted` is set.
std::vector<std::string> check_list_preconditions(const SparseListProblem& prob);

/// Violations of: d+(v) in L(v) for v != z, s(v) <= d+(v) <= d(v) - s0(v).
std::vector<std::string> check_list_orientation(const SparseListProblem& prob,
                                                const Orientation& d);

/// z-defective L-orientation with s(v) <= d+(v) <= d(v) - s0(v) following the
/// inductive argument (lifting at a low-degree vertex, peeling an edge at z,
/// or the defective {p, q} construction), with backtracking between branches.
/// kPrecondition on a failed hypothesis, kIndeterminate when the budget runs
/// out, kSearchExhausted when every branch fails.
ListResult sparse_list_orientation(const SparseListProblem& prob,
                                   const ListSolveOptions& options = {});

}  // namespace orient
