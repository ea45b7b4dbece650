#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orient {

// Two equal-sum lists of positive integers.
struct SequencePair {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;

  std::int64_t k() const;  // maximum entry over both lists
};

void validate_sequence_pair(const SequencePair& sp);

/// True iff no I, J with 0 < |I| + |J| < m + n have equal sums.  Unequal
/// totals raise kInvalidInput.
bool is_irreducible(const SequencePair& sp);

/// Sum of xs <= k(k - 1).  Requires an irreducible pair (kPrecondition).
bool additive_bound_holds(const SequencePair& sp);

// Block I_s / J_s with the partial sums reached after it.
struct BlockStep {
  std::vector<int> x_block;  // indices into the (possibly swapped) xs
  std::vector<int> y_block;
  std::int64_t g = 0;        // sum of xs consumed so far
  std::int64_t f = 0;        // sum of ys consumed so far
  std::int64_t g_gap = 0;    // g(s) - f(s - 1)
  std::int64_t f_gap = 0;    // f(s) - g(s)
};

struct BlockCertificate {
  bool swapped = false;  // true when the lists were exchanged so k sits on ys
  std::vector<std::int64_t> xs;  // after the swap
  std::vector<std::int64_t> ys;
  std::int64_t k = 0;
  std::vector<BlockStep> steps;
};

/// Alternating greedy blocks: each I_s is the smallest (then lexicographically
/// first) set of unused x indices lifting g(s) to at least f(s-1), and J_s the
/// same on the y side.  Requires an irreducible pair.
BlockCertificate greedy_blocks(const SequencePair& sp);

/// Checks partition of indices, the interleaving chain, gap ranges and
/// injectivity, and that the gaps add to the common total.  Returns the list
/// of failed checks (empty = valid).
std::vector<std::string> validate_blocks(const BlockCertificate& cert);

}  // namespace orient
