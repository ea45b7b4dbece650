#include "orient/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orient/error.hpp"

namespace orient {

namespace {

std::int64_t total(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// Achievable subset sums (any size) as a bitmap over [0, total].
std::vector<char> subset_sums(const std::vector<std::int64_t>& v) {
  const std::int64_t t = total(v);
  std::vector<char> reach(t + 1, 0);
  reach[0] = 1;
  for (std::int64_t a : v) {
    for (std::int64_t s = t; s >= a; --s) {
      if (reach[s - a]) reach[s] = 1;
    }
  }
  return reach;
}

// Lexicographically first smallest subset of `avail` whose values sum to at
// least `need` (need >= 1 means a nonempty subset is always chosen).
std::vector<int> min_block(const std::vector<std::int64_t>& values,
                           const std::vector<int>& avail, std::int64_t need) {
  need = std::max<std::int64_t>(need, 1);
  std::vector<std::int64_t> sorted;
  for (int i : avail) sorted.push_back(values[i]);
  std::sort(sorted.rbegin(), sorted.rend());
  std::size_t size = 0;
  for (std::int64_t acc = 0; size < sorted.size() && acc < need; ++size) acc += sorted[size];
  // Enumerate combinations of `size` positions of avail in lexicographic order.
  std::vector<int> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  const int n = static_cast<int>(avail.size());
  const int r = static_cast<int>(size);
  while (true) {
    std::int64_t sum = 0;
    for (int p : pick) sum += values[avail[p]];
    if (sum >= need) {
      std::vector<int> out;
      for (int p : pick) out.push_back(avail[p]);
      return out;
    }
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw Error(ErrorCode::kInternal, "no block reaches the required sum");
}

}  // namespace

std::int64_t SequencePair::k() const {
  std::int64_t k = 0;
  for (std::int64_t a : xs) k = std::max(k, a);
  for (std::int64_t b : ys) k = std::max(k, b);
  return k;
}

void validate_sequence_pair(const SequencePair& sp) {
  if (sp.xs.empty() || sp.ys.empty()) {
    throw Error(ErrorCode::kInvalidInput, "both sequences must be nonempty");
  }
  for (std::int64_t a : sp.xs) {
    if (a < 1) throw Error(ErrorCode::kInvalidInput, "entries must be positive");
  }
  for (std::int64_t b : sp.ys) {
    if (b < 1) throw Error(ErrorCode::kInvalidInput, "entries must be positive");
  }
  if (total(sp.xs) != total(sp.ys)) {
    throw Error(ErrorCode::kInvalidInput, "sequences must have equal sums");
  }
}

bool is_irreducible(const SequencePair& sp) {
  validate_sequence_pair(sp);
  // With positive entries the only equal-sum pairs with sum 0 or sum = total
  // are (empty, empty) and (all, all); every other coincidence is a proper one.
  const std::int64_t t = total(sp.xs);
  const auto rx = subset_sums(sp.xs);
  const auto ry = subset_sums(sp.ys);
  for (std::int64_t s = 1; s < t; ++s) {
    if (rx[s] && ry[s]) return false;
  }
  return true;
}

bool additive_bound_holds(const SequencePair& sp) {
  if (!is_irreducible(sp)) {
    throw Error(ErrorCode::kPrecondition, "sequence pair is not irreducible");
  }
  const std::int64_t k = sp.k();
  return total(sp.xs) <= k * (k - 1);
}

BlockCertificate greedy_blocks(const SequencePair& sp) {
  if (!is_irreducible(sp)) {
    throw Error(ErrorCode::kPrecondition, "sequence pair is not irreducible");
  }
  BlockCertificate cert;
  cert.k = sp.k();
  const std::int64_t max_y = *std::max_element(sp.ys.begin(), sp.ys.end());
  cert.swapped = max_y != cert.k;
  cert.xs = cert.swapped ? sp.ys : sp.xs;
  cert.ys = cert.swapped ? sp.xs : sp.ys;

  std::vector<int> x_left(cert.xs.size());
  std::vector<int> y_left(cert.ys.size());
  std::iota(x_left.begin(), x_left.end(), 0);
  std::iota(y_left.begin(), y_left.end(), 0);
  auto consume = [](std::vector<int>& left, const std::vector<int>& block) {
    std::erase_if(left, [&block](int i) {
      return std::find(block.begin(), block.end(), i) != block.end();
    });
  };

  std::int64_t g = 0;
  std::int64_t f = 0;
  while (!x_left.empty() || !y_left.empty()) {
    BlockStep step;
    const std::int64_t f_prev = f;
    if (!x_left.empty()) {
      step.x_block = min_block(cert.xs, x_left, f - g);
      for (int i : step.x_block) g += cert.xs[i];
      consume(x_left, step.x_block);
    }
    if (!y_left.empty()) {
      step.y_block = min_block(cert.ys, y_left, g - f);
      for (int j : step.y_block) f += cert.ys[j];
      consume(y_left, step.y_block);
    }
    step.g = g;
    step.f = f;
    step.g_gap = g - f_prev;
    step.f_gap = f - g;
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::vector<std::string> validate_blocks(const BlockCertificate& cert) {
  std::vector<std::string> problems;
  const std::int64_t t = total(cert.xs);
  std::vector<int> x_seen(cert.xs.size(), 0);
  std::vector<int> y_seen(cert.ys.size(), 0);
  for (const BlockStep& s : cert.steps) {
    for (int i : s.x_block) ++x_seen.at(i);
    for (int j : s.y_block) ++y_seen.at(j);
  }
  if (std::any_of(x_seen.begin(), x_seen.end(), [](int c) { return c != 1; }) ||
      std::any_of(y_seen.begin(), y_seen.end(), [](int c) { return c != 1; })) {
    problems.emplace_back("blocks do not partition the indices");
  }
  if (cert.steps.empty()) {
    problems.emplace_back("no blocks");
    return problems;
  }
  const std::size_t q = cert.steps.size();
  std::int64_t prev_f = 0;
  std::int64_t gap_sum = 0;
  std::set<std::int64_t> g_gaps;
  std::set<std::int64_t> f_gaps;
  for (std::size_t s = 0; s < q; ++s) {
    const BlockStep& st = cert.steps[s];
    const bool last = s + 1 == q;
    // 0 < g(1) < f(1) < g(2) < ... < f(q-1) <= g(q) = f(q)
    if (last ? st.g < prev_f : st.g <= prev_f) {
      problems.push_back("interleaving fails at g(" + std::to_string(s + 1) + ")");
    }
    if (last ? st.f != st.g : st.f <= st.g) {
      problems.push_back("interleaving fails at f(" + std::to_string(s + 1) + ")");
    }
    if (st.g_gap != st.g - prev_f || st.f_gap != st.f - st.g) {
      problems.push_back("recorded gaps disagree with partial sums");
    }
    if (st.g_gap < 0 || st.g_gap > cert.k - 1) {
      problems.push_back("g-gap " + std::to_string(st.g_gap) + " outside [0, k-1]");
    }
    if (st.f_gap < 0 || st.f_gap > cert.k - 1) {
      problems.push_back("f-gap " + std::to_string(st.f_gap) + " outside [0, k-1]");
    }
    if (!g_gaps.insert(st.g_gap).second) problems.emplace_back("g-gaps are not injective");
    if (!f_gaps.insert(st.f_gap).second) problems.emplace_back("f-gaps are not injective");
    gap_sum += st.g_gap + (last ? 0 : st.f_gap);
    prev_f = st.f;
  }
  if (cert.steps.back().g != t || cert.steps.back().f != t) {
    problems.emplace_back("final partial sums differ from the total");
  }
  if (gap_sum != t) problems.emplace_back("gaps do not add up to the total");
  return problems;
}

}  // namespace orient
