#ifndef SUPERSAT_THEOREM_HPP
#define SUPERSAT_THEOREM_HPP

// Closed forms of the k-chain supersaturation bound: the lower bound and its
// tightness range, the permutation count N(n; a_1..a_k) in factorial and
// ratio form, the y/z products with their minimization, and the extremal
// family that attains the bound.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supersat/core.hpp"
#include "supersat/counting.hpp"
#include "supersat/scd.hpp"

namespace supersat {

/// Strictly increasing levels a_1 < ... < a_k in [0, n].
class LevelTuple {
public:
  LevelTuple(int n, std::vector<int> levels) : n_(n), levels_(std::move(levels)) {
    detail::require_formula_n(n);
    require(!levels_.empty(), Errc::InvalidParameter, "level tuple must be non-empty");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      require(levels_[i] >= 0 && levels_[i] <= n, Errc::InvalidParameter, "level outside [0,n]");
      require(i == 0 || levels_[i - 1] < levels_[i], Errc::InvalidParameter, "levels must be strictly increasing");
    }
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const { return levels_; }
  int operator[](std::size_t i) const { return levels_[i]; }
  int front() const { return levels_.front(); }
  int back() const { return levels_.back(); }

  std::vector<int> differences() const {
    std::vector<int> d;
    for (std::size_t i = 1; i < levels_.size(); ++i) d.push_back(levels_[i] - levels_[i - 1]);
    return d;
  }

  static LevelTuple from_differences(int n, int first, std::span<const int> diffs) {
    std::vector<int> levels{first};
    for (int d : diffs) levels.push_back(levels.back() + d);
    return LevelTuple(n, std::move(levels));
  }

  friend bool operator==(const LevelTuple&, const LevelTuple&) = default;

private:
  int n_;
  std::vector<int> levels_;
};

namespace detail {

inline void require_bound_range(int n, int k) {
  require_formula_n(n);
  require(k >= 2 && k <= n + 1, Errc::InvalidParameter,
          "k=" + std::to_string(k) + " outside [2,n+1] for n=" + std::to_string(n));
}

/// (⌊(n+k)/2⌋)(⌊(n+k)/2⌋-1)...(⌊(n+k)/2⌋-k+2)
inline BigInt middle_falling_product(int n, int k) {
  const int top = (n + k) / 2;
  BigInt p = 1;
  for (int i = 1; i <= k - 1; ++i) p *= top - i + 1;
  return p;
}

} // namespace detail

/// Minimum number of k-chains in any family of size Σ(n,k-1) + x.
inline BigInt supersat_bound(int n, int k, const BigInt& x) {
  detail::require_bound_range(n, k);
  require(x >= 0, Errc::InvalidParameter, "x must be non-negative");
  return x * detail::middle_falling_product(n, k);
}

/// The level of the row whose sets are added on top of B(n,k-1).
inline int added_row_level(int n, int k) {
  detail::require_bound_range(n, k);
  const int shift = k / 2;
  return n / 2 + (k % 2 == 0 ? shift : -shift);
}

inline BigInt tight_x_max(int n, int k) { return binom(n, added_row_level(n, k)); }

struct BoundReport {
  int n = 0;
  int k = 0;
  BigInt x = 0;
  BigInt sigma_threshold = 0;
  BigInt bound_value = 0;
  BigInt tight_x_max = 0;
  std::optional<BigInt> achieved_count;
};

inline BoundReport make_bound_report(int n, int k, const BigInt& x) {
  BoundReport r;
  r.n = n;
  r.k = k;
  r.x = x;
  r.bound_value = supersat_bound(n, k, x);
  r.sigma_threshold = sigma(n, k - 1);
  r.tight_x_max = supersat::tight_x_max(n, k);
  return r;
}

/// a_1! (a_2-a_1)! ... (a_k-a_{k-1})! (n-a_k)! min{C(n,a_1), C(n,a_k)}.
/// For k = 1 this is n!.
inline BigInt n_permutations_factorial(const LevelTuple& t) {
  BigInt r = factorial(t.front());
  for (int d : t.differences()) r *= factorial(d);
  r *= factorial(t.n() - t.back());
  r *= std::min(binom(t.n(), t.front()), binom(t.n(), t.back()));
  return r;
}

struct YZ {
  BigInt y;
  BigInt z;
  const BigInt& max() const { return y < z ? z : y; }
};

/// y = Π C(a_{i+1}, a_i),  z = Π C(n-a_i, n-a_{i+1}).
inline YZ yz(const LevelTuple& t) {
  require(t.k() >= 2, Errc::InvalidParameter, "yz needs k >= 2");
  YZ out{1, 1};
  for (int i = 0; i + 1 < t.k(); ++i) {
    out.y *= binom(t[i + 1], t[i]);
    out.z *= binom(t.n() - t[i], t.n() - t[i + 1]);
  }
  return out;
}

/// n! / max{y, z}.
inline BigInt n_permutations_ratio(const LevelTuple& t) {
  require(t.k() >= 2, Errc::InvalidParameter, "ratio form needs k >= 2");
  const YZ v = yz(t);
  const BigInt& denom = v.max();
  const BigInt nf = factorial(t.n());
  if (nf % denom != 0) throw Error(Errc::InvalidParameter, "n!/max{y,z} is not integral");
  return nf / denom;
}

/// Counts permutations π of [n] for which the chain lies, in order, on one
/// chain of π(D). Equivalently, π^{-1} maps every member onto one chain of D.
inline BigInt n_permutations_enumerate(const Decomposition& d, const Chain& chain) {
  const int n = d.n();
  require(n <= 7, Errc::TooLarge, "permutation enumeration limited to n <= 7");
  require(!chain.sets.empty() && chain.strictly_increasing(), Errc::InvalidChain,
          "chain must be non-empty and strictly increasing under inclusion");
  for (Word w : chain.sets) SubsetWord(w, n);

  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::uint64_t count = 0;
  do {
    const Permutation inv = Permutation(image).inverse();
    const auto first = d.locate(inv.apply(chain.sets.front()));
    bool on_one_chain = first.valid();
    std::uint32_t prev = first.position;
    for (std::size_t i = 1; i < chain.sets.size() && on_one_chain; ++i) {
      const auto loc = d.locate(inv.apply(chain.sets[i]));
      on_one_chain = loc.chain == first.chain && loc.position > prev;
      prev = loc.position;
    }
    if (on_one_chain) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

/// C(a+i+j, a+i) C(a+i, a) == C(a+i+j, a+j) C(a+j, a).
inline bool binomial_identity_holds(int a, int i, int j) {
  require(a >= 0 && i >= 0 && j >= 0 && a + i + j <= kMaxBinomN, Errc::InvalidParameter,
          "binomial identity needs a,i,j >= 0 and a+i+j <= 64");
  return binom(a + i + j, a + i) * binom(a + i, a) == binom(a + i + j, a + j) * binom(a + j, a);
}

/// Smallest possible max{y, z} over k-tuples of levels in [0, n].
inline BigInt min_max_yz(int n, int k) {
  detail::require_bound_range(n, k);
  return detail::middle_falling_product(n, k);
}

/// The unit-step tuple ending at ⌊(n+k)/2⌋.
inline LevelTuple predicted_yz_minimizer(int n, int k) {
  detail::require_bound_range(n, k);
  const int top = (n + k) / 2;
  std::vector<int> levels(k);
  for (int i = 0; i < k; ++i) levels[i] = top - (k - 1) + i;
  return LevelTuple(n, std::move(levels));
}

struct MinMaxYzVerification {
  BigInt formula_value;
  BigInt exhaustive_min;
  LevelTuple predicted;
  std::vector<LevelTuple> minimizers; // lexicographic order
  std::size_t tuples_checked = 0;
  std::size_t violations = 0;         // tuples with max{y,z} < formula_value
  std::vector<LevelTuple> violators;
  // Same minimization with spanning tuples (a_1 = 0, a_k = n, k <= n) left out.
  BigInt interior_min;
  std::vector<LevelTuple> interior_minimizers;
  std::size_t interior_violations = 0;

  bool predicted_attains() const {
    return std::find(minimizers.begin(), minimizers.end(), predicted) != minimizers.end();
  }
  bool ok() const { return violations == 0 && exhaustive_min == formula_value && predicted_attains(); }
  bool interior_ok() const {
    return interior_violations == 0 && interior_min == formula_value &&
           std::find(interior_minimizers.begin(), interior_minimizers.end(), predicted) != interior_minimizers.end();
  }
};

/// a_1 = 0 and a_k = n with k <= n: no reduction step applies to both ends.
inline bool spans_lattice(const LevelTuple& t) { return t.front() == 0 && t.back() == t.n() && t.k() <= t.n(); }

/// Visits every strictly increasing k-tuple of levels in [0, n] in
/// lexicographic order.
template <class Visitor>
void for_each_level_tuple(int n, int k, Visitor&& visit) {
  if (k < 1 || k > n + 1) return;
  std::vector<int> levels(k);
  std::iota(levels.begin(), levels.end(), 0);
  while (true) {
    visit(LevelTuple(n, levels));
    int i = k - 1;
    while (i >= 0 && levels[i] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++levels[i];
    for (int j = i + 1; j < k; ++j) levels[j] = levels[j - 1] + 1;
  }
}

inline MinMaxYzVerification verify_min_max_yz(int n, int k) {
  MinMaxYzVerification v{min_max_yz(n, k), -1, predicted_yz_minimizer(n, k)};
  v.interior_min = -1;
  auto track = [](BigInt& best, std::vector<LevelTuple>& args, const BigInt& m, const LevelTuple& t) {
    if (best < 0 || m < best) {
      best = m;
      args.clear();
    }
    if (m == best) args.push_back(t);
  };
  for_each_level_tuple(n, k, [&](const LevelTuple& t) {
    ++v.tuples_checked;
    const BigInt m = yz(t).max();
    if (m < v.formula_value) {
      ++v.violations;
      v.violators.push_back(t);
    }
    track(v.exhaustive_min, v.minimizers, m, t);
    if (spans_lattice(t)) return;
    if (m < v.formula_value) ++v.interior_violations;
    track(v.interior_min, v.interior_minimizers, m, t);
  });
  return v;
}

/// One step of the y/z reduction: `reordered` has the same a_1 and the same
/// multiset of differences (hence the same y and z), with the chosen large
/// difference moved to the end (for y) or the front (for z); `reduced`
/// shrinks that difference to 1.
struct ReductionStep {
  LevelTuple original;
  LevelTuple reordered;
  LevelTuple reduced;
};

namespace detail {

inline std::optional<std::size_t> first_large_difference(const std::vector<int>& diffs) {
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (diffs[i] >= 2) return i;
  return std::nullopt;
}

} // namespace detail

/// Applicable when some difference is >= 2 and, after reordering, a_{k-1} > 0.
inline std::optional<ReductionStep> reduce_y(const LevelTuple& t) {
  require(t.k() >= 2, Errc::InvalidParameter, "reduction needs k >= 2");
  auto diffs = t.differences();
  const auto big = detail::first_large_difference(diffs);
  if (!big) return std::nullopt;
  std::rotate(diffs.begin() + static_cast<std::ptrdiff_t>(*big), diffs.begin() + static_cast<std::ptrdiff_t>(*big) + 1,
              diffs.end());
  LevelTuple reordered = LevelTuple::from_differences(t.n(), t.front(), diffs);
  if (reordered[reordered.k() - 2] <= 0) return std::nullopt;
  diffs.back() = 1;
  return ReductionStep{t, reordered, LevelTuple::from_differences(t.n(), t.front(), diffs)};
}

/// Applicable when some difference is >= 2 and, after reordering, a_2 < n.
inline std::optional<ReductionStep> reduce_z(const LevelTuple& t) {
  require(t.k() >= 2, Errc::InvalidParameter, "reduction needs k >= 2");
  auto diffs = t.differences();
  const auto big = detail::first_large_difference(diffs);
  if (!big) return std::nullopt;
  std::rotate(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(*big),
              diffs.begin() + static_cast<std::ptrdiff_t>(*big) + 1);
  LevelTuple reordered = LevelTuple::from_differences(t.n(), t.front(), diffs);
  if (reordered[1] >= t.n()) return std::nullopt;
  const int a2 = reordered[1];
  diffs.front() = 1;
  return ReductionStep{t, reordered, LevelTuple::from_differences(t.n(), a2 - 1, diffs)};
}

// ---------------------------------------------------------------------------
// Extremal family

/// Picks x words out of the candidate row (given in colex order).
using RowSelector = std::function<std::vector<Word>(std::span<const Word> candidates, std::size_t x)>;

inline std::vector<Word> colex_selector(std::span<const Word> candidates, std::size_t x) {
  return {candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(x)};
}

struct ExtremalLayout {
  LevelInterval base;      // B(n,k-1)
  Variant base_variant;
  int added_level;         // the row the x extra sets come from
  LevelInterval combined;  // base ∪ {added_level}, a variant of B(n,k)
};

/// Chooses the B(n,k-1) variant on the far side of the added row so that
/// together they fill k contiguous middle levels.
inline ExtremalLayout extremal_layout(int n, int k) {
  const int added = added_row_level(n, k);
  for (Variant v : {Variant::Floor, Variant::Ceil}) {
    const LevelInterval base = middle_levels(n, k - 1, v);
    LevelInterval combined;
    if (added == base.lo - 1) combined = {added, base.hi};
    else if (added == base.hi + 1) combined = {base.lo, added};
    else continue;
    if (combined == middle_levels(n, k, Variant::Floor) || combined == middle_levels(n, k, Variant::Ceil))
      return {base, v, added, combined};
  }
  throw Error(Errc::InvalidParameter, "no contiguous middle layout for n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k));
}

/// B(n,k-1) plus x sets from the added row.
inline Family build_extremal_family(int n, int k, std::size_t x, const RowSelector& selector = colex_selector) {
  require_ground_size(n);
  const ExtremalLayout layout = extremal_layout(n, k);
  require(BigInt(x) <= tight_x_max(n, k), Errc::InvalidParameter,
          "x=" + std::to_string(x) + " exceeds tight_x_max=" + tight_x_max(n, k).str());
  Family f = build_level_family(n, layout.base);
  const auto row = words_of_level(n, layout.added_level);
  const auto chosen = selector(row, x);
  require(chosen.size() == x, Errc::InvalidParameter, "selector returned the wrong number of sets");
  for (Word w : chosen) {
    require(level(w) == layout.added_level && w < f.universe(), Errc::InvalidParameter,
            "selector returned a set outside the added row");
    require(!f.contains(w), Errc::InvalidParameter, "selector returned a set twice");
    f.insert(w);
  }
  return f;
}

} // namespace supersat

#endif // SUPERSAT_THEOREM_HPP
