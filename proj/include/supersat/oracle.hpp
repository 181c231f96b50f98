#ifndef SUPERSAT_ORACLE_HPP
#define SUPERSAT_ORACLE_HPP

// Ground truth at small n. The exact mode sweeps every family of 2^[n]
// (n <= 4, 2^16 families); the heuristic mode anneals single-set swaps
// starting from the centered construction and only ever reports an upper
// bound on the true minimum.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "supersat/core.hpp"
#include "supersat/counting.hpp"
#include "supersat/theorem.hpp"

namespace supersat {

struct OracleResult {
  int n = 0;
  int k = 0;
  std::size_t m = 0;
  BigInt min_count = 0;
  Family witness;
  bool exact = false;
};

inline constexpr int kMaxExactN = 4;
inline constexpr int kMaxHeuristicN = 10;

namespace detail {

inline void require_oracle_params(int n, int k, int max_n) {
  require(n >= 1 && n <= max_n, Errc::TooLarge,
          "oracle supports 1 <= n <= " + std::to_string(max_n) + ", got n=" + std::to_string(n));
  require_chain_length(k);
}

/// Minimum over all families of each size (or only size `only_m`). Families
/// are visited as integer membership masks in increasing order and the first
/// minimum is kept, so the witness is the smallest mask attaining it.
inline std::vector<std::optional<OracleResult>> exact_sweep(int n, int k, std::optional<std::size_t> only_m) {
  require_oracle_params(n, k, kMaxExactN);
  const std::size_t universe = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << universe;
  std::vector<std::optional<Wide>> best(universe + 1);
  std::vector<std::uint64_t> witness(universe + 1, 0);
  std::vector<std::uint8_t> flags(universe);
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    if (only_m && m != *only_m) continue;
    for (std::size_t s = 0; s < universe; ++s) flags[s] = (mask >> s) & 1U;
    const Wide c = count_chains_flags(n, flags, k);
    if (!best[m] || c < *best[m]) {
      best[m] = c;
      witness[m] = mask;
    }
  }
  std::vector<std::optional<OracleResult>> out(universe + 1);
  for (std::size_t m = 0; m <= universe; ++m) {
    if (!best[m]) continue;
    Family w(n);
    for (std::size_t s = 0; s < universe; ++s)
      if ((witness[m] >> s) & 1U) w.insert(static_cast<Word>(s));
    out[m] = OracleResult{n, k, m, to_big(*best[m]), std::move(w), true};
  }
  return out;
}

inline void require_size(int n, std::size_t m) {
  require(m <= (std::size_t{1} << n), Errc::InvalidParameter,
          "family size " + std::to_string(m) + " exceeds 2^n");
}

} // namespace detail

inline OracleResult min_chain_count_exact(int n, int k, std::size_t m) {
  detail::require_oracle_params(n, k, kMaxExactN);
  detail::require_size(n, m);
  return *detail::exact_sweep(n, k, m)[m];
}

/// Exact minimum for every size m = 0..2^n from a single sweep.
inline std::vector<OracleResult> exact_min_table(int n, int k) {
  auto rows = detail::exact_sweep(n, k, std::nullopt);
  std::vector<OracleResult> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

struct FreeFamily {
  std::size_t size = 0;
  Family witness;
};

/// Largest k-chain-free family.
inline FreeFamily max_free_family(int n, int k) {
  const auto table = exact_min_table(n, k);
  FreeFamily best{0, table.front().witness};
  for (const auto& row : table)
    if (row.min_count == 0) best = {row.m, row.witness};
  return best;
}

// ---------------------------------------------------------------------------
// Centered construction

struct CenteredConstruction {
  Family family;
  LevelInterval full_levels;
  std::optional<int> partial_level;
  BigInt count = 0;
};

/// Full middle levels plus a colex-first partial row next to them. When the
/// choice of variants is open every admissible layout is tried and the one
/// with the fewest k-chains is kept; the layout build_extremal_family uses
/// is tried first and wins ties.
inline CenteredConstruction centered_construction(int n, int k, std::size_t m) {
  require_ground_size(n);
  detail::require_chain_length(k);
  detail::require_size(n, m);

  int full = 0;
  while (full <= n && sigma(n, full + 1) <= BigInt(m)) ++full;
  const std::size_t x = m - static_cast<std::size_t>(sigma(n, full));

  struct Layout {
    LevelInterval base;
    std::optional<int> partial;
  };
  std::vector<Layout> layouts;
  auto add_layout = [&](Layout l) {
    for (const auto& e : layouts)
      if (e.base == l.base && e.partial == l.partial) return;
    layouts.push_back(l);
  };

  if (x == 0) {
    if (full == 0) add_layout({{0, -1}, std::nullopt});
    else
      for (Variant v : {Variant::Floor, Variant::Ceil}) add_layout({middle_levels(n, full, v), std::nullopt});
  } else if (full == 0) {
    for (Variant v : {Variant::Floor, Variant::Ceil}) add_layout({{0, -1}, middle_levels(n, 1, v).lo});
  } else {
    const ExtremalLayout preferred = extremal_layout(n, full + 1);
    add_layout({preferred.base, preferred.added_level});
    for (Variant v : {Variant::Floor, Variant::Ceil}) {
      const LevelInterval base = middle_levels(n, full, v);
      for (int partial : {base.lo - 1, base.hi + 1}) {
        if (partial < 0 || partial > n) continue;
        const LevelInterval combined{std::min(base.lo, partial), std::max(base.hi, partial)};
        if (combined == middle_levels(n, full + 1, Variant::Floor) ||
            combined == middle_levels(n, full + 1, Variant::Ceil))
          add_layout({base, partial});
      }
    }
  }

  std::optional<CenteredConstruction> best;
  for (const auto& layout : layouts) {
    Family f = layout.base.empty() ? Family(n) : build_level_family(n, layout.base);
    if (layout.partial) {
      const auto row = words_of_level(n, *layout.partial);
      for (Word w : colex_selector(row, x)) f.insert(w);
    }
    BigInt c = count_k_chains(f, k).value;
    if (!best || c < best->count) best = CenteredConstruction{std::move(f), layout.base, layout.partial, c};
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Heuristic search

inline OracleResult min_chain_count_heuristic(int n, int k, std::size_t m, std::uint64_t seed,
                                              std::size_t iterations) {
  detail::require_oracle_params(n, k, kMaxHeuristicN);
  detail::require_size(n, m);
  const CenteredConstruction start = centered_construction(n, k, m);
  const std::size_t universe = std::size_t{1} << n;
  if (m == 0 || m == universe || iterations == 0) return {n, k, m, start.count, start.family, false};

  std::vector<std::uint8_t> flags = start.family.flags();
  std::vector<Word> inside, outside;
  for (std::size_t s = 0; s < universe; ++s) (flags[s] ? inside : outside).push_back(static_cast<Word>(s));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_in(0, inside.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_out(0, outside.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  detail::Wide current = detail::count_chains_flags(n, flags, k);
  detail::Wide best = current;
  std::vector<std::uint8_t> best_flags = flags;

  // Geometric cooling from roughly one chain-through-a-set down to near zero.
  const double t_start =
      k >= 2 && k <= n + 1 ? std::max(1.0, static_cast<double>(min_max_yz(n, k))) : 1.0;
  const double t_end = 0.05;
  const double cooling = std::pow(t_end / t_start, 1.0 / static_cast<double>(iterations));
  double temperature = t_start;

  for (std::size_t it = 0; it < iterations; ++it, temperature *= cooling) {
    const std::size_t i = pick_in(rng);
    const std::size_t o = pick_out(rng);
    std::swap(flags[inside[i]], flags[outside[o]]);
    const detail::Wide candidate = detail::count_chains_flags(n, flags, k);
    const double delta = static_cast<double>(candidate) - static_cast<double>(current);
    if (candidate <= current || unit(rng) < std::exp(-delta / temperature)) {
      std::swap(inside[i], outside[o]);
      current = candidate;
      if (current < best) {
        best = current;
        best_flags = flags;
      }
    } else {
      std::swap(flags[inside[i]], flags[outside[o]]);
    }
  }

  Family witness(n);
  for (std::size_t s = 0; s < universe; ++s)
    if (best_flags[s]) witness.insert(static_cast<Word>(s));
  return {n, k, m, detail::to_big(best), std::move(witness), false};
}

// ---------------------------------------------------------------------------
// Conjecture tables

struct KleitmanRow {
  std::size_t m = 0;
  BigInt min_count = 0;          // exact minimum, or the heuristic upper bound
  bool exact = false;
  BigInt construction_count = 0;
  bool equal = false;
  BigInt bound = 0;              // supersat_bound(n, k, max(0, m - Σ(n,k-1)))
  bool asserted = false;         // row falls in the range where equality is a theorem
  bool ok = true;
};

struct KleitmanReport {
  int n = 0;
  int k = 0;
  std::vector<KleitmanRow> rows;

  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const KleitmanRow& r) { return r.ok; });
  }
};

/// For k = 2 every row is asserted (Kleitman's theorem). For k >= 3 the rows
/// with m <= Σ(n,k) are asserted: min >= bound and min == construction.
inline KleitmanReport kleitman_report(int n, int k, std::uint64_t seed = 1, std::size_t iterations = 2000) {
  require(n >= 1 && n <= kMaxHeuristicN, Errc::TooLarge, "kleitman report supports n <= 10");
  detail::require_bound_range(n, k);
  const std::size_t universe = std::size_t{1} << n;
  const bool exact = n <= kMaxExactN;
  std::vector<OracleResult> table;
  if (exact) table = exact_min_table(n, k);

  const BigInt threshold = sigma(n, k - 1);
  const BigInt verified_limit = sigma(n, k);
  KleitmanReport report{n, k, {}};
  for (std::size_t m = 0; m <= universe; ++m) {
    KleitmanRow row;
    row.m = m;
    OracleResult r = exact ? table[m] : min_chain_count_heuristic(n, k, m, seed, iterations);
    row.min_count = r.min_count;
    row.exact = r.exact;
    row.construction_count = centered_construction(n, k, m).count;
    row.equal = row.min_count == row.construction_count;
    const BigInt surplus = BigInt(m) > threshold ? BigInt(m) - threshold : BigInt(0);
    row.bound = supersat_bound(n, k, surplus);
    row.asserted = k == 2 || BigInt(m) <= verified_limit;
    row.ok = !row.asserted || (row.equal && row.min_count >= row.bound);
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline std::string kleitman_tsv(const KleitmanReport& report) {
  std::string out = "m\tmin\texact\tconstruction\tequal\tbound\tasserted\tok\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.m) + '\t' + r.min_count.str() + '\t' + (r.exact ? "true" : "false") + '\t' +
           r.construction_count.str() + '\t' + (r.equal ? "true" : "false") + '\t' + r.bound.str() + '\t' +
           (r.asserted ? "true" : "false") + '\t' + (r.ok ? "true" : "false") + '\n';
  }
  return out;
}

} // namespace supersat

#endif // SUPERSAT_ORACLE_HPP
