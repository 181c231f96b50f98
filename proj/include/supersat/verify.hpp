#ifndef SUPERSAT_VERIFY_HPP
#define SUPERSAT_VERIFY_HPP

// Property suites run by `supersat verify`. Each check records a pass flag and
// a short detail string; nothing here throws on a failed property.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "supersat/core.hpp"
#include "supersat/counting.hpp"
#include "supersat/scd.hpp"
#include "supersat/theorem.hpp"

namespace supersat {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

/// Uniform random family: every subset joins independently with probability p.
inline Family random_family(int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Family f(n);
  for (Word s = 0; s < f.universe(); ++s)
    if (coin(rng)) f.insert(s);
  return f;
}

/// Uniform random family of exactly m members.
inline Family random_family_of_size(int n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Word> all(std::size_t{1} << n);
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = static_cast<Word>(s);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return Family::from_words(n, all);
}

/// A random chain whose sets have exactly the given levels: a random
/// ordering of [n] read off at each level.
inline Chain random_chain_with_levels(int n, const std::vector<int>& levels, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Chain c;
  for (int l : levels) {
    Word w = 0;
    for (int i = 0; i < l; ++i) w |= Word{1} << order[i];
    c.sets.push_back(w);
  }
  return c;
}

/// A random k-chain in 2^[n]: random distinct levels, then random sets.
inline Chain random_chain(int n, int k, std::mt19937_64& rng) {
  std::vector<int> levels(n + 1);
  std::iota(levels.begin(), levels.end(), 0);
  std::shuffle(levels.begin(), levels.end(), rng);
  levels.resize(k);
  std::sort(levels.begin(), levels.end());
  return random_chain_with_levels(n, levels, rng);
}

/// Number of k-chains in all of 2^[n] as a sum of multinomials over level tuples.
inline BigInt full_lattice_chain_count(int n, int k) {
  BigInt total = 0;
  for_each_level_tuple(n, k, [&](const LevelTuple& t) {
    BigInt ways = factorial(n) / factorial(t.front()) / factorial(n - t.back());
    for (int d : t.differences()) ways /= factorial(d);
    total += ways;
  });
  return total;
}

namespace detail {

inline CheckResult pass(std::string detail = "ok") { return {{}, true, std::move(detail)}; }
inline CheckResult fail(std::string detail) { return {{}, false, std::move(detail)}; }

class SuiteBuilder {
public:
  explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

  void check(std::string name, const std::function<CheckResult()>& body) {
    CheckResult r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.name = std::move(name);
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

private:
  SuiteReport report_;
};

} // namespace detail

inline SuiteReport verify_scd_suite() {
  using detail::fail;
  using detail::pass;
  detail::SuiteBuilder s("scd");
  s.check("both constructions valid, n <= 14", [] {
    for (int n = 1; n <= 14; ++n) {
      if (!validate_scd(scd_inductive(n)).ok()) return fail("inductive fails at n=" + std::to_string(n));
      if (!validate_scd(scd_bracketing(n)).ok()) return fail("bracketing fails at n=" + std::to_string(n));
    }
    return pass();
  });
  s.check("chains by minimum level", [] {
    for (int n = 1; n <= 14; ++n) {
      for (const auto& d : {scd_inductive(n), scd_bracketing(n)}) {
        std::vector<BigInt> by_level(n + 1, 0);
        for (const auto& c : d.chains()) by_level[c.min_level()] += 1;
        for (int l = 0; l <= n / 2; ++l)
          if (by_level[l] != binom(n, l) - binom(n, l - 1))
            return fail("n=" + std::to_string(n) + " level " + std::to_string(l));
      }
    }
    return pass();
  });
  s.check("permutation group action, n <= 4", [] {
    for (int n = 1; n <= 4; ++n) {
      const auto d = scd_inductive(n);
      std::vector<int> p(n), t(n);
      std::iota(p.begin(), p.end(), 1);
      do {
        const Permutation pi(p);
        const auto pd = permute_decomposition(d, pi);
        std::iota(t.begin(), t.end(), 1);
        do {
          const Permutation tau(t);
          if (permute_decomposition(pd, tau) != permute_decomposition(d, compose(tau, pi)))
            return fail("action fails at n=" + std::to_string(n));
        } while (std::next_permutation(t.begin(), t.end()));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return pass();
  });
  s.check("chains through levels a and b = min{C(n,a), C(n,b)}, n <= 12", [] {
    for (int n = 1; n <= 12; ++n) {
      for (const auto& d : {scd_inductive(n), scd_bracketing(n)}) {
        for (int a = 0; a <= n; ++a)
          for (int b = a; b <= n - a; ++b)
            if (BigInt(chains_spanning(d, a, b)) != std::min(binom(n, a), binom(n, b)))
              return fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
    return pass();
  });
  s.check("constructions coincide (informational)", [] {
    std::string same, differ;
    for (int n = 1; n <= 10; ++n) (constructions_coincide(n) ? same : differ) += " " + std::to_string(n);
    return pass("equal for n =" + (same.empty() ? std::string(" none") : same) +
           "; different for n =" + (differ.empty() ? std::string(" none") : differ));
  });
  return s.take();
}

inline SuiteReport verify_counting_suite() {
  using detail::fail;
  using detail::pass;
  detail::SuiteBuilder s("counting");
  s.check("DP equals naive enumeration, n <= 6", [] {
    std::mt19937_64 rng(20120601);
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 100; ++trial) {
        const Family f = random_family(n, rng);
        for (int k = 1; k <= 4; ++k)
          if (count_k_chains(f, k).value != count_k_chains_naive(f, k).value)
            return fail("mismatch n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    return pass();
  });
  s.check("included chains never exceed all chains", [] {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 8; ++n) {
      const auto d = scd_inductive(n);
      for (int trial = 0; trial < 20; ++trial) {
        const Family f = random_family(n, rng);
        for (int k = 1; k <= 4; ++k)
          if (count_included_chains(f, d, k).value > count_k_chains(f, k).value)
            return fail("violated at n=" + std::to_string(n));
      }
    }
    return pass();
  });
  s.check("pigeonhole: included chains >= x", [] {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 10; ++n) {
      const Decomposition ds[] = {scd_inductive(n), scd_bracketing(n)};
      for (int k = 2; k <= std::min(4, n + 1); ++k) {
        const auto threshold = static_cast<std::size_t>(sigma(n, k - 1));
        const std::size_t universe = std::size_t{1} << n;
        for (int trial = 0; trial < 10; ++trial) {
          const std::size_t x = std::uniform_int_distribution<std::size_t>(0, universe - threshold)(rng);
          const Family f = random_family_of_size(n, threshold + x, rng);
          for (const auto& d : ds)
            if (count_included_chains(f, d, k).value < x) return fail("violated at n=" + std::to_string(n));
        }
      }
    }
    return pass();
  });
  s.check("full lattice equals multinomial sum, n <= 8", [] {
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n + 1; ++k)
        if (count_k_chains(Family::full(n), k).value != full_lattice_chain_count(n, k))
          return fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    return pass();
  });
  s.check("min-endpoint counts sum to the total", [] {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Family f = random_family(n, rng);
        for (int k = 1; k <= 4; ++k) {
          BigInt by_min = 0, by_max = 0;
          for (Word w : f.members()) {
            by_min += count_chains_with_min_endpoint(f, k, SubsetWord(w, n)).value;
            by_max += count_chains_with_max_endpoint(f, k, SubsetWord(w, n)).value;
          }
          const BigInt total = count_k_chains(f, k).value;
          if (by_min != total || by_max != total) return fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    return pass();
  });
  return s.take();
}

inline SuiteReport verify_theorem_suite() {
  using detail::fail;
  using detail::pass;
  detail::SuiteBuilder s("theorem");
  s.check("N: enumeration = factorial form = ratio form, n <= 6", [] {
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 6; ++n) {
      const Decomposition ds[] = {scd_inductive(n), scd_bracketing(n)};
      for (int k = 2; k <= std::min(4, n + 1); ++k)
        for (int trial = 0; trial < 20; ++trial) {
          const Chain c = random_chain(n, k, rng);
          std::vector<int> levels;
          for (Word w : c.sets) levels.push_back(level(w));
          const LevelTuple t(n, levels);
          const BigInt fac = n_permutations_factorial(t);
          if (fac != n_permutations_ratio(t)) return fail("closed forms differ at n=" + std::to_string(n));
          for (const auto& d : ds)
            if (n_permutations_enumerate(d, c) != fac) return fail("enumeration differs at n=" + std::to_string(n));
        }
    }
    return pass();
  });
  s.check("max{y,z} minimized by the unit tuple ending at floor((n+k)/2), non-spanning tuples, n <= 12", [] {
    for (int n = 1; n <= 12; ++n)
      for (int k = 2; k <= std::min(4, n + 1); ++k)
        if (!verify_min_max_yz(n, k).interior_ok()) return fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    return pass();
  });
  s.check("spanning tuples below the formula (informational)", [] {
    std::size_t below = 0;
    for (int n = 1; n <= 12; ++n)
      for (int k = 2; k <= std::min(4, n + 1); ++k) below += verify_min_max_yz(n, k).violations;
    return pass(std::to_string(below) + " tuples with a_1 = 0, a_k = n have max{y,z} < formula");
  });
  s.check("binomial identity, a+i+j <= 20", [] {
    for (int a = 0; a <= 20; ++a)
      for (int i = 0; a + i <= 20; ++i)
        for (int j = 0; a + i + j <= 20; ++j)
          if (!binomial_identity_holds(a, i, j)) return fail("fails at " + std::to_string(a));
    return pass();
  });
  s.check("reduction steps strictly decrease y and z, n <= 10", [] {
    for (int n = 1; n <= 10; ++n)
      for (int k = 2; k <= std::min(4, n + 1); ++k) {
        std::string bad;
        for_each_level_tuple(n, k, [&](const LevelTuple& t) {
          const YZ base = yz(t);
          if (auto step = reduce_y(t)) {
            const YZ re = yz(step->reordered);
            if (re.y != base.y || re.z != base.z || !(yz(step->reduced).y < base.y)) bad = "y";
          }
          if (auto step = reduce_z(t)) {
            const YZ re = yz(step->reordered);
            if (re.y != base.y || re.z != base.z || !(yz(step->reduced).z < base.z)) bad = "z";
          }
        });
        if (!bad.empty()) return fail(bad + " reduction fails at n=" + std::to_string(n));
      }
    return pass();
  });
  s.check("extremal family attains the bound, n <= 10", [] {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 10; ++n)
      for (int k = 2; k <= std::min(4, n + 1); ++k) {
        const auto xmax = static_cast<std::size_t>(tight_x_max(n, k));
        for (std::size_t x : {std::size_t{0}, std::size_t{1}, xmax}) {
          if (x > xmax) continue;
          RowSelector shuffled = [&rng](std::span<const Word> row, std::size_t count) {
            std::vector<Word> v(row.begin(), row.end());
            std::shuffle(v.begin(), v.end(), rng);
            v.resize(count);
            return v;
          };
          const BigInt expected = supersat_bound(n, k, x);
          if (count_k_chains(build_extremal_family(n, k, x), k).value != expected ||
              count_k_chains(build_extremal_family(n, k, x, shuffled), k).value != expected)
            return fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " x=" + std::to_string(x));
        }
      }
    return pass();
  });
  return s.take();
}

inline SuiteReport run_suite(const std::string& name) {
  if (name == "scd") return verify_scd_suite();
  if (name == "counting") return verify_counting_suite();
  if (name == "theorem") return verify_theorem_suite();
  throw Error(Errc::InvalidParameter, "unknown suite '" + name + "'");
}

} // namespace supersat

#endif // SUPERSAT_VERIFY_HPP
