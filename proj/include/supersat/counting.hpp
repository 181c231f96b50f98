#ifndef SUPERSAT_COUNTING_HPP
#define SUPERSAT_COUNTING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supersat/core.hpp"
#include "supersat/scd.hpp"

namespace supersat {

struct ChainCount {
  int n = 0;
  int k = 0;
  BigInt value = 0;
};

namespace detail {

// Every k-chain count with n <= 20 is below (n+2)^n < 2^128.
using Wide = unsigned __int128;

inline Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "chain count exceeds 128 bits");
  return r;
}

inline BigInt to_big(Wide v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

inline void require_chain_length(int k) {
  require(k >= 1, Errc::InvalidParameter, "chain length k=" + std::to_string(k) + " must be >= 1");
}

/// Number of k-chains among the flagged subsets of 2^[n].
///
/// ends[s] holds the number of j-chains whose top element is s. Going from j
/// to j+1 takes the subset-sum (zeta) transform over all A ⊆ s, drops the
/// A = s term and masks by membership, so each round is O(n 2^n).
inline Wide count_chains_flags(int n, std::span<const std::uint8_t> member, int k) {
  require_chain_length(k);
  if (k > n + 1) return 0;
  const std::size_t universe = std::size_t{1} << n;
  std::vector<Wide> ends(universe), sums(universe);
  for (std::size_t s = 0; s < universe; ++s) ends[s] = member[s] ? 1 : 0;
  for (int j = 2; j <= k; ++j) {
    sums = ends;
    for (int b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t s = 0; s < universe; ++s)
        if (s & bit) sums[s] = checked_add(sums[s], sums[s ^ bit]);
    }
    for (std::size_t s = 0; s < universe; ++s) ends[s] = member[s] ? sums[s] - ends[s] : 0;
  }
  Wide total = 0;
  for (std::size_t s = 0; s < universe; ++s) total = checked_add(total, ends[s]);
  return total;
}

inline std::uint64_t naive_extend(const std::vector<Word>& members, Word below, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (Word w : members)
    if (is_proper_subset(below, w)) total += naive_extend(members, w, remaining - 1);
  return total;
}

} // namespace detail

/// Copies of the k-chain A_1 ⊊ ... ⊊ A_k inside F.
inline ChainCount count_k_chains(const Family& f, int k) {
  detail::require_chain_length(k);
  const auto flags = f.flags();
  return {f.n(), k, detail::to_big(detail::count_chains_flags(f.n(), flags, k))};
}

/// Direct enumeration over F^k; test oracle for count_k_chains.
inline ChainCount count_k_chains_naive(const Family& f, int k) {
  detail::require_chain_length(k);
  require(f.n() <= 8, Errc::TooLarge, "naive chain count limited to n <= 8");
  const auto members = f.members();
  std::uint64_t total = 0;
  for (Word first : members) total += detail::naive_extend(members, first, k - 1);
  return {f.n(), k, BigInt(total)};
}

/// k-chains of F lying on a single chain of D: sum over chains of C(|c ∩ F|, k).
inline ChainCount count_included_chains(const Family& f, const Decomposition& d, int k) {
  detail::require_chain_length(k);
  require(f.n() == d.n(), Errc::SizeMismatch, "family and decomposition have different n");
  BigInt total = 0;
  for (const auto& c : d.chains()) {
    int hits = 0;
    for (Word w : c.sets) hits += f.contains(w) ? 1 : 0;
    total += binom(hits, k);
  }
  return {f.n(), k, total};
}

namespace detail {

inline ChainCount endpoint_count(const Family& f, int k, const SubsetWord& a, bool a_is_min) {
  require_chain_length(k);
  require(a.n() == f.n(), Errc::SizeMismatch, "subset and family have different n");
  require(f.contains(a.bits()), Errc::NotInFamily, "endpoint {" + format_subset(a.bits()) + "} is not in F");
  if (k == 1) return {f.n(), k, 1};
  // The remaining k-1 sets form a chain among the members strictly above
  // (resp. below) a, and any such chain extends by a.
  std::vector<std::uint8_t> flags(f.universe(), 0);
  for (Word s = 0; s < f.universe(); ++s) {
    const bool related = a_is_min ? is_proper_subset(a.bits(), s) : is_proper_subset(s, a.bits());
    flags[s] = related && f.contains(s) ? 1 : 0;
  }
  return {f.n(), k, to_big(count_chains_flags(f.n(), flags, k - 1))};
}

} // namespace detail

inline ChainCount count_chains_with_min_endpoint(const Family& f, int k, const SubsetWord& a) {
  return detail::endpoint_count(f, k, a, true);
}

inline ChainCount count_chains_with_max_endpoint(const Family& f, int k, const SubsetWord& a) {
  return detail::endpoint_count(f, k, a, false);
}

} // namespace supersat

#endif // SUPERSAT_COUNTING_HPP
