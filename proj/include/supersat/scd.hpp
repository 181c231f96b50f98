#ifndef SUPERSAT_SCD_HPP
#define SUPERSAT_SCD_HPP

// Symmetric chain decompositions of 2^[n]: the inductive construction, the
// bracketing construction, validation, and the action of permutations of [n].

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "supersat/core.hpp"

namespace supersat {

struct Chain {
  std::vector<Word> sets;

  std::size_t length() const { return sets.size(); }
  int min_level() const { return sets.empty() ? -1 : level(sets.front()); }
  int max_level() const { return sets.empty() ? -1 : level(sets.back()); }

  /// sets[i] ⊊ sets[i+1] for all i.
  bool strictly_increasing() const {
    for (std::size_t i = 1; i < sets.size(); ++i)
      if (!is_proper_subset(sets[i - 1], sets[i])) return false;
    return true;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainLocation {
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t chain = kNone;
  std::uint32_t position = 0;

  bool valid() const { return chain != kNone; }
  friend bool operator==(const ChainLocation&, const ChainLocation&) = default;
};

/// A permutation of [n]; image[i] is the image of element i+1 (1-based values).
class Permutation {
public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    require_ground_size(n);
    std::vector<bool> seen(n + 1, false);
    for (int v : image_) {
      require(v >= 1 && v <= n && !seen[v], Errc::InvalidParameter, "permutation image is not a bijection on [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  int n() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator()(int element) const { return image_[element - 1]; }

  Word apply(Word w) const {
    Word out = 0;
    for (int i = 0; i < n(); ++i)
      if ((w >> i) & 1U) out |= Word{1} << (image_[i] - 1);
    return out;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < n(); ++i) inv[image_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

/// outer ∘ inner: first apply inner, then outer.
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  require(outer.n() == inner.n(), Errc::SizeMismatch, "compose: permutations of different size");
  std::vector<int> image(inner.n());
  for (int i = 1; i <= inner.n(); ++i) image[i - 1] = outer(inner(i));
  return Permutation(std::move(image));
}

/// A collection of chains over 2^[n] with a subset -> (chain, position)
/// locator. Chains are kept sorted by (min level, smallest member word).
class Decomposition {
public:
  Decomposition() = default;

  /// Builds the locator without validating; see validate_scd.
  static Decomposition from_chains(int n, std::vector<Chain> chains) {
    require_ground_size(n);
    auto key = [](const Chain& c) {
      int lo = std::numeric_limits<int>::max();
      Word smallest = std::numeric_limits<Word>::max();
      for (Word w : c.sets) {
        lo = std::min(lo, level(w));
        smallest = std::min(smallest, w);
      }
      return std::pair{lo, smallest};
    };
    std::stable_sort(chains.begin(), chains.end(),
                     [&](const Chain& a, const Chain& b) { return key(a) < key(b); });

    Decomposition d;
    d.n_ = n;
    d.chains_ = std::move(chains);
    d.locator_.assign(std::size_t{1} << n, ChainLocation{});
    for (std::size_t ci = 0; ci < d.chains_.size(); ++ci) {
      const auto& sets = d.chains_[ci].sets;
      for (std::size_t p = 0; p < sets.size(); ++p)
        if (sets[p] < d.locator_.size())
          d.locator_[sets[p]] = {static_cast<std::uint32_t>(ci), static_cast<std::uint32_t>(p)};
    }
    return d;
  }

  int n() const { return n_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const std::vector<ChainLocation>& locator() const { return locator_; }

  ChainLocation locate(Word w) const { return w < locator_.size() ? locator_[w] : ChainLocation{}; }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.n_ == b.n_ && a.chains_ == b.chains_;
  }

private:
  int n_ = 0;
  std::vector<Chain> chains_;
  std::vector<ChainLocation> locator_;
};

/// de Bruijn / van Ebbenhorst Tengbergen / Kruyswijk: every chain
/// (S_m..S_top) of 2^[n-1] becomes (S_m..S_top, S_top+{n}) and, if it has at
/// least two sets, (S_m+{n}..S_{top-1}+{n}).
inline Decomposition scd_inductive(int n) {
  require_ground_size(n);
  std::vector<Chain> chains{Chain{{Word{0}, Word{1}}}};
  for (int m = 2; m <= n; ++m) {
    const Word bit = Word{1} << (m - 1);
    std::vector<Chain> next;
    next.reserve(chains.size() * 2);
    for (const auto& c : chains) {
      Chain grown = c;
      grown.sets.push_back(c.sets.back() | bit);
      if (c.sets.size() >= 2) {
        Chain shifted;
        shifted.sets.reserve(c.sets.size() - 1);
        for (std::size_t i = 0; i + 1 < c.sets.size(); ++i) shifted.sets.push_back(c.sets[i] | bit);
        next.push_back(std::move(shifted));
      }
      next.push_back(std::move(grown));
    }
    chains = std::move(next);
  }
  return Decomposition::from_chains(n, std::move(chains));
}

struct ChainPosition {
  Chain chain;
  std::size_t position = 0;
};

/// Greene–Kleitman bracketing chain through `a`, computed locally.
/// Elements of `a` read as ')' and non-elements as '('; matched pairs stay
/// fixed and the u unmatched positions run through )^j (^(u-j), j = 0..u.
inline ChainPosition bracket_chain(int n, Word a) {
  SubsetWord checked(a, n);
  std::vector<int> open;
  std::vector<int> unmatched;
  Word matched = 0;
  for (int i = 0; i < n; ++i) {
    if ((a >> i) & 1U) {
      if (!open.empty()) {
        matched |= (Word{1} << open.back()) | (Word{1} << i);
        open.pop_back();
      } else {
        unmatched.push_back(i);
      }
    } else {
      open.push_back(i);
    }
  }
  const std::size_t closers = unmatched.size();
  unmatched.insert(unmatched.end(), open.begin(), open.end());

  ChainPosition out;
  out.position = closers;
  Word current = a & matched;
  out.chain.sets.reserve(unmatched.size() + 1);
  out.chain.sets.push_back(current);
  for (int pos : unmatched) {
    current |= Word{1} << pos;
    out.chain.sets.push_back(current);
  }
  return out;
}

inline Decomposition scd_bracketing(int n) {
  require_ground_size(n);
  std::vector<Chain> chains;
  for (Word a = 0; a < (Word{1} << n); ++a) {
    auto cp = bracket_chain(n, a);
    if (cp.position == 0) chains.push_back(std::move(cp.chain));
  }
  return Decomposition::from_chains(n, std::move(chains));
}

struct ScdCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ScdReport {
  std::vector<ScdCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ScdCheck& c) { return c.passed; });
  }

  bool passed(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c.passed;
    return false;
  }
};

inline ScdReport validate_scd(const Decomposition& d) {
  const int n = d.n();
  const std::size_t universe = std::size_t{1} << n;
  ScdReport report;

  ScdCheck partition{"partition"};
  std::vector<std::uint8_t> hits(universe, 0);
  for (const auto& c : d.chains()) {
    for (Word w : c.sets) {
      if (w >= universe) {
        partition.passed = false;
        partition.detail = "word outside 2^[n]";
      } else if (hits[w]++ != 0) {
        partition.passed = false;
        partition.detail = "subset {" + format_subset(w) + "} on more than one chain";
      }
    }
  }
  for (Word w = 0; w < universe && partition.passed; ++w) {
    if (hits[w] == 0) {
      partition.passed = false;
      partition.detail = "subset {" + format_subset(w) + "} missing";
    }
  }
  report.checks.push_back(partition);

  ScdCheck skipless{"skipless"};
  ScdCheck symmetric{"symmetric"};
  for (std::size_t ci = 0; ci < d.chains().size(); ++ci) {
    const auto& sets = d.chains()[ci].sets;
    for (std::size_t i = 1; i < sets.size() && skipless.passed; ++i) {
      if (!is_proper_subset(sets[i - 1], sets[i]) || level(sets[i]) != level(sets[i - 1]) + 1) {
        skipless.passed = false;
        skipless.detail = "chain " + std::to_string(ci) + " skips between positions " + std::to_string(i - 1) +
                          " and " + std::to_string(i);
      }
    }
    if (symmetric.passed && (sets.empty() || level(sets.front()) + level(sets.back()) != n)) {
      symmetric.passed = false;
      symmetric.detail = "chain " + std::to_string(ci) + " is not symmetric about n/2";
    }
  }
  report.checks.push_back(skipless);
  report.checks.push_back(symmetric);

  ScdCheck count{"chain_count"};
  const BigInt expected = binom(n, n / 2);
  if (BigInt(d.chains().size()) != expected) {
    count.passed = false;
    count.detail = std::to_string(d.chains().size()) + " chains, expected " + expected.str();
  }
  report.checks.push_back(count);

  ScdCheck locator{"locator"};
  if (d.locator().size() != universe) {
    locator.passed = false;
    locator.detail = "locator size differs from 2^n";
  } else {
    for (std::size_t ci = 0; ci < d.chains().size() && locator.passed; ++ci) {
      const auto& sets = d.chains()[ci].sets;
      for (std::size_t p = 0; p < sets.size(); ++p) {
        if (sets[p] >= universe || d.locate(sets[p]) != ChainLocation{static_cast<std::uint32_t>(ci),
                                                                      static_cast<std::uint32_t>(p)}) {
          locator.passed = false;
          locator.detail = "locator disagrees with chain " + std::to_string(ci);
          break;
        }
      }
    }
    for (Word w = 0; w < universe && locator.passed; ++w) {
      const auto loc = d.locate(w);
      if (!loc.valid() || loc.chain >= d.chains().size() || loc.position >= d.chains()[loc.chain].sets.size() ||
          d.chains()[loc.chain].sets[loc.position] != w) {
        locator.passed = false;
        locator.detail = "no valid location for {" + format_subset(w) + "}";
      }
    }
  }
  report.checks.push_back(locator);
  return report;
}

/// π(D): every set of every chain mapped elementwise by π.
inline Decomposition permute_decomposition(const Decomposition& d, const Permutation& pi) {
  require(pi.n() == d.n(), Errc::SizeMismatch, "permutation size differs from decomposition size");
  std::vector<Chain> chains;
  chains.reserve(d.chains().size());
  for (const auto& c : d.chains()) {
    Chain mapped;
    mapped.sets.reserve(c.sets.size());
    for (Word w : c.sets) mapped.sets.push_back(pi.apply(w));
    chains.push_back(std::move(mapped));
  }
  return Decomposition::from_chains(d.n(), std::move(chains));
}

inline ChainLocation chain_through(const Decomposition& d, const SubsetWord& a) {
  require(a.n() == d.n(), Errc::SizeMismatch, "subset and decomposition have different n");
  const auto loc = d.locate(a.bits());
  require(loc.valid(), Errc::InvalidParameter, "decomposition does not cover {" + format_subset(a.bits()) + "}");
  return loc;
}

/// Number of chains with at least one set at level a and one at level b.
inline std::size_t chains_spanning(const Decomposition& d, int a, int b) {
  std::size_t count = 0;
  for (const auto& c : d.chains()) {
    bool has_a = false, has_b = false;
    for (Word w : c.sets) {
      has_a = has_a || level(w) == a;
      has_b = has_b || level(w) == b;
    }
    if (has_a && has_b) ++count;
  }
  return count;
}

/// Reports whether the two constructions give the same decomposition.
inline bool constructions_coincide(int n) { return scd_inductive(n) == scd_bracketing(n); }

/// One chain per line, sets joined by " -> ".
inline std::string dump_decomposition(const Decomposition& d) {
  std::string out;
  for (const auto& c : d.chains()) {
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      if (i) out += " -> ";
      out += format_subset(c.sets[i]);
    }
    out += '\n';
  }
  return out;
}

} // namespace supersat

#endif // SUPERSAT_SCD_HPP
