#ifndef SUPERSAT_CORE_HPP
#define SUPERSAT_CORE_HPP

// Boolean-lattice fundamentals: subsets as machine words, families as flat
// membership bitsets over all 2^n subsets, exact binomials and the middle
// level families B(n,k) with their sizes.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supersat/error.hpp"

namespace supersat {

using BigInt = boost::multiprecision::cpp_int;

/// Raw subset encoding: element i of [n] is bit i-1.
using Word = std::uint32_t;

inline constexpr int kMaxN = 20;
inline constexpr int kMaxBinomN = 64;

inline int level(Word w) { return std::popcount(w); }

inline bool is_subset(Word a, Word b) { return (a & ~b) == 0; }
inline bool is_proper_subset(Word a, Word b) { return a != b && is_subset(a, b); }

inline void require_ground_size(int n) {
  require(n >= 1 && n <= kMaxN, Errc::InvalidParameter,
          "ground-set size n=" + std::to_string(n) + " outside [1," + std::to_string(kMaxN) + "]");
}

/// A validated subset of [n].
class SubsetWord {
public:
  SubsetWord(Word bits, int n) : bits_(bits), n_(n) {
    require_ground_size(n);
    require((static_cast<std::uint64_t>(bits) >> n) == 0, Errc::ElementOutOfRange,
            "subset word has bits at or above position n=" + std::to_string(n));
  }

  static SubsetWord from_elements(int n, std::initializer_list<int> elements) {
    require_ground_size(n);
    Word bits = 0;
    for (int e : elements) {
      require(e >= 1 && e <= n, Errc::ElementOutOfRange,
              "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
      bits |= Word{1} << (e - 1);
    }
    return SubsetWord(bits, n);
  }

  Word bits() const { return bits_; }
  int n() const { return n_; }
  int level() const { return std::popcount(bits_); }
  bool has(int element) const { return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U); }

  friend bool operator==(const SubsetWord&, const SubsetWord&) = default;

private:
  Word bits_;
  int n_;
};

/// Inclusive range of levels [lo, hi].
struct LevelInterval {
  int lo = 0;
  int hi = -1;

  int rows() const { return hi - lo + 1; }
  bool contains(int l) const { return l >= lo && l <= hi; }
  bool empty() const { return hi < lo; }

  friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

enum class Variant { Floor, Ceil };

inline const char* variant_name(Variant v) { return v == Variant::Floor ? "floor" : "ceil"; }

/// A set family F ⊆ 2^[n], stored as a bitset indexed by subset word.
class Family {
public:
  Family() = default;

  explicit Family(int n) : n_(n) {
    require_ground_size(n);
    blocks_.assign(std::max<std::size_t>(1, universe() / 64), 0);
  }

  static Family full(int n) {
    Family f(n);
    for (Word s = 0; s < f.universe(); ++s) f.insert(s);
    return f;
  }

  template <class Range>
  static Family from_words(int n, const Range& words) {
    Family f(n);
    for (Word w : words) f.insert(w);
    return f;
  }

  static Family from_words(int n, std::initializer_list<Word> words) {
    Family f(n);
    for (Word w : words) f.insert(w);
    return f;
  }

  int n() const { return n_; }
  std::size_t universe() const { return std::size_t{1} << n_; }

  bool contains(Word w) const {
    return w < universe() && !blocks_.empty() && ((blocks_[w >> 6] >> (w & 63)) & 1U);
  }

  void insert(Word w) {
    require(w < universe(), Errc::ElementOutOfRange, "subset word outside 2^[n]");
    blocks_[w >> 6] |= std::uint64_t{1} << (w & 63);
  }

  void erase(Word w) {
    if (w < universe()) blocks_[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
    return total;
  }

  /// Members in increasing word order.
  std::vector<Word> members() const {
    std::vector<Word> out;
    out.reserve(size());
    for (Word s = 0; s < universe(); ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

  /// One byte per subset, 1 for members.
  std::vector<std::uint8_t> flags() const {
    std::vector<std::uint8_t> out(universe(), 0);
    for (Word s = 0; s < universe(); ++s) out[s] = contains(s) ? 1 : 0;
    return out;
  }

  friend bool operator==(const Family&, const Family&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Exact C(n, j); zero outside 0 <= j <= n.
inline BigInt binom(int n, int j) {
  require(n >= 0 && n <= kMaxBinomN, Errc::InvalidParameter,
          "binom: n=" + std::to_string(n) + " outside [0,64]");
  if (j < 0 || j > n) return 0;
  j = std::min(j, n - j);
  BigInt r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(int n) {
  require(n >= 0 && n <= kMaxBinomN, Errc::InvalidParameter, "factorial: n outside [0,64]");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace detail {

inline int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
inline int ceil_half(int v) { return -floor_half(-v); }

inline void require_formula_n(int n) {
  require(n >= 1 && n <= kMaxBinomN, Errc::InvalidParameter,
          "n=" + std::to_string(n) + " outside [1,64]");
}

} // namespace detail

/// The k middle levels of 2^[n]. The two variants coincide iff n-k is even.
inline LevelInterval middle_levels(int n, int k, Variant variant = Variant::Floor) {
  detail::require_formula_n(n);
  require(k >= 1 && k <= n + 1, Errc::InvalidParameter,
          "middle_levels: k=" + std::to_string(k) + " outside [1,n+1]");
  if (variant == Variant::Floor)
    return {detail::floor_half(n - k + 1), detail::floor_half(n + k - 1)};
  return {detail::ceil_half(n - k + 1), detail::ceil_half(n + k - 1)};
}

/// Sum of the k largest binomial coefficients C(n, .).
inline BigInt sigma(int n, int k) {
  detail::require_formula_n(n);
  require(k >= 0 && k <= n + 1, Errc::InvalidParameter,
          "sigma: k=" + std::to_string(k) + " outside [0,n+1]");
  if (k == 0) return 0;
  const LevelInterval iv = middle_levels(n, k, Variant::Floor);
  BigInt total = 0;
  for (int l = iv.lo; l <= iv.hi; ++l) total += binom(n, l);
  return total;
}

/// All subsets whose level lies in the interval.
inline Family build_level_family(int n, LevelInterval levels) {
  Family f(n);
  for (Word s = 0; s < f.universe(); ++s)
    if (levels.contains(level(s))) f.insert(s);
  return f;
}

inline Family build_b_family(int n, int k, Variant variant = Variant::Floor) {
  require_ground_size(n);
  return build_level_family(n, middle_levels(n, k, variant));
}

/// All words of the given level in increasing (= colex) order.
inline std::vector<Word> words_of_level(int n, int l) {
  std::vector<Word> out;
  for (Word s = 0; s < (Word{1} << n); ++s)
    if (level(s) == l) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Family file format
//
//   # comment
//   n=4
//   1 2        one subset per line, elements in [1,n], any order
//   -          the empty set

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool parse_int(std::string_view token, int& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

} // namespace detail

inline std::string format_subset(Word w) {
  if (w == 0) return "-";
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if ((w >> i) & 1U) {
      if (!out.empty()) out += ' ';
      out += std::to_string(i + 1);
    }
  }
  return out;
}

inline Family parse_family(std::string_view text) {
  Family family;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (!have_header) {
      require(line.starts_with("n="), Errc::MissingHeader, where + ": expected 'n=<int>'");
      int n = 0;
      require(detail::parse_int(detail::trim(line.substr(2)), n), Errc::MalformedLine,
              where + ": bad header '" + std::string(line) + "'");
      family = Family(n);
      have_header = true;
      continue;
    }

    Word w = 0;
    if (line != "-") {
      std::istringstream tokens{std::string(line)};
      std::string tok;
      while (tokens >> tok) {
        int e = 0;
        require(detail::parse_int(tok, e), Errc::MalformedLine, where + ": bad token '" + tok + "'");
        require(e >= 1 && e <= family.n(), Errc::ElementOutOfRange,
                where + ": element " + tok + " outside [1," + std::to_string(family.n()) + "]");
        const Word bit = Word{1} << (e - 1);
        require((w & bit) == 0, Errc::MalformedLine, where + ": repeated element " + tok);
        w |= bit;
      }
    }
    require(!family.contains(w), Errc::DuplicateSubset, where + ": duplicate subset {" + format_subset(w) + "}");
    family.insert(w);
  }
  require(have_header, Errc::MissingHeader, "no 'n=<int>' header found");
  return family;
}

inline std::string serialize_family(const Family& family) {
  std::string out = "n=" + std::to_string(family.n()) + "\n";
  for (Word w : family.members()) {
    out += format_subset(w);
    out += '\n';
  }
  return out;
}

} // namespace supersat

#endif // SUPERSAT_CORE_HPP
