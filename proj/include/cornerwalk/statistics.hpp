#ifndef CORNERWALK_STATISTICS_HPP
#define CORNERWALK_STATISTICS_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cornerwalk/paths.hpp"

namespace cornerwalk {

/// Bitmask over the five step symbols.
class StepSet {
public:
  constexpr StepSet() = default;
  constexpr StepSet(std::initializer_list<Step> steps) {
    for (Step s : steps) bits_ |= bit(s);
  }
  constexpr bool contains(Step s) const { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

private:
  static constexpr std::uint8_t bit(Step s) { return std::uint8_t(1u << static_cast<unsigned>(s)); }
  std::uint8_t bits_ = 0;
};

namespace steps {
inline constexpr StepSet kHorizontal{Step::East, Step::West};
inline constexpr StepSet kVertical{Step::North, Step::South};
inline constexpr StepSet kInward{Step::West, Step::South, Step::Origin};
inline constexpr StepSet kOutward{Step::East, Step::North};
} // namespace steps

/// Counts adjacent pairs (first, second).
struct PatternQuery {
  StepSet first;
  StepSet second;

  PatternQuery(StepSet first_, StepSet second_);
};

/// Number of i >= 0 with steps(i) in q.first and steps(i+1) in q.second,
/// where index 0 is the implicit Origin.
std::int64_t pattern_count(std::span<const Step> steps, const PatternQuery& q);
inline std::int64_t pattern_count(const Shuffle& s, const PatternQuery& q) {
  return pattern_count(s.steps(), q);
}

/// #(E,S) + #(N,W).
std::int64_t peak_count(std::span<const Step> steps);
/// #(N,W) - #(E,S).
std::int64_t signed_peak_count(std::span<const Step> steps);
/// #(In, Vertical), Origin counted as inward.
std::int64_t in_vert(std::span<const Step> steps);
/// in_vert minus the number of South steps.
std::int64_t shifted_in_vert(std::span<const Step> steps);

inline std::int64_t peak_count(const Shuffle& s) { return peak_count(s.steps()); }
inline std::int64_t signed_peak_count(const Shuffle& s) { return signed_peak_count(s.steps()); }
inline std::int64_t in_vert(const Shuffle& s) { return in_vert(s.steps()); }
inline std::int64_t shifted_in_vert(const Shuffle& s) { return shifted_in_vert(s.steps()); }

/// Exact multiple of one half.
class HalfInt {
public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_halves(std::int64_t halves) { return HalfInt(halves); }
  constexpr std::int64_t halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  /// Throws unless is_integer().
  std::int64_t to_integer() const;
  constexpr HalfInt abs() const { return HalfInt(halves_ < 0 ? -halves_ : halves_); }
  std::string str() const;

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
  constexpr explicit HalfInt(std::int64_t h) : halves_(h) {}
  std::int64_t halves_ = 0;
};

/// Binary word with 1-indexed positions.
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  /// 1-indexed.
  std::uint8_t at(std::size_t position) const;
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }
  /// 2m zeroes and 2n ones.
  bool in_w(int m, int n) const;
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.bits_ <=> b.bits_; }

private:
  std::vector<std::uint8_t> bits_;
};

/// Ones in even (1-indexed) positions.
std::int64_t even_count(const BinaryWord& w);
/// even_count - ones/2.
HalfInt shifted_even_count(const BinaryWord& w);
HalfInt absolute_even_count(const BinaryWord& w);

/// Pairs (w(2i+1), w(2i+2)); throws on odd length.
std::vector<std::pair<std::uint8_t, std::uint8_t>> odd_indexed_pairs(const BinaryWord& w);

} // namespace cornerwalk

#endif
