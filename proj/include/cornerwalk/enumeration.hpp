#ifndef CORNERWALK_ENUMERATION_HPP
#define CORNERWALK_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cornerwalk/paths.hpp"
#include "cornerwalk/polynomial.hpp"
#include "cornerwalk/statistics.hpp"

namespace cornerwalk {

enum class Statistic { Peak, SignedPeak, AbsSignedPeak, InVert, ShiftedInVert };

std::string to_string(Statistic s);
/// peak | signed-peak | abs-signed-peak | in-vert | shifted-in-vert
Statistic parse_statistic(std::string_view name);
std::int64_t evaluate(Statistic stat, std::span<const Step> steps);

/// Exact tally from statistic value to count. Only positive counts are stored.
class Distribution {
public:
  void add(std::int64_t value, const BigInt& count = 1);
  const std::map<std::int64_t, BigInt>& entries() const { return entries_; }
  BigInt count(std::int64_t value) const;
  BigInt total() const;
  bool empty() const { return entries_.empty(); }
  /// Generating polynomial; throws on negative keys.
  IntPoly to_poly() const;
  /// Merges values v and -v under |v|.
  Distribution absolute() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

private:
  std::map<std::int64_t, BigInt> entries_;
};

/// Walk enumerators are single-pass ranges: next() refills the current word
/// and returns false once exhausted. Ranges iterate with range-for.
template <class Enumerator>
class WordIterator {
public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Shuffle;
  using difference_type = std::ptrdiff_t;
  using pointer = const Shuffle*;
  using reference = const Shuffle&;

  WordIterator() = default;
  explicit WordIterator(Enumerator* e) : e_(e) { advance(); }
  const Shuffle& operator*() const { return current_; }
  const Shuffle* operator->() const { return &current_; }
  WordIterator& operator++() {
    advance();
    return *this;
  }
  void operator++(int) { advance(); }
  friend bool operator==(const WordIterator& a, std::default_sentinel_t) { return a.e_ == nullptr; }

private:
  void advance() {
    if (e_ && e_->next()) current_ = Shuffle(StepWord(e_->word().begin(), e_->word().end()));
    else e_ = nullptr;
  }
  Enumerator* e_ = nullptr;
  Shuffle current_;
};

/// All interleavings of V and H, in lexicographic order of the source
/// choice sequence with vertical before horizontal.
class ShuffleEnumerator {
public:
  ShuffleEnumerator(VPath v, HPath h);
  bool next();
  std::span<const Step> word() const { return word_; }

  WordIterator<ShuffleEnumerator> begin() { return WordIterator<ShuffleEnumerator>(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  VPath v_;
  HPath h_;
  std::vector<std::uint8_t> choice_; // 0 = take from V, 1 = take from H
  StepWord word_;
  bool started_ = false;
  bool done_ = false;
};

enum class PlaneMode { Quarter, Planar };
std::string to_string(PlaneMode m);
PlaneMode parse_plane_mode(std::string_view name);

/// Words with vertical projection V, r East and l West steps. Quarter mode
/// keeps those whose every prefix point has x, y >= 0 (requires V
/// positive); planar mode keeps every such word. Depth-first order with
/// choices tried as V step, East, West.
class WalkEnumerator {
public:
  WalkEnumerator(VPath v, int r, int l, PlaneMode mode = PlaneMode::Quarter);
  bool next();
  std::span<const Step> word() const { return word_; }

  WordIterator<WalkEnumerator> begin() { return WordIterator<WalkEnumerator>(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  bool feasible(int x, int east_left, int west_left) const;

  VPath v_;
  int r_;
  int l_;
  PlaneMode mode_;
  // Per depth: the next choice to try (0 = V, 1 = East, 2 = West, 3 = done).
  std::vector<std::uint8_t> next_choice_;
  StepWord word_;
  std::size_t v_used_ = 0;
  int east_used_ = 0;
  int west_used_ = 0;
  int x_ = 0;
  bool done_ = false;
  bool yielded_ = false;
};

/// Quarter-plane walks of the given even length from (0,0) back to (0,0).
class LoopEnumerator {
public:
  explicit LoopEnumerator(int length);
  bool next();
  std::span<const Step> word() const { return word_; }

  WordIterator<LoopEnumerator> begin() { return WordIterator<LoopEnumerator>(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  int length_;
  std::vector<std::uint8_t> next_choice_;
  StepWord word_;
  int x_ = 0;
  int y_ = 0;
  bool done_ = false;
  bool yielded_ = false;
};

inline ShuffleEnumerator shuffles(VPath v, HPath h) { return {std::move(v), std::move(h)}; }
WalkEnumerator quarter_planar_set(VPath v, int r, int l);
LoopEnumerator quarter_planar_loops(int length);

/// All words with the given letter counts, in lexicographic order.
std::vector<VPath> vertical_words(int ups, int downs);
std::vector<HPath> horizontal_words(int rights, int lefts);
/// Vertical words that never dip below height 0.
std::vector<VPath> positive_vertical_words(int ups, int downs);

template <class Enumerator>
Distribution distribution(Enumerator&& e, Statistic stat) {
  std::map<std::int64_t, std::uint64_t> tally;
  while (e.next()) ++tally[evaluate(stat, e.word())];
  Distribution out;
  for (const auto& [value, count] : tally) out.add(value, BigInt(static_cast<unsigned long>(count)));
  return out;
}

/// C(r+u, u-k) * C(l+d, d+k).
BigInt signed_peak_closed_form(const ClassParams& p, std::int64_t k);
/// Full signed distribution from the closed form.
Distribution signed_peak_closed_distribution(const ClassParams& p);
/// Absolute signed peak-count polynomial from the closed form.
IntPoly gf_abs_signed(const ClassParams& p);

IntPoly gf_peak_Q(const VPath& v, int r, int l, PlaneMode mode = PlaneMode::Quarter);
/// Exponent is |signed peak-count|.
IntPoly gf_signed_Q(const VPath& v, int r, int l, PlaneMode mode = PlaneMode::Quarter);
IntPoly gf_peak_shuffleclass(const VPath& v, const HPath& h);

/// Even minus odd peak-count shuffles: sum_k (-1)^k C(r+u,u-k) C(l+d,d+k).
BigInt parity_difference(const ClassParams& p);
/// (2r)! (2k)! / (r! k! (r+k)!).
BigInt super_catalan(int r, int k);

} // namespace cornerwalk

#endif
