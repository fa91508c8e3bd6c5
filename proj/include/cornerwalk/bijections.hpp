#ifndef CORNERWALK_BIJECTIONS_HPP
#define CORNERWALK_BIJECTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cornerwalk/paths.hpp"
#include "cornerwalk/polynomial.hpp"
#include "cornerwalk/statistics.hpp"

namespace cornerwalk {

/// Reverses every maximal run of outward steps in place. An involution.
Shuffle flip(const Shuffle& s);

/// Marks the steps of a shuffle that immediately precede a vertical step.
/// Positions are 0-based indices into V and H, kept sorted.
struct BlueRedColoring {
  std::vector<std::size_t> blue_vertical;
  std::vector<std::size_t> blue_horizontal;
  bool origin_blue = false;

  std::size_t blue_count() const {
    return blue_vertical.size() + blue_horizontal.size() + (origin_blue ? 1 : 0);
  }
  /// Blue inward steps, Origin included. Equals the In-Vert of the
  /// shuffle the coloring fits.
  std::size_t blue_inward(const VPath& v, const HPath& h) const;

  friend bool operator==(const BlueRedColoring&, const BlueRedColoring&) = default;
};

/// The vertical projection of s must end with South.
BlueRedColoring coloring_encode(const Shuffle& s);
/// Rebuilds the unique shuffle the coloring fits: after a blue step the
/// next step comes from V, after a red one from H. Throws if the coloring
/// is inconsistent with (V, H).
Shuffle coloring_decode(const BlueRedColoring& c, const VPath& v, const HPath& h);
/// Every coloring with u + d blue steps drawn from the outward steps, the
/// inward steps other than the final South of V, and Origin.
std::vector<BlueRedColoring> all_colorings(const VPath& v, const HPath& h);

/// Swaps the (i+1)-th odd-indexed pair, i.e. positions 2i+1 and 2i+2.
BinaryWord toggle(const BinaryWord& w, std::size_t i);

/// Toggle-equivalence class, described by its anchor ((1,1) pairs) and
/// base (mixed pairs). Pair indices are 0-based.
struct ToggleClass {
  std::vector<std::size_t> anchor;
  std::vector<std::size_t> base;
  std::size_t word_length = 0;
  BinaryWord representative;

  std::uint64_t size() const { return std::uint64_t{1} << base.size(); }
  /// Every assignment of the base pairs to 01/10, in binary-counter order
  /// over the base (bit j set means base[j] holds 01).
  std::vector<BinaryWord> members() const;
  bool contains(const BinaryWord& w) const;
};

ToggleClass toggle_class(const BinaryWord& w);
/// Every toggle class of W^m_n, built directly from anchor and base choices.
std::vector<ToggleClass> toggle_classes(int m, int n);
/// All words of W^m_n in lexicographic order.
std::vector<BinaryWord> words_w(int m, int n);

/// Bijection from W^m_n onto the shuffles of a vertical loop V (n North,
/// n South, ending with South) and a horizontal loop H (m East, m West).
/// Odd positions of w color the outward steps (East steps of H, then North
/// steps of V); even positions color the inward slots (West steps of H,
/// South steps of V except the last, then Origin). The decoded shuffle is
/// flipped so that its signed peak-count equals the shifted even-count of w.
Shuffle word_to_shuffle(const BinaryWord& w, const VPath& v, const HPath& h);
BinaryWord shuffle_to_word(const Shuffle& s, const VPath& v, const HPath& h);

} // namespace cornerwalk

#endif
