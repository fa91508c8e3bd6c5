#ifndef CORNERWALK_PATHS_HPP
#define CORNERWALK_PATHS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cornerwalk {

/// Unit steps of a planar walk. Origin is the virtual marker sitting at
/// index 0 of every shuffle; it is never stored or printed.
enum class Step : std::uint8_t { East, West, North, South, Origin };

constexpr bool is_horizontal(Step s) { return s == Step::East || s == Step::West; }
constexpr bool is_vertical(Step s) { return s == Step::North || s == Step::South; }
constexpr bool is_outward(Step s) { return s == Step::East || s == Step::North; }
constexpr bool is_inward(Step s) { return !is_outward(s); }

char to_char(Step s);

using StepWord = std::vector<Step>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses E/W/N/S text (R/L/U/D accepted as synonyms, case-insensitive).
StepWord parse_word(std::string_view text);
std::string to_string(std::span<const Step> steps);

/// A word over {North, South}.
class VPath {
public:
  VPath() = default;
  explicit VPath(StepWord steps);
  static VPath parse(std::string_view text) { return VPath(parse_word(text)); }

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  int ups() const { return ups_; }
  int downs() const { return static_cast<int>(steps_.size()) - ups_; }
  /// Every prefix height is non-negative.
  bool is_positive() const;
  bool is_loop() const { return ups() == downs(); }
  bool ends_with_south() const { return !steps_.empty() && steps_.back() == Step::South; }
  std::string str() const { return to_string(steps_); }

  friend bool operator==(const VPath&, const VPath&) = default;
  friend auto operator<=>(const VPath& a, const VPath& b) { return a.steps_ <=> b.steps_; }

private:
  StepWord steps_;
  int ups_ = 0;
};

/// A word over {East, West}.
class HPath {
public:
  HPath() = default;
  explicit HPath(StepWord steps);
  static HPath parse(std::string_view text) { return HPath(parse_word(text)); }

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  int rights() const { return rights_; }
  int lefts() const { return static_cast<int>(steps_.size()) - rights_; }
  bool is_positive() const;
  bool is_loop() const { return rights() == lefts(); }
  bool ends_with_west() const { return !steps_.empty() && steps_.back() == Step::West; }
  std::string str() const { return to_string(steps_); }

  friend bool operator==(const HPath&, const HPath&) = default;
  friend auto operator<=>(const HPath& a, const HPath& b) { return a.steps_ <=> b.steps_; }

private:
  StepWord steps_;
  int rights_ = 0;
};

/// Step multiplicities: r East, l West, u North, d South.
struct ClassParams {
  int r = 0;
  int l = 0;
  int u = 0;
  int d = 0;

  ClassParams() = default;
  ClassParams(int r_, int l_, int u_, int d_);

  int length() const { return r + l + u + d; }
  friend bool operator==(const ClassParams&, const ClassParams&) = default;
  friend auto operator<=>(const ClassParams&, const ClassParams&) = default;
};

std::string to_string(const ClassParams& p);

/// An interleaving of a vertical and a horizontal word. Index 0 is the
/// implicit Origin; real steps occupy indices 1..size().
class Shuffle {
public:
  Shuffle() = default;
  explicit Shuffle(StepWord steps);
  static Shuffle parse(std::string_view text) { return Shuffle(parse_word(text)); }

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  /// at(0) is Origin.
  Step at(std::size_t i) const;
  std::string str() const { return to_string(steps_); }

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
  friend auto operator<=>(const Shuffle& a, const Shuffle& b) { return a.steps_ <=> b.steps_; }

private:
  StepWord steps_;
};

ClassParams class_of(const VPath& v, const HPath& h);
ClassParams class_of(std::span<const Step> steps);

std::pair<VPath, HPath> projections(const Shuffle& s);
VPath vertical_projection(std::span<const Step> steps);
HPath horizontal_projection(std::span<const Step> steps);

/// Walk from (0,0); true iff every visited point has x >= 0 and y >= 0.
bool is_quarter_planar(std::span<const Step> steps);
inline bool is_quarter_planar(const Shuffle& s) { return is_quarter_planar(s.steps()); }

/// Swaps East<->North and West<->South position-wise.
Shuffle complement(const Shuffle& s);

} // namespace cornerwalk

#endif
