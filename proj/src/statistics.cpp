#include "cornerwalk/statistics.hpp"

#include <algorithm>

namespace cornerwalk {

PatternQuery::PatternQuery(StepSet first_, StepSet second_) : first(first_), second(second_) {
  if (first.empty() || second.empty()) throw Error("pattern query sets must be non-empty");
}

std::int64_t pattern_count(std::span<const Step> steps, const PatternQuery& q) {
  std::int64_t count = 0;
  Step prev = Step::Origin;
  for (Step s : steps) {
    if (q.first.contains(prev) && q.second.contains(s)) ++count;
    prev = s;
  }
  return count;
}

// The peak and In-Vert counters are on the hot path of every enumeration
// scan, so they are written as single passes rather than via PatternQuery.

std::int64_t peak_count(std::span<const Step> steps) {
  std::int64_t count = 0;
  Step prev = Step::Origin;
  for (Step s : steps) {
    if ((prev == Step::East && s == Step::South) || (prev == Step::North && s == Step::West))
      ++count;
    prev = s;
  }
  return count;
}

std::int64_t signed_peak_count(std::span<const Step> steps) {
  std::int64_t count = 0;
  Step prev = Step::Origin;
  for (Step s : steps) {
    if (prev == Step::North && s == Step::West) ++count;
    else if (prev == Step::East && s == Step::South) --count;
    prev = s;
  }
  return count;
}

std::int64_t in_vert(std::span<const Step> steps) {
  std::int64_t count = 0;
  Step prev = Step::Origin;
  for (Step s : steps) {
    if (is_inward(prev) && is_vertical(s)) ++count;
    prev = s;
  }
  return count;
}

std::int64_t shifted_in_vert(std::span<const Step> steps) {
  auto downs = std::count(steps.begin(), steps.end(), Step::South);
  return in_vert(steps) - downs;
}

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw Error("half-integer " + str() + " is not an integer");
  return halves_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw Error("binary word entries must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') bits.push_back(0);
    else if (text[i] == '1') bits.push_back(1);
    else
      throw ParseError(i, "invalid bit '" + std::string(1, text[i]) + "' at index " +
                              std::to_string(i));
  }
  return BinaryWord(std::move(bits));
}

std::uint8_t BinaryWord::at(std::size_t position) const {
  if (position == 0 || position > bits_.size()) throw Error("binary word position out of range");
  return bits_[position - 1];
}

std::size_t BinaryWord::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool BinaryWord::in_w(int m, int n) const {
  return m >= 0 && n >= 0 && zeros() == std::size_t(2 * m) && ones() == std::size_t(2 * n);
}

std::string BinaryWord::str() const {
  std::string out;
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::int64_t even_count(const BinaryWord& w) {
  std::int64_t count = 0;
  for (std::size_t pos = 2; pos <= w.size(); pos += 2) count += w.at(pos);
  return count;
}

HalfInt shifted_even_count(const BinaryWord& w) {
  return HalfInt::from_halves(2 * even_count(w) - static_cast<std::int64_t>(w.ones()));
}

HalfInt absolute_even_count(const BinaryWord& w) { return shifted_even_count(w).abs(); }

std::vector<std::pair<std::uint8_t, std::uint8_t>> odd_indexed_pairs(const BinaryWord& w) {
  if (w.size() % 2 != 0) throw Error("odd-indexed pairs need an even-length word");
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  out.reserve(w.size() / 2);
  auto bits = w.bits();
  for (std::size_t i = 0; i + 1 < bits.size(); i += 2) out.emplace_back(bits[i], bits[i + 1]);
  return out;
}

} // namespace cornerwalk
