#include "cornerwalk/bijections.hpp"

#include <algorithm>

namespace cornerwalk {

Shuffle flip(const Shuffle& s) {
  StepWord out(s.steps().begin(), s.steps().end());
  auto it = out.begin();
  while (it != out.end()) {
    auto run_begin = std::find_if(it, out.end(), is_outward);
    auto run_end = std::find_if(run_begin, out.end(), is_inward);
    std::reverse(run_begin, run_end);
    it = run_end;
  }
  return Shuffle(std::move(out));
}

std::size_t BlueRedColoring::blue_inward(const VPath& v, const HPath& h) const {
  std::size_t count = origin_blue ? 1 : 0;
  for (auto i : blue_vertical)
    if (v.steps()[i] == Step::South) ++count;
  for (auto i : blue_horizontal)
    if (h.steps()[i] == Step::West) ++count;
  return count;
}

BlueRedColoring coloring_encode(const Shuffle& s) {
  auto steps = s.steps();
  if (vertical_projection(steps).ends_with_south() == false)
    throw Error("blue-red colorings need a vertical projection ending with South");
  BlueRedColoring c;
  std::size_t vi = 0;
  std::size_t hi = 0;
  Step prev = Step::Origin;
  for (Step cur : steps) {
    bool blue = is_vertical(cur);
    if (prev == Step::Origin) c.origin_blue = blue;
    else if (is_vertical(prev)) {
      if (blue) c.blue_vertical.push_back(vi);
      ++vi;
    } else {
      if (blue) c.blue_horizontal.push_back(hi);
      ++hi;
    }
    prev = cur;
  }
  return c;
}

Shuffle coloring_decode(const BlueRedColoring& c, const VPath& v, const HPath& h) {
  if (!v.ends_with_south())
    throw Error("blue-red colorings need a vertical path ending with South");
  auto check = [](const std::vector<std::size_t>& idx, std::size_t limit, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (idx[i] >= limit || (i > 0 && idx[i] <= idx[i - 1]))
        throw Error(std::string("coloring has invalid ") + what + " positions");
  };
  check(c.blue_vertical, v.size(), "vertical");
  check(c.blue_horizontal, h.size(), "horizontal");
  if (!c.blue_vertical.empty() && c.blue_vertical.back() == v.size() - 1)
    throw Error("the final South of V cannot be blue");

  std::vector<bool> vblue(v.size());
  std::vector<bool> hblue(h.size());
  for (auto i : c.blue_vertical) vblue[i] = true;
  for (auto i : c.blue_horizontal) hblue[i] = true;

  StepWord out;
  out.reserve(v.size() + h.size());
  std::size_t vi = 0;
  std::size_t hi = 0;
  bool blue = c.origin_blue;
  while (out.size() < v.size() + h.size()) {
    if (blue) {
      if (vi == v.size()) throw Error("coloring exhausts the vertical path early");
      blue = vblue[vi];
      out.push_back(v.steps()[vi++]);
    } else {
      if (hi == h.size()) throw Error("coloring exhausts the horizontal path early");
      blue = hblue[hi];
      out.push_back(h.steps()[hi++]);
    }
  }
  if (blue) throw Error("coloring marks the final step blue");
  return Shuffle(std::move(out));
}

std::vector<BlueRedColoring> all_colorings(const VPath& v, const HPath& h) {
  if (!v.ends_with_south())
    throw Error("blue-red colorings need a vertical path ending with South");
  // Slot 0 is Origin, then V positions (final South excluded), then H.
  const std::size_t vslots = v.size() - 1;
  const std::size_t nslots = 1 + vslots + h.size();
  const std::size_t blues = v.size();
  std::vector<std::uint8_t> pick(nslots - blues, 0);
  pick.resize(nslots, 1);
  std::vector<BlueRedColoring> out;
  do {
    BlueRedColoring c;
    c.origin_blue = pick[0] != 0;
    for (std::size_t i = 0; i < vslots; ++i)
      if (pick[1 + i]) c.blue_vertical.push_back(i);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (pick[1 + vslots + i]) c.blue_horizontal.push_back(i);
    out.push_back(std::move(c));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

BinaryWord toggle(const BinaryWord& w, std::size_t i) {
  if (2 * i + 1 >= w.size()) throw Error("toggle index out of range");
  std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
  std::swap(bits[2 * i], bits[2 * i + 1]);
  return BinaryWord(std::move(bits));
}

std::vector<BinaryWord> ToggleClass::members() const {
  std::vector<BinaryWord> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::vector<std::uint8_t> bits(word_length, 0);
  for (auto a : anchor) bits[2 * a] = bits[2 * a + 1] = 1;
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      bool zero_one = (mask >> j) & 1U;
      bits[2 * base[j]] = zero_one ? 0 : 1;
      bits[2 * base[j] + 1] = zero_one ? 1 : 0;
    }
    out.emplace_back(bits);
  }
  return out;
}

bool ToggleClass::contains(const BinaryWord& w) const {
  if (w.size() != word_length) return false;
  auto other = toggle_class(w);
  return other.anchor == anchor && other.base == base;
}

ToggleClass toggle_class(const BinaryWord& w) {
  auto pairs = odd_indexed_pairs(w);
  ToggleClass c;
  c.word_length = w.size();
  c.representative = w;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (a == 1 && b == 1) c.anchor.push_back(i);
    else if (a != b) c.base.push_back(i);
  }
  return c;
}

std::vector<ToggleClass> toggle_classes(int m, int n) {
  if (m < 0 || n < 0) throw Error("W^m_n needs m, n >= 0");
  const std::size_t pairs = static_cast<std::size_t>(m + n);
  std::vector<ToggleClass> out;
  for (int a = 0; a <= n; ++a) {
    const std::size_t anchors = static_cast<std::size_t>(a);
    const std::size_t bases = static_cast<std::size_t>(2 * (n - a));
    if (anchors + bases > pairs) continue;
    // role per pair: 0 zero pair, 1 base, 2 anchor
    std::vector<std::uint8_t> role(pairs - anchors - bases, 0);
    role.resize(pairs - anchors, 1);
    role.resize(pairs, 2);
    do {
      ToggleClass c;
      c.word_length = 2 * pairs;
      std::vector<std::uint8_t> bits(2 * pairs, 0);
      for (std::size_t i = 0; i < pairs; ++i) {
        if (role[i] == 2) {
          c.anchor.push_back(i);
          bits[2 * i] = bits[2 * i + 1] = 1;
        } else if (role[i] == 1) {
          c.base.push_back(i);
          bits[2 * i] = 1;
        }
      }
      c.representative = BinaryWord(std::move(bits));
      out.push_back(std::move(c));
    } while (std::next_permutation(role.begin(), role.end()));
  }
  return out;
}

std::vector<BinaryWord> words_w(int m, int n) {
  if (m < 0 || n < 0) throw Error("W^m_n needs m, n >= 0");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * m), 0);
  bits.resize(static_cast<std::size_t>(2 * m + 2 * n), 1);
  std::vector<BinaryWord> out;
  do {
    out.emplace_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

namespace {

struct Slot {
  enum Kind { Vertical, Horizontal, Origin } kind;
  std::size_t index;
};

void check_loops(const VPath& v, const HPath& h) {
  if (!v.is_loop() || !v.ends_with_south())
    throw Error("word/shuffle bijection needs a vertical loop ending with South");
  if (!h.is_loop()) throw Error("word/shuffle bijection needs a horizontal loop");
}

// Outward slots pair with odd positions, inward slots with even ones.
std::pair<std::vector<Slot>, std::vector<Slot>> slots_for(const VPath& v, const HPath& h) {
  std::vector<Slot> outward;
  std::vector<Slot> inward;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.steps()[i] == Step::East) outward.push_back({Slot::Horizontal, i});
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.steps()[i] == Step::North) outward.push_back({Slot::Vertical, i});
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.steps()[i] == Step::West) inward.push_back({Slot::Horizontal, i});
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v.steps()[i] == Step::South) inward.push_back({Slot::Vertical, i});
  inward.push_back({Slot::Origin, 0});
  return {outward, inward};
}

} // namespace

Shuffle word_to_shuffle(const BinaryWord& w, const VPath& v, const HPath& h) {
  check_loops(v, h);
  const int m = h.rights();
  const int n = v.ups();
  if (!w.in_w(m, n)) throw Error("binary word " + w.str() + " is not in W^m_n for this class");
  auto [outward, inward] = slots_for(v, h);
  BlueRedColoring c;
  auto mark = [&c](const Slot& s) {
    switch (s.kind) {
    case Slot::Vertical: c.blue_vertical.push_back(s.index); break;
    case Slot::Horizontal: c.blue_horizontal.push_back(s.index); break;
    case Slot::Origin: c.origin_blue = true; break;
    }
  };
  for (std::size_t t = 0; t < outward.size(); ++t) {
    if (w.at(2 * t + 1)) mark(outward[t]);
    if (w.at(2 * t + 2)) mark(inward[t]);
  }
  std::sort(c.blue_vertical.begin(), c.blue_vertical.end());
  std::sort(c.blue_horizontal.begin(), c.blue_horizontal.end());
  return flip(coloring_decode(c, v, h));
}

BinaryWord shuffle_to_word(const Shuffle& s, const VPath& v, const HPath& h) {
  check_loops(v, h);
  auto [pv, ph] = projections(s);
  if (pv != v || ph != h) throw Error("shuffle does not project onto the given paths");
  auto c = coloring_encode(flip(s));
  auto [outward, inward] = slots_for(v, h);
  auto is_blue = [&c](const Slot& slot) {
    switch (slot.kind) {
    case Slot::Vertical:
      return std::binary_search(c.blue_vertical.begin(), c.blue_vertical.end(), slot.index);
    case Slot::Horizontal:
      return std::binary_search(c.blue_horizontal.begin(), c.blue_horizontal.end(), slot.index);
    case Slot::Origin: return c.origin_blue;
    }
    return false;
  };
  std::vector<std::uint8_t> bits;
  bits.reserve(2 * outward.size());
  for (std::size_t t = 0; t < outward.size(); ++t) {
    bits.push_back(is_blue(outward[t]) ? 1 : 0);
    bits.push_back(is_blue(inward[t]) ? 1 : 0);
  }
  return BinaryWord(std::move(bits));
}

} // namespace cornerwalk
