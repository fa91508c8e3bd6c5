#include "cornerwalk/enumeration.hpp"

#include <algorithm>

namespace cornerwalk {

std::string to_string(Statistic s) {
  switch (s) {
  case Statistic::Peak: return "peak";
  case Statistic::SignedPeak: return "signed-peak";
  case Statistic::AbsSignedPeak: return "abs-signed-peak";
  case Statistic::InVert: return "in-vert";
  case Statistic::ShiftedInVert: return "shifted-in-vert";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (auto s : {Statistic::Peak, Statistic::SignedPeak, Statistic::AbsSignedPeak,
                 Statistic::InVert, Statistic::ShiftedInVert})
    if (to_string(s) == name) return s;
  throw Error("unknown statistic '" + std::string(name) + "'");
}

std::int64_t evaluate(Statistic stat, std::span<const Step> steps) {
  switch (stat) {
  case Statistic::Peak: return peak_count(steps);
  case Statistic::SignedPeak: return signed_peak_count(steps);
  case Statistic::AbsSignedPeak: {
    auto v = signed_peak_count(steps);
    return v < 0 ? -v : v;
  }
  case Statistic::InVert: return in_vert(steps);
  case Statistic::ShiftedInVert: return shifted_in_vert(steps);
  }
  return 0;
}

void Distribution::add(std::int64_t value, const BigInt& count) {
  if (count < 0) throw Error("distribution counts must be non-negative");
  if (count == 0) return;
  entries_[value] += count;
}

BigInt Distribution::count(std::int64_t value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt Distribution::total() const {
  BigInt t = 0;
  for (const auto& [_, c] : entries_) t += c;
  return t;
}

IntPoly Distribution::to_poly() const {
  if (entries_.empty()) return {};
  if (entries_.begin()->first < 0) throw Error("generating polynomial needs non-negative values");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(entries_.rbegin()->first) + 1);
  for (const auto& [v, c] : entries_) coeffs[static_cast<std::size_t>(v)] = c;
  return IntPoly(std::move(coeffs));
}

Distribution Distribution::absolute() const {
  Distribution out;
  for (const auto& [v, c] : entries_) out.add(v < 0 ? -v : v, c);
  return out;
}

// ShuffleEnumerator

ShuffleEnumerator::ShuffleEnumerator(VPath v, HPath h) : v_(std::move(v)), h_(std::move(h)) {
  choice_.assign(v_.size(), 0);
  choice_.resize(v_.size() + h_.size(), 1);
  word_.resize(choice_.size());
}

bool ShuffleEnumerator::next() {
  if (done_) return false;
  if (started_ && !std::next_permutation(choice_.begin(), choice_.end())) {
    done_ = true;
    return false;
  }
  started_ = true;
  std::size_t vi = 0;
  std::size_t hi = 0;
  auto vs = v_.steps();
  auto hs = h_.steps();
  for (std::size_t i = 0; i < choice_.size(); ++i) word_[i] = choice_[i] ? hs[hi++] : vs[vi++];
  return true;
}

// WalkEnumerator

std::string to_string(PlaneMode m) { return m == PlaneMode::Quarter ? "quarter" : "planar"; }

PlaneMode parse_plane_mode(std::string_view name) {
  if (name == "quarter") return PlaneMode::Quarter;
  if (name == "planar") return PlaneMode::Planar;
  throw Error("unknown mode '" + std::string(name) + "'");
}

WalkEnumerator::WalkEnumerator(VPath v, int r, int l, PlaneMode mode)
    : v_(std::move(v)), r_(r), l_(l), mode_(mode) {
  if (r < 0 || l < 0) throw Error("step counts must be non-negative");
  if (mode_ == PlaneMode::Quarter && !v_.is_positive())
    throw Error("quarter-planar enumeration needs a positive vertical path, got " + v_.str());
  word_.reserve(v_.size() + static_cast<std::size_t>(r + l));
  // Final x is r - l, so no quarter-plane walk exists when l > r.
  if (!feasible(0, r_, l_)) done_ = true;
}

bool WalkEnumerator::feasible(int x, int east_left, int west_left) const {
  if (mode_ == PlaneMode::Planar) return true;
  return x >= 0 && x + east_left - west_left >= 0;
}

bool WalkEnumerator::next() {
  const std::size_t total = v_.size() + static_cast<std::size_t>(r_ + l_);
  auto undo = [this] {
    Step s = word_.back();
    word_.pop_back();
    if (s == Step::East) {
      --east_used_;
      --x_;
    } else if (s == Step::West) {
      --west_used_;
      ++x_;
    } else {
      --v_used_;
    }
  };

  if (done_) return false;
  if (!yielded_) {
    yielded_ = true;
    if (total == 0) return true;
    next_choice_.assign(1, 0);
  } else {
    if (total == 0) {
      done_ = true;
      return false;
    }
    undo();
  }

  while (!next_choice_.empty()) {
    auto& choice = next_choice_.back();
    if (choice > 2) {
      next_choice_.pop_back();
      if (next_choice_.empty()) break;
      undo();
      continue;
    }
    const auto c = choice++;
    bool placed = false;
    if (c == 0 && v_used_ < v_.size()) {
      word_.push_back(v_.steps()[v_used_++]);
      placed = true;
    } else if (c == 1 && east_used_ < r_) {
      word_.push_back(Step::East);
      ++east_used_;
      ++x_;
      placed = true;
    } else if (c == 2 && west_used_ < l_ && (mode_ == PlaneMode::Planar || x_ > 0)) {
      word_.push_back(Step::West);
      ++west_used_;
      --x_;
      placed = true;
    }
    if (!placed) continue;
    if (!feasible(x_, r_ - east_used_, l_ - west_used_)) {
      undo();
      continue;
    }
    if (word_.size() == total) return true;
    next_choice_.push_back(0);
  }
  done_ = true;
  return false;
}

// LoopEnumerator

LoopEnumerator::LoopEnumerator(int length) : length_(length) {
  if (length < 0 || length % 2 != 0) throw Error("loop length must be even and non-negative");
  word_.reserve(static_cast<std::size_t>(length));
}

bool LoopEnumerator::next() {
  static constexpr Step kOrder[] = {Step::East, Step::West, Step::North, Step::South};
  auto undo = [this] {
    switch (word_.back()) {
    case Step::East: --x_; break;
    case Step::West: ++x_; break;
    case Step::North: --y_; break;
    case Step::South: ++y_; break;
    case Step::Origin: break;
    }
    word_.pop_back();
  };

  if (done_) return false;
  if (!yielded_) {
    yielded_ = true;
    if (length_ == 0) return true;
    next_choice_.assign(1, 0);
  } else {
    if (length_ == 0) {
      done_ = true;
      return false;
    }
    undo();
  }

  while (!next_choice_.empty()) {
    auto& choice = next_choice_.back();
    if (choice > 3) {
      next_choice_.pop_back();
      if (next_choice_.empty()) break;
      undo();
      continue;
    }
    Step s = kOrder[choice++];
    int nx = x_ + (s == Step::East) - (s == Step::West);
    int ny = y_ + (s == Step::North) - (s == Step::South);
    int remaining = length_ - static_cast<int>(word_.size()) - 1;
    if (nx < 0 || ny < 0 || nx + ny > remaining) continue;
    word_.push_back(s);
    x_ = nx;
    y_ = ny;
    if (static_cast<int>(word_.size()) == length_) return true;
    next_choice_.push_back(0);
  }
  done_ = true;
  return false;
}

WalkEnumerator quarter_planar_set(VPath v, int r, int l) {
  return WalkEnumerator(std::move(v), r, l, PlaneMode::Quarter);
}

LoopEnumerator quarter_planar_loops(int length) { return LoopEnumerator(length); }

namespace {

std::vector<StepWord> words_with_counts(Step low, int n_low, Step high, int n_high) {
  if (n_low < 0 || n_high < 0) throw Error("letter counts must be non-negative");
  StepWord w(static_cast<std::size_t>(n_low), low);
  w.resize(static_cast<std::size_t>(n_low + n_high), high);
  std::vector<StepWord> out;
  // Step enumerators order East < West and North < South.
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

} // namespace

std::vector<VPath> vertical_words(int ups, int downs) {
  std::vector<VPath> out;
  for (auto& w : words_with_counts(Step::North, ups, Step::South, downs))
    out.emplace_back(std::move(w));
  return out;
}

std::vector<HPath> horizontal_words(int rights, int lefts) {
  std::vector<HPath> out;
  for (auto& w : words_with_counts(Step::East, rights, Step::West, lefts))
    out.emplace_back(std::move(w));
  return out;
}

std::vector<VPath> positive_vertical_words(int ups, int downs) {
  auto all = vertical_words(ups, downs);
  std::erase_if(all, [](const VPath& v) { return !v.is_positive(); });
  return all;
}

BigInt signed_peak_closed_form(const ClassParams& p, std::int64_t k) {
  return binomial(p.r + p.u, p.u - k) * binomial(p.l + p.d, p.d + k);
}

Distribution signed_peak_closed_distribution(const ClassParams& p) {
  Distribution out;
  for (std::int64_t k = -std::min(p.r, p.d); k <= std::min(p.u, p.l); ++k)
    out.add(k, signed_peak_closed_form(p, k));
  return out;
}

IntPoly gf_abs_signed(const ClassParams& p) {
  return signed_peak_closed_distribution(p).absolute().to_poly();
}

IntPoly gf_peak_Q(const VPath& v, int r, int l, PlaneMode mode) {
  return distribution(WalkEnumerator(v, r, l, mode), Statistic::Peak).to_poly();
}

IntPoly gf_signed_Q(const VPath& v, int r, int l, PlaneMode mode) {
  return distribution(WalkEnumerator(v, r, l, mode), Statistic::AbsSignedPeak).to_poly();
}

IntPoly gf_peak_shuffleclass(const VPath& v, const HPath& h) {
  return distribution(ShuffleEnumerator(v, h), Statistic::Peak).to_poly();
}

BigInt parity_difference(const ClassParams& p) {
  BigInt sum = 0;
  for (std::int64_t k = -std::min(p.r, p.d); k <= std::min(p.u, p.l); ++k) {
    BigInt term = signed_peak_closed_form(p, k);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt super_catalan(int r, int k) {
  if (r < 0 || k < 0) throw Error("super Catalan arguments must be non-negative");
  BigInt num = factorial(2 * r) * factorial(2 * k);
  BigInt den = factorial(r) * factorial(k) * factorial(r + k);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

} // namespace cornerwalk
