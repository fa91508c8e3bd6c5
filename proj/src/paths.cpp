#include "cornerwalk/paths.hpp"

#include <algorithm>

namespace cornerwalk {

char to_char(Step s) {
  switch (s) {
  case Step::East: return 'E';
  case Step::West: return 'W';
  case Step::North: return 'N';
  case Step::South: return 'S';
  case Step::Origin: break;
  }
  throw Error("the origin marker has no text form");
}

StepWord parse_word(std::string_view text) {
  StepWord out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'E': case 'e': case 'R': case 'r': out.push_back(Step::East); break;
    case 'W': case 'w': case 'L': case 'l': out.push_back(Step::West); break;
    case 'N': case 'n': case 'U': case 'u': out.push_back(Step::North); break;
    case 'S': case 's': case 'D': case 'd': out.push_back(Step::South); break;
    default:
      throw ParseError(i, "invalid step character '" + std::string(1, text[i]) +
                              "' at index " + std::to_string(i));
    }
  }
  return out;
}

std::string to_string(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(to_char(s));
  return out;
}

VPath::VPath(StepWord steps) : steps_(std::move(steps)) {
  for (Step s : steps_) {
    if (!is_vertical(s)) throw Error("vertical path contains a non-vertical step");
    if (s == Step::North) ++ups_;
  }
}

bool VPath::is_positive() const {
  int h = 0;
  for (Step s : steps_) {
    h += s == Step::North ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

HPath::HPath(StepWord steps) : steps_(std::move(steps)) {
  for (Step s : steps_) {
    if (!is_horizontal(s)) throw Error("horizontal path contains a non-horizontal step");
    if (s == Step::East) ++rights_;
  }
}

bool HPath::is_positive() const {
  int x = 0;
  for (Step s : steps_) {
    x += s == Step::East ? 1 : -1;
    if (x < 0) return false;
  }
  return true;
}

ClassParams::ClassParams(int r_, int l_, int u_, int d_) : r(r_), l(l_), u(u_), d(d_) {
  if (r < 0 || l < 0 || u < 0 || d < 0) throw Error("class parameters must be non-negative");
}

std::string to_string(const ClassParams& p) {
  return std::to_string(p.r) + "," + std::to_string(p.l) + "," + std::to_string(p.u) + "," +
         std::to_string(p.d);
}

Shuffle::Shuffle(StepWord steps) : steps_(std::move(steps)) {
  if (std::find(steps_.begin(), steps_.end(), Step::Origin) != steps_.end())
    throw Error("origin marker cannot be stored in a shuffle");
}

Step Shuffle::at(std::size_t i) const {
  if (i == 0) return Step::Origin;
  if (i > steps_.size()) throw Error("shuffle index out of range");
  return steps_[i - 1];
}

ClassParams class_of(const VPath& v, const HPath& h) {
  return ClassParams(h.rights(), h.lefts(), v.ups(), v.downs());
}

ClassParams class_of(std::span<const Step> steps) {
  ClassParams p;
  for (Step s : steps) {
    switch (s) {
    case Step::East: ++p.r; break;
    case Step::West: ++p.l; break;
    case Step::North: ++p.u; break;
    case Step::South: ++p.d; break;
    case Step::Origin: break;
    }
  }
  return p;
}

VPath vertical_projection(std::span<const Step> steps) {
  StepWord out;
  std::copy_if(steps.begin(), steps.end(), std::back_inserter(out), is_vertical);
  return VPath(std::move(out));
}

HPath horizontal_projection(std::span<const Step> steps) {
  StepWord out;
  std::copy_if(steps.begin(), steps.end(), std::back_inserter(out), is_horizontal);
  return HPath(std::move(out));
}

std::pair<VPath, HPath> projections(const Shuffle& s) {
  return {vertical_projection(s.steps()), horizontal_projection(s.steps())};
}

bool is_quarter_planar(std::span<const Step> steps) {
  int x = 0;
  int y = 0;
  for (Step s : steps) {
    switch (s) {
    case Step::East: ++x; break;
    case Step::West: --x; break;
    case Step::North: ++y; break;
    case Step::South: --y; break;
    case Step::Origin: break;
    }
    if (x < 0 || y < 0) return false;
  }
  return true;
}

Shuffle complement(const Shuffle& s) {
  StepWord out(s.steps().begin(), s.steps().end());
  for (Step& step : out) {
    switch (step) {
    case Step::East: step = Step::North; break;
    case Step::North: step = Step::East; break;
    case Step::West: step = Step::South; break;
    case Step::South: step = Step::West; break;
    case Step::Origin: break;
    }
  }
  return Shuffle(std::move(out));
}

} // namespace cornerwalk
