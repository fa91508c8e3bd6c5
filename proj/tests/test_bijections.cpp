#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cornerwalk/bijections.hpp"
#include "cornerwalk/enumeration.hpp"

using namespace cornerwalk;

namespace {

std::vector<Shuffle> all_shuffles(const VPath& v, const HPath& h) {
  std::vector<Shuffle> out;
  for (const auto& s : shuffles(v, h)) out.push_back(s);
  return out;
}

Shuffle random_shuffle(std::mt19937& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += "EWNS"[rng() % 4];
  return Shuffle::parse(s);
}

// Text-level signature of a word's toggle class: '1' for (1,1), 'x' for a
// mixed pair, '0' for (0,0).
std::string signature(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i + 1 < w.size(); i += 2)
    out += w[i] == w[i + 1] ? w[i] : 'x';
  return out;
}

} // namespace

TEST_CASE("flip reverses out-runs") {
  // Origin, E, E, N, W, S, N, E, W, W, N
  CHECK(flip(Shuffle::parse("EENWSNEWWN")).str() == "NEEWSENWWN");
  CHECK(flip(Shuffle::parse("WSWS")).str() == "WSWS");
  CHECK(flip(Shuffle{}).empty());
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_shuffle(rng, rng() % 16);
    CHECK(flip(flip(s)) == s);
    CHECK(projections(flip(s)).first.size() == projections(s).first.size());
  }
}

TEST_CASE("flip carries signed peak-count to shifted In-Vert") {
  for (int u = 0; u <= 2; ++u)
    for (int d = 1; d <= 2; ++d)
      for (int r = 0; r <= 2; ++r)
        for (int l = 0; l <= 2; ++l)
          for (const auto& v : vertical_words(u, d)) {
            if (!v.ends_with_south()) continue;
            for (const auto& h : horizontal_words(r, l))
              for (const auto& s : all_shuffles(v, h)) {
                CAPTURE(s.str());
                CHECK(shifted_in_vert(flip(s)) == signed_peak_count(s));
              }
          }
}

TEST_CASE("blue-red coloring examples") {
  auto c = coloring_encode(Shuffle::parse("ENES"));
  CHECK_FALSE(c.origin_blue);
  CHECK(c.blue_horizontal == std::vector<std::size_t>{0, 1});
  CHECK(c.blue_vertical.empty());
  CHECK(c.blue_inward(VPath::parse("NS"), HPath::parse("EE")) == 0);

  auto c2 = coloring_encode(Shuffle::parse("NSEE"));
  CHECK(c2.origin_blue);
  CHECK(c2.blue_vertical == std::vector<std::size_t>{0});
  CHECK(c2.blue_horizontal.empty());
  CHECK(c2.blue_inward(VPath::parse("NS"), HPath::parse("EE")) == 1);
  CHECK(in_vert(Shuffle::parse("NSEE")) == 1);

  CHECK_THROWS(coloring_encode(Shuffle::parse("SNE")));
}

TEST_CASE("coloring round trip and decoding bijection") {
  for (const auto& [vt, ht] : std::vector<std::pair<std::string, std::string>>{
           {"NSS", "EW"}, {"NS", "EE"}, {"S", ""}, {"SNS", "WEW"}, {"NNSS", "EW"}}) {
    auto v = VPath::parse(vt);
    auto h = HPath::parse(ht);
    std::set<Shuffle> shuffles_set;
    for (const auto& s : all_shuffles(v, h)) {
      shuffles_set.insert(s);
      auto c = coloring_encode(s);
      CHECK(c.blue_count() == v.size());
      CHECK(coloring_decode(c, v, h) == s);
      CHECK(c.blue_inward(v, h) == static_cast<std::size_t>(in_vert(s)));
    }
    std::set<Shuffle> decoded;
    auto colorings = all_colorings(v, h);
    CHECK(colorings.size() == shuffles_set.size());
    for (const auto& c : colorings) decoded.insert(coloring_decode(c, v, h));
    CHECK(decoded == shuffles_set);
  }
}

TEST_CASE("decode rejects inconsistent colorings") {
  auto v = VPath::parse("NS");
  auto h = HPath::parse("E");
  BlueRedColoring final_blue;
  final_blue.blue_vertical = {1};
  CHECK_THROWS(coloring_decode(final_blue, v, h));
  BlueRedColoring out_of_range;
  out_of_range.blue_horizontal = {3};
  CHECK_THROWS(coloring_decode(out_of_range, v, h));
  BlueRedColoring too_few;  // nothing blue: the vertical word is never reached
  CHECK_THROWS(coloring_decode(too_few, v, h));
}

TEST_CASE("toggling") {
  auto w = BinaryWord::parse("110110");
  CHECK(toggle(w, 0) == w);
  CHECK(toggle(w, 1).str() == "111010");
  CHECK(toggle(toggle(w, 2), 2) == w);
  CHECK_THROWS(toggle(w, 3));
}

TEST_CASE("toggle class of 110110") {
  auto c = toggle_class(BinaryWord::parse("110110"));
  CHECK(c.anchor == std::vector<std::size_t>{0});
  CHECK(c.base == std::vector<std::size_t>{1, 2});
  CHECK(c.size() == 4);
  std::set<std::string> members;
  for (const auto& m : c.members()) members.insert(m.str());
  CHECK(members == std::set<std::string>{"110110", "111001", "110101", "111010"});
  CHECK(c.contains(BinaryWord::parse("111001")));
  CHECK_FALSE(c.contains(BinaryWord::parse("111100")));
  CHECK(toggle_class(BinaryWord::parse("1100")).size() == 1);
}

TEST_CASE("toggle classes partition W^m_n") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto words = words_w(m, n);
      CHECK(BigInt(static_cast<unsigned long>(words.size())) == binomial(2 * m + 2 * n, 2 * n));
      CHECK(std::is_sorted(words.begin(), words.end()));
      std::map<std::string, std::set<std::string>> by_signature;
      for (const auto& w : words) by_signature[signature(w.str())].insert(w.str());
      auto classes = toggle_classes(m, n);
      CHECK(classes.size() == by_signature.size());
      for (const auto& c : classes) {
        std::set<std::string> members;
        for (const auto& w : c.members()) members.insert(w.str());
        auto sig = signature(c.representative.str());
        CHECK(members == by_signature[sig]);
        CHECK(members.size() == c.size());
      }
    }
  CHECK_THROWS(words_w(-1, 0));
}

TEST_CASE("binary words to loop shuffles") {
  auto v = VPath::parse("NS");
  auto h = HPath::parse("EW");
  Distribution images;
  std::set<Shuffle> seen;
  for (const auto& w : words_w(1, 1)) {
    auto s = word_to_shuffle(w, v, h);
    CHECK(signed_peak_count(s) * 2 == shifted_even_count(w).halves());
    CHECK(shuffle_to_word(s, v, h) == w);
    seen.insert(s);
    images.add(std::abs(signed_peak_count(s)));
  }
  CHECK(seen.size() == 6);
  Distribution expected;
  expected.add(0, 4);
  expected.add(1, 2);
  CHECK(images == expected);
}

TEST_CASE("word/shuffle bijection on every loop pair with m, n <= 2") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& v : vertical_words(n, n)) {
        if (!v.ends_with_south()) continue;
        for (const auto& h : horizontal_words(m, m)) {
          std::set<Shuffle> image;
          for (const auto& w : words_w(m, n)) {
            auto s = word_to_shuffle(w, v, h);
            CHECK(projections(s) == std::pair{v, h});
            CHECK(signed_peak_count(s) * 2 == shifted_even_count(w).halves());
            CHECK(shuffle_to_word(s, v, h) == w);
            image.insert(s);
          }
          CHECK(BigInt(static_cast<unsigned long>(image.size())) == binomial(2 * m + 2 * n, 2 * n));
        }
      }
  CHECK_THROWS(word_to_shuffle(BinaryWord::parse("1010110000"), VPath::parse("NS"), HPath::parse("EW")));
  CHECK_THROWS(word_to_shuffle(BinaryWord::parse("0011"), VPath::parse("SN"), HPath::parse("EW")));
}
