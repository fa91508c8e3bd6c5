#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "cornerwalk/enumeration.hpp"

using namespace cornerwalk;

namespace {

// Every word of the given length over E/W/N/S, in base-4 order.
std::vector<std::string> all_words(std::size_t len) {
  std::vector<std::string> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::string w;
    std::size_t c = code;
    for (std::size_t i = 0; i < len; ++i, c /= 4) w += "EWNS"[c % 4];
    out.push_back(w);
  }
  return out;
}

std::string only(const std::string& w, const std::string& keep) {
  std::string out;
  for (char c : w)
    if (keep.find(c) != std::string::npos) out += c;
  return out;
}

bool stays_in_quadrant(const std::string& w) {
  int x = 0, y = 0;
  for (char c : w) {
    x += c == 'E' ? 1 : c == 'W' ? -1 : 0;
    y += c == 'N' ? 1 : c == 'S' ? -1 : 0;
    if (x < 0 || y < 0) return false;
  }
  return true;
}

template <class E>
std::multiset<std::string> collect(E&& e) {
  std::multiset<std::string> out;
  for (const auto& s : e) out.insert(s.str());
  return out;
}

std::multiset<std::string> brute_shuffles(const std::string& v, const std::string& h) {
  std::multiset<std::string> out;
  for (const auto& w : all_words(v.size() + h.size()))
    if (only(w, "NS") == v && only(w, "EW") == h) out.insert(w);
  return out;
}

std::multiset<std::string> brute_walks(const std::string& v, int r, int l, bool quarter) {
  std::multiset<std::string> out;
  for (const auto& w : all_words(v.size() + r + l)) {
    auto h = only(w, "EW");
    if (only(w, "NS") != v) continue;
    if (std::count(h.begin(), h.end(), 'E') != r || std::count(h.begin(), h.end(), 'W') != l) continue;
    if (quarter && !stays_in_quadrant(w)) continue;
    out.insert(w);
  }
  return out;
}

} // namespace

TEST_CASE("the six shuffles of NS with EE") {
  auto got = collect(shuffles(VPath::parse("NS"), HPath::parse("EE")));
  std::multiset<std::string> listed{"EENS", "ENES", "NEES", "ENSE", "NESE", "NSEE"};
  CHECK(got == listed);
}

TEST_CASE("shuffle counts") {
  CHECK(collect(shuffles(VPath{}, HPath::parse("E"))).size() == 1);
  CHECK(collect(shuffles(VPath::parse("NSN"), HPath::parse("EWE"))).size() == 20);
  CHECK(collect(shuffles(VPath{}, HPath{})) == std::multiset<std::string>{""});
}

TEST_CASE("shuffles match a brute-force filter over all words") {
  for (const auto& v : {"", "N", "NS", "SN", "NNS", "NSS"})
    for (const auto& h : {"", "E", "EW", "WW", "EWE"}) {
      CAPTURE(v);
      CAPTURE(h);
      CHECK(collect(shuffles(VPath::parse(v), HPath::parse(h))) == brute_shuffles(v, h));
    }
}

TEST_CASE("quarter-plane walks with a fixed vertical projection") {
  CHECK(collect(quarter_planar_set(VPath::parse("NS"), 1, 1)).size() == 6);
  CHECK(collect(quarter_planar_set(VPath::parse("NS"), 0, 1)).empty());
  CHECK(collect(quarter_planar_set(VPath::parse("NS"), 2, 0)).size() == 6);
  CHECK_THROWS(quarter_planar_set(VPath::parse("SN"), 1, 1));
  for (const auto& v : {"", "N", "NS", "NNS", "NSNS", "NNSS"})
    for (int r = 0; r <= 2; ++r)
      for (int l = 0; l <= 2; ++l) {
        CAPTURE(v);
        CAPTURE(r);
        CAPTURE(l);
        CHECK(collect(quarter_planar_set(VPath::parse(v), r, l)) == brute_walks(v, r, l, true));
      }
}

TEST_CASE("planar walks keep every arrangement") {
  for (const auto& v : {"", "SN", "NS", "SSN"})
    for (int r = 0; r <= 2; ++r)
      for (int l = 0; l <= 2; ++l) {
        auto got = collect(WalkEnumerator(VPath::parse(v), r, l, PlaneMode::Planar));
        CHECK(got == brute_walks(v, r, l, false));
        auto n = static_cast<long>(std::string(v).size());
        CHECK(BigInt(static_cast<unsigned long>(got.size())) == binomial(n + r + l, r + l) * binomial(r + l, r));
      }
}

TEST_CASE("quarter-plane loops") {
  CHECK(collect(quarter_planar_loops(0)).size() == 1);
  CHECK(collect(quarter_planar_loops(2)) == std::multiset<std::string>{"EW", "NS"});
  for (int len : {4, 6, 8}) {
    std::multiset<std::string> brute;
    for (const auto& w : all_words(len)) {
      auto h = only(w, "EW");
      auto v = only(w, "NS");
      if (stays_in_quadrant(w) && std::count(h.begin(), h.end(), 'E') * 2 == static_cast<long>(h.size()) &&
          std::count(v.begin(), v.end(), 'N') * 2 == static_cast<long>(v.size()))
        brute.insert(w);
    }
    CHECK(collect(quarter_planar_loops(len)) == brute);
  }
  CHECK(collect(quarter_planar_loops(4)).size() == 10);
  CHECK_THROWS(quarter_planar_loops(3));
}

TEST_CASE("word lists") {
  CHECK(vertical_words(1, 1).size() == 2);
  CHECK(vertical_words(2, 2).size() == 6);
  CHECK(horizontal_words(3, 1).size() == 4);
  CHECK(positive_vertical_words(2, 2).size() == 2);
  CHECK(positive_vertical_words(3, 3).size() == 5);
  CHECK(positive_vertical_words(1, 2).empty());
  CHECK(vertical_words(0, 0).size() == 1);
}

TEST_CASE("distributions") {
  auto d = distribution(shuffles(VPath::parse("NS"), HPath::parse("EE")), Statistic::SignedPeak);
  Distribution expected;
  expected.add(0, 3);
  expected.add(-1, 3);
  CHECK(d == expected);
  CHECK(d.total() == 6);
  CHECK_THROWS(d.to_poly());
  CHECK(d.absolute().to_poly() == IntPoly{3, 3});
  CHECK(Distribution{}.empty());
  CHECK(Distribution{}.to_poly().is_zero());
  CHECK(parse_statistic("abs-signed-peak") == Statistic::AbsSignedPeak);
  CHECK(to_string(Statistic::ShiftedInVert) == "shifted-in-vert");
  CHECK_THROWS(parse_statistic("peaks"));
}

TEST_CASE("signed peak closed form") {
  ClassParams p(2, 0, 1, 1);
  CHECK(signed_peak_closed_form(p, 0) == 3);
  CHECK(signed_peak_closed_form(p, -1) == 3);
  CHECK(signed_peak_closed_form(p, 2) == 0);
  // Brute force over every word pair of every class with entries <= 2.
  for (int r = 0; r <= 2; ++r)
    for (int l = 0; l <= 2; ++l)
      for (int u = 0; u <= 2; ++u)
        for (int dd = 0; dd <= 2; ++dd) {
          ClassParams c(r, l, u, dd);
          auto closed = signed_peak_closed_distribution(c);
          for (const auto& v : vertical_words(u, dd))
            for (const auto& h : horizontal_words(r, l)) {
              CAPTURE(v.str());
              CAPTURE(h.str());
              CHECK(distribution(shuffles(v, h), Statistic::SignedPeak) == closed);
            }
        }
}

TEST_CASE("absolute signed peak generating function") {
  CHECK(gf_abs_signed(ClassParams(1, 1, 1, 1)) == IntPoly{4, 2});
  CHECK(gf_abs_signed(ClassParams(0, 0, 2, 3)) == IntPoly{1});
  CHECK(gf_abs_signed(ClassParams(2, 0, 1, 1)) == IntPoly{3, 3});
  CHECK(to_shifted_basis(gf_abs_signed(ClassParams(2, 2, 1, 1))) == thmpos_formula(2, 1));
  // Factorial-weighted symmetry on one point.
  CHECK(gf_abs_signed(ClassParams(2, 0, 1, 1)) * BigInt(4) ==
        gf_abs_signed(ClassParams(2, 1, 0, 1)) * BigInt(6));
}

TEST_CASE("generating functions over Q") {
  auto v = VPath::parse("NS");
  CHECK(gf_peak_Q(v, 1, 1) == IntPoly{4, 2});
  CHECK(gf_signed_Q(v, 1, 1) == IntPoly{4, 2});
  CHECK(gf_peak_Q(v, 2, 0).evaluate(1) == 6);
  CHECK(gf_peak_Q(VPath{}, 0, 0) == IntPoly{1});
  CHECK(gf_peak_Q(VPath::parse("NNSNSS"), 1, 1) == IntPoly{15, 12, 1});
  CHECK_THROWS(gf_peak_Q(VPath::parse("SN"), 1, 1));
  CHECK(gf_peak_Q(VPath::parse("SN"), 1, 1, PlaneMode::Planar).evaluate(1) == 12);
}

TEST_CASE("peak-count on a shuffle class at -1") {
  CHECK(gf_peak_shuffleclass(VPath::parse("NS"), HPath::parse("EW")).evaluate(-1) == 2);
  CHECK(gf_peak_shuffleclass(VPath::parse("NS"), HPath::parse("EE")).evaluate(1) == 6);
  CHECK(gf_peak_shuffleclass(VPath{}, HPath::parse("EW")) == IntPoly{1});
}

TEST_CASE("parity difference and super Catalan numbers") {
  CHECK(parity_difference(ClassParams(1, 1, 1, 1)) == 2);
  CHECK(parity_difference(ClassParams(2, 2, 1, 1)) == 3);
  CHECK(parity_difference(ClassParams(2, 1, 2, 1)) == 4);
  CHECK(super_catalan(0, 0) == 1);
  CHECK(super_catalan(1, 1) == 2);
  CHECK(super_catalan(2, 1) == 4);
  CHECK(super_catalan(2, 2) == 6);
  CHECK(super_catalan(3, 2) == 12);
  // S(0, n) is the central binomial coefficient.
  for (int n = 0; n <= 10; ++n) CHECK(super_catalan(0, n) == binomial(2 * n, n));
  for (int r = 0; r <= 5; ++r)
    for (int l = 0; l <= 5; ++l) CHECK(parity_difference(ClassParams(r, l, r, l)) == super_catalan(r, l));
}
