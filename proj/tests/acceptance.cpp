// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Pass --full to run the conjecture scans on entries <= 4.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "cornerwalk/conjectures.hpp"

using namespace cornerwalk;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string tally(const std::vector<VerdictReport>& reports) {
  std::size_t confirmed = 0;
  for (const auto& r : reports)
    if (r.verdict == Verdict::Confirmed) ++confirmed;
  return std::to_string(confirmed) + "/" + std::to_string(reports.size()) + " confirmed";
}

Outcome all_of(const std::vector<std::pair<std::string, int>>& targets) {
  std::vector<VerdictReport> reports;
  for (const auto& [id, max] : targets) {
    auto chunk = verify(id, max, jobs());
    reports.insert(reports.end(), chunk.begin(), chunk.end());
  }
  return {all_confirmed(reports), tally(reports)};
}

Outcome lemevencount() {
  auto reports = verify("lemevencount", 3, jobs());
  std::vector<VerdictReport> equidistribution;
  std::size_t k0_reports = 0;
  std::size_t k0_discrepancies = 0;
  bool ok = true;
  for (const auto& r : reports) {
    if (r.check == "lemevencount-k0") {
      ++k0_reports;
      if (r.verdict == Verdict::DiscrepancyWithPaper) ++k0_discrepancies;
      if (r.verdict == Verdict::Counterexample) ok = false;
    } else {
      equidistribution.push_back(r);
    }
  }
  ok = ok && all_confirmed(equidistribution) && k0_reports == equidistribution.size();
  return {ok, tally(equidistribution) + "; k=0 formula: " + std::to_string(k0_discrepancies) + "/" +
                  std::to_string(k0_reports) + " points report discrepancy-with-paper"};
}

Outcome conjecture_scans(int max) {
  std::vector<VerdictReport> reports;
  for (auto mode : {PlaneMode::Quarter, PlaneMode::Planar}) {
    ScanOptions options;
    options.points = grid_up_to(max);
    options.checks = {ScanCheck::ConjMain, ScanCheck::ConjX1Equal, ScanCheck::ConjBuild, ScanCheck::P2};
    options.mode = mode;
    options.jobs = jobs();
    auto chunk = scan(options);
    reports.insert(reports.end(), chunk.begin(), chunk.end());
  }
  reports.push_back(check_conj10(10));
  return {all_confirmed(reports), tally(reports) + " (grid entries <= " + std::to_string(max) +
                                      ", both modes, loops <= 10)"};
}

Outcome toggle_probe() {
  auto r = check_toggle_example();
  auto j = to_json(r, false);
  bool has_coeffs = r.observed.contains("basis_coeffs") &&
                    r.observed["basis_coeffs"] == json::array({"4", "8", "1"});
  bool has_verdict = j.contains("verdict") && j["verdict"].is_string();
  return {has_coeffs && has_verdict,
          "basis coefficients " + r.observed["basis_coeffs"].dump() + ", verdict " + to_string(r.verdict)};
}

} // namespace

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::string(argv[1]) == "--full";
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "signed peak-count closed form (entries <= 4)", 60, [] { return all_of({{"thmmain", 4}}); }},
      {2, "peak-count at -1 on loop pairs (i, j <= 4)", 60, [] { return all_of({{"p1", 4}, {"cormod2", 4}}); }},
      {3, "super Catalan specialization (r, l <= 5)", 1, [] { return all_of({{"supercatalan", 5}}); }},
      {4, "flip, colorings and In-Vert counts (sizes <= 4)", 60,
       [] { return all_of({{"propbiject", 4}, {"coloring", 4}, {"propncount", 4}}); }},
      {5, "shifted closed forms of bin_k(n), bin^k(n) (n <= 12)", 1,
       [] { return all_of({{"lemf", 12}, {"propg", 12}}); }},
      {6, "absolute signed peak-count expansion (m, n <= 5)", 120, [] { return all_of({{"thmpos", 5}}); }},
      {7, "even-count equidistribution (m, n <= 3)", 60, lemevencount},
      {8, "toggle classes (m, n <= 3)", 30, [] { return all_of({{"toggle", 3}}); }},
      {9, "factorial-weighted symmetry (entries <= 5)", 1, [] { return all_of({{"propscale", 5}}); }},
      {10, "conjecture scans", 600, [full] { return conjecture_scans(full ? 4 : 3); }},
      {11, "x^2 + 12x + 15 over the toggle basis", 60, toggle_probe},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs <= c.budget_s;
    bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("%s %2d  %-55s %8.2fs (budget %.0fs)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_s, o.detail.c_str(), in_budget ? "" : " [over budget]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
