#ifndef CORNERWALK_CONJECTURES_HPP
#define CORNERWALK_CONJECTURES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cornerwalk/enumeration.hpp"
#include "cornerwalk/paths.hpp"
#include "cornerwalk/report.hpp"

namespace cornerwalk {

/// Which word pairs of a class a brute-force check visits: all of them
/// when there are at most exhaustive_limit, otherwise sample_pairs distinct
/// pairs drawn with a seeded generator.
struct SamplePolicy {
  std::size_t exhaustive_limit = 64;
  std::size_t sample_pairs = 24;
  std::uint64_t seed = 0x5eed2016;
};

std::vector<std::pair<VPath, HPath>> word_pairs(const ClassParams& p, const SamplePolicy& policy);

// Proven identities, each re-derived by brute force or a second route.

VerdictReport check_thmmain(const ClassParams& p, const SamplePolicy& policy = {});
VerdictReport check_cormod2(const ClassParams& p, const SamplePolicy& policy = {});
/// V, H must be loops; compares the peak-count polynomial at -1 with
/// C(i+j, i) and with parity_difference.
VerdictReport check_p1(const VPath& v, const HPath& h);
/// Every horizontal loop of half-length i against every vertical loop of
/// half-length j.
VerdictReport check_p1_all(int i, int j);
VerdictReport check_supercatalan(int r, int l);
/// Classes with d >= 1: every V ending in South, every H.
VerdictReport check_propbiject(const ClassParams& p);
VerdictReport check_coloring(const ClassParams& p);
VerdictReport check_propncount(const ClassParams& p);
VerdictReport check_lemf(int k, int n);
VerdictReport check_propg(int k, int n);
VerdictReport check_thmpos(int m, int n, bool brute_force);
/// Two reports: the equidistribution itself, and the literal k = 0 count
/// printed with it.
std::vector<VerdictReport> check_lemevencount(int m, int n);
VerdictReport check_toggle_classes(int m, int n);
VerdictReport check_propscale(const ClassParams& p);
/// Decomposes x^2 + 12x + 15 over the toggle basis and compares with the
/// published "not toggle-buildable" remark.
VerdictReport check_toggle_example();

// Open conjectures over Q (quarter mode) or its planar variant.

struct QData {
  VPath v;
  IntPoly g1; // peak-count
  IntPoly g2; // |signed peak-count|
};
/// One entry per admissible V: positive words in quarter mode, all words in
/// planar mode.
std::vector<QData> q_data(const ClassParams& p, PlaneMode mode);

VerdictReport check_conjmain(const ClassParams& p, PlaneMode mode);
VerdictReport check_conjx1equal(const ClassParams& p, PlaneMode mode);
VerdictReport check_conjbuild(const ClassParams& p, PlaneMode mode);
/// G2 is the same for every admissible V, and matches the closed form
/// whenever the quarter-plane filter cannot bind.
VerdictReport check_g2_invariance(const ClassParams& p, PlaneMode mode);
/// r = l, u = d.
VerdictReport check_p2(int r, int u, PlaneMode mode);
VerdictReport check_conj10(int max_len);

VerdictReport check_conjmain(const ClassParams& p, PlaneMode mode, const std::vector<QData>& data);
VerdictReport check_conjx1equal(const ClassParams& p, PlaneMode mode, const std::vector<QData>& data);
VerdictReport check_conjbuild(const ClassParams& p, PlaneMode mode, const std::vector<QData>& data);
VerdictReport check_g2_invariance(const ClassParams& p, PlaneMode mode, const std::vector<QData>& data);
VerdictReport check_p2(const ClassParams& p, PlaneMode mode, const std::vector<QData>& data);

/// Every (r,l,u,d) with entries in [0, max]; empty for max < 0.
std::vector<ClassParams> grid_up_to(int max);

enum class ScanCheck { ConjMain, ConjX1Equal, ConjBuild, P2, G2Invariance, Conj10 };
std::string to_string(ScanCheck c);
ScanCheck parse_scan_check(std::string_view name);
std::vector<ScanCheck> all_scan_checks();

struct ScanOptions {
  std::vector<ClassParams> points;
  std::vector<ScanCheck> checks;
  PlaneMode mode = PlaneMode::Quarter;
  unsigned jobs = 1;
  int loop_max_len = 10;
};

/// Runs every selected check at every point. Output order is the point
/// order, then the check order, with the loop scan last; it does not
/// depend on jobs.
std::vector<VerdictReport> scan(const ScanOptions& options);

/// Verification targets addressed by id (thmmain, cormod2, p1,
/// supercatalan, propbiject, coloring, propncount, lemf, propg, thmpos,
/// lemevencount, toggle, propscale, toggle-example).
std::vector<std::string> verify_ids();
/// Grid bound used when the caller gives none.
int default_verify_max(std::string_view id);
std::vector<VerdictReport> verify(std::string_view id, int max, unsigned jobs = 1);

/// Applies fn to every index in [0, n) on up to jobs threads; results keep
/// index order.
std::vector<std::vector<VerdictReport>> parallel_map(
    std::size_t n, unsigned jobs, const std::function<std::vector<VerdictReport>(std::size_t)>& fn);

bool all_confirmed(const std::vector<VerdictReport>& reports);

} // namespace cornerwalk

#endif
