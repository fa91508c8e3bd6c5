#include "cornerwalk/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cornerwalk/bijections.hpp"
#include "cornerwalk/conjectures.hpp"

namespace cornerwalk::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string out_file;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app->add_option("--out", c.out_file, "write output to FILE instead of stdout");
  app->add_flag("--timing", c.timing, "include per-report runtimes");
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw Error(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(v);
  }
  return out;
}

ClassParams parse_class(const std::string& text) {
  auto v = parse_ints(text, "class (expected r,l,u,d)");
  if (v.size() != 4) throw Error("--class expects four entries r,l,u,d");
  for (auto x : v)
    if (x < 0 || x > 1000) throw Error("--class entries must lie in [0, 1000]");
  return ClassParams(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                     static_cast<int>(v[3]));
}

IntPoly parse_poly(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt c;
    if (item.empty() || c.set_str(item, 10) != 0) throw Error("malformed --poly '" + text + "'");
    coeffs.push_back(c);
  }
  return IntPoly(std::move(coeffs));
}

std::string emit_object(const json& obj, Format f) {
  std::ostringstream os;
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  switch (f) {
  case Format::Json: os << obj.dump() << '\n'; break;
  case Format::Csv:
    os << "key,value\n";
    for (const auto& [k, v] : obj.items()) {
      auto s = text(v);
      if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
          if (ch == '"') quoted += '"';
          quoted += ch;
        }
        s = quoted + "\"";
      }
      os << k << ',' << s << '\n';
    }
    break;
  case Format::Pretty:
    for (const auto& [k, v] : obj.items()) os << k << ": " << text(v) << '\n';
    break;
  }
  return os.str();
}

json poly_extras(const IntPoly& p) {
  auto basis = toggle_basis_decompose(p);
  return json{{"positive", is_x_plus_1_positive(p)},
              {"toggle_basis", coeffs_json(basis)},
              {"toggle_buildable", is_toggle_buildable(p)},
              {"toggle_buildable_even", is_toggle_buildable_even(p)}};
}

void require_even_length(int len) {
  if (len < 0 || len % 2 != 0) throw Error("loop length must be even and non-negative");
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corner statistics on lattice-path shuffles: enumeration, generating functions, "
               "bijections and verification reports."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cornerwalk 1.0.0");

  Common common;
  std::string vpath, hpath, cls, stat_name = "peak", mode_name = "quarter", poly;
  std::optional<int> loops;
  int max = -1;
  int max_len = 10;
  unsigned jobs = default_jobs();

  auto* enumerate = app.add_subcommand("enumerate", "distribution of a statistic over a path set");
  enumerate->add_option("--vpath", vpath, "vertical word over N/S");
  enumerate->add_option("--hpath", hpath, "horizontal word over E/W");
  enumerate->add_option("--class", cls, "r,l,u,d (with --vpath: walks with r East, l West)");
  enumerate->add_option("--mode", mode_name)->check(CLI::IsMember({"quarter", "planar"}));
  enumerate->add_option("--loops", loops, "quarter-plane loops of this even length");
  enumerate->add_option("--stat", stat_name)
      ->check(CLI::IsMember({"peak", "signed-peak", "abs-signed-peak", "in-vert", "shifted-in-vert"}));
  add_common(enumerate, common);

  auto* gf = app.add_subcommand("gf", "generating polynomial, (x+1)-expansion and toggle basis");
  gf->add_option("--vpath", vpath);
  gf->add_option("--hpath", hpath);
  gf->add_option("--class", cls, "r,l,u,d");
  gf->add_option("--mode", mode_name)->check(CLI::IsMember({"quarter", "planar"}));
  gf->add_option("--loops", loops);
  gf->add_option("--poly", poly, "explicit coefficients c0,c1,...");
  gf->add_option("--stat", stat_name)
      ->check(CLI::IsMember({"peak", "signed-peak", "abs-signed-peak", "in-vert", "shifted-in-vert"}));
  add_common(gf, common);

  std::string op, shuffle_text, word_text;
  std::optional<std::size_t> index;
  auto* bij = app.add_subcommand("bijection", "apply a bijection to an explicit input");
  bij->add_option("op", op, "flip, complement, coloring, toggle, toggle-class, word-to-shuffle, shuffle-to-word")
      ->required()
      ->check(CLI::IsMember({"flip", "complement", "coloring", "toggle", "toggle-class",
                             "word-to-shuffle", "shuffle-to-word"}));
  bij->add_option("--shuffle", shuffle_text, "shuffle over E/W/N/S");
  bij->add_option("--word", word_text, "binary word");
  bij->add_option("--index", index, "0-based pair index for toggle");
  bij->add_option("--vpath", vpath);
  bij->add_option("--hpath", hpath);
  add_common(bij, common);

  std::string verify_id;
  auto* ver = app.add_subcommand("verify", "re-derive a proven identity over a parameter grid");
  auto ids = verify_ids();
  ids.push_back("all");
  ver->add_option("id", verify_id)->required()->check(CLI::IsMember(ids));
  ver->add_option("--max", max, "grid bound (default depends on the id)");
  ver->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)")->check(CLI::Range(1u, 1024u));
  add_common(ver, common);

  std::vector<std::string> scan_ids;
  auto* sc = app.add_subcommand("scan", "search for counterexamples to the open conjectures");
  std::vector<std::string> scan_names{"all"};
  for (auto c : all_scan_checks()) scan_names.push_back(to_string(c));
  sc->add_option("ids", scan_ids)->required()->check(CLI::IsMember(scan_names));
  sc->add_option("--max", max, "grid bound for r,l,u,d (default 3)");
  sc->add_option("--class", cls, "scan a single point r,l,u,d");
  sc->add_option("--mode", mode_name)->check(CLI::IsMember({"quarter", "planar"}));
  sc->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)")->check(CLI::Range(1u, 1024u));
  sc->add_option("--max-len", max_len, "loop length bound for conj10 (default 10)");
  add_common(sc, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::string text;
  int status = kOk;
  try {
    const auto fmt = parse_format(common.format);
    const auto mode = parse_plane_mode(mode_name);
    const auto stat = parse_statistic(stat_name);

    if (*enumerate) {
      Distribution d;
      if (loops) {
        require_even_length(*loops);
        d = distribution(quarter_planar_loops(*loops), stat);
      } else if (!vpath.empty() && !hpath.empty()) {
        d = distribution(shuffles(VPath::parse(vpath), HPath::parse(hpath)), stat);
      } else if (!vpath.empty() && !cls.empty()) {
        auto p = parse_class(cls);
        d = distribution(WalkEnumerator(VPath::parse(vpath), p.r, p.l, mode), stat);
      } else {
        throw Error("enumerate needs --vpath with --hpath or --class, or --loops");
      }
      text = emit(d, fmt);
    } else if (*gf) {
      IntPoly p;
      json extra;
      if (!poly.empty()) {
        p = parse_poly(poly);
        extra["source"] = "explicit";
      } else if (loops) {
        require_even_length(*loops);
        p = distribution(quarter_planar_loops(*loops), stat).to_poly();
        extra["source"] = "loops";
      } else if (!vpath.empty() && !hpath.empty()) {
        p = distribution(shuffles(VPath::parse(vpath), HPath::parse(hpath)), stat).to_poly();
        extra["source"] = "brute-force";
      } else if (!vpath.empty() && !cls.empty()) {
        auto c = parse_class(cls);
        auto v = VPath::parse(vpath);
        p = distribution(WalkEnumerator(v, c.r, c.l, mode), stat).to_poly();
        extra["source"] = to_string(mode);
      } else if (!cls.empty()) {
        if (stat != Statistic::AbsSignedPeak)
          throw Error("a class alone has a closed form only for --stat abs-signed-peak");
        p = gf_abs_signed(parse_class(cls));
        extra["source"] = "closed-form";
      } else {
        throw Error("gf needs --poly, --loops, --vpath with --hpath or --class, or --class");
      }
      if (extra["source"] != "explicit") extra["stat"] = to_string(stat);
      extra.update(poly_extras(p));
      text = emit(p, fmt, extra);
    } else if (*bij) {
      json result{{"op", op}};
      if (op == "flip" || op == "complement" || op == "coloring") {
        if (shuffle_text.empty()) throw Error(op + " needs --shuffle");
        auto s = Shuffle::parse(shuffle_text);
        result["input"] = s.str();
        if (op == "flip") {
          auto f = flip(s);
          result["output"] = f.str();
          result["signed_peak"] = std::to_string(signed_peak_count(s));
          result["shifted_in_vert_of_output"] = std::to_string(shifted_in_vert(f));
        } else if (op == "complement") {
          result["output"] = complement(s).str();
        } else {
          auto c = coloring_encode(s);
          auto idx = [](const std::vector<std::size_t>& v) {
            json a = json::array();
            for (auto i : v) a.push_back(std::to_string(i));
            return a;
          };
          result["origin_blue"] = c.origin_blue;
          result["blue_vertical"] = idx(c.blue_vertical);
          result["blue_horizontal"] = idx(c.blue_horizontal);
          auto [v, h] = projections(s);
          result["blue_inward"] = std::to_string(c.blue_inward(v, h));
          result["in_vert"] = std::to_string(in_vert(s));
        }
      } else if (op == "toggle" || op == "toggle-class") {
        if (word_text.empty()) throw Error(op + " needs --word");
        auto w = BinaryWord::parse(word_text);
        result["input"] = w.str();
        if (op == "toggle") {
          if (!index) throw Error("toggle needs --index");
          result["output"] = toggle(w, *index).str();
        } else {
          auto c = toggle_class(w);
          result["anchor"] = c.anchor;
          result["base"] = c.base;
          result["size"] = std::to_string(c.size());
          json members = json::array();
          for (const auto& m : c.members()) members.push_back(m.str());
          result["members"] = members;
        }
      } else {
        if (vpath.empty() || hpath.empty()) throw Error(op + " needs --vpath and --hpath");
        auto v = VPath::parse(vpath);
        auto h = HPath::parse(hpath);
        if (op == "word-to-shuffle") {
          if (word_text.empty()) throw Error(op + " needs --word");
          auto w = BinaryWord::parse(word_text);
          auto s = word_to_shuffle(w, v, h);
          result["input"] = w.str();
          result["output"] = s.str();
          result["shifted_even_count"] = shifted_even_count(w).str();
          result["signed_peak"] = std::to_string(signed_peak_count(s));
        } else {
          if (shuffle_text.empty()) throw Error(op + " needs --shuffle");
          auto s = Shuffle::parse(shuffle_text);
          auto w = shuffle_to_word(s, v, h);
          result["input"] = s.str();
          result["output"] = w.str();
        }
      }
      text = emit_object(result, fmt);
    } else if (*ver) {
      std::vector<VerdictReport> reports;
      std::vector<std::string> targets =
          verify_id == "all" ? verify_ids() : std::vector<std::string>{verify_id};
      for (const auto& id : targets) {
        auto chunk = verify(id, max >= 0 ? max : default_verify_max(id), jobs);
        reports.insert(reports.end(), chunk.begin(), chunk.end());
      }
      text = emit(reports, fmt, common.timing);
      if (!all_confirmed(reports)) status = kSurprise;
    } else if (*sc) {
      ScanOptions options;
      options.mode = mode;
      options.jobs = jobs;
      options.loop_max_len = max_len;
      require_even_length(max_len);
      if (!cls.empty()) options.points = {parse_class(cls)};
      else options.points = grid_up_to(max >= 0 ? max : 3);
      for (const auto& name : scan_ids) {
        if (name == "all") {
          options.checks = all_scan_checks();
          break;
        }
        options.checks.push_back(parse_scan_check(name));
      }
      auto reports = scan(options);
      text = emit(reports, fmt, common.timing);
      if (!all_confirmed(reports)) status = kSurprise;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (common.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(common.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << common.out_file << '\n';
      return kUsage;
    }
    file << text;
  }
  return status;
}

} // namespace cornerwalk::cli
