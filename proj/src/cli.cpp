#include "rankrange/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "rankrange/errors.hpp"
#include "rankrange/io.hpp"
#include "rankrange/kregular.hpp"
#include "rankrange/oracle.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/svg.hpp"
#include "rankrange/synthesis.hpp"

namespace rankrange::cli {

namespace {

using io::Json;

constexpr double kAgreementTol = 1e-7;
constexpr std::size_t kSweepAngles = 64;

struct Options {
  std::string input = "-";
  std::optional<std::size_t> k;
  double tol = Tolerance{}.abs;
  std::optional<double> angle_tol;
  std::string svg_path;
  bool oracle = false;
  bool json = false;

  Tolerance tolerance() const {
    Tolerance t;
    t.abs = tol;
    if (angle_tol) t.angle = *angle_tol;
    return t;
  }
};

Json read_document(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opt.input);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot open " + opt.input);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return io::parse(text);
}

std::size_t rank(const Options& opt, const Json& doc) {
  if (opt.k) return *opt.k;
  if (auto k = io::rank_from_json(doc)) return *k;
  throw Error(ErrorCode::InvalidInput, "rank k not given (use --k or a \"k\" field)");
}

void write_svg(const Options& opt, const ConvexRegion& region, std::span<const CPoint> eigenvalues,
               std::span<const CPoint> reference = {}) {
  if (opt.svg_path.empty()) return;
  std::ofstream file(opt.svg_path);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + opt.svg_path);
  file << svg::render(region, eigenvalues, reference);
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(io::kDigits);
  os << io::round_digits(x);
  return os.str();
}

std::string format_point(CPoint z) { return format_number(z.real()) + ' ' + format_number(z.imag()); }

void print_region(std::ostream& out, const ConvexRegion& region) {
  out << to_string(region.kind()) << '\n';
  for (CPoint v : region.vertices()) out << "  " << format_point(v) << '\n';
}

void print_spectrum(std::ostream& out, const NormalSpectrum& sp) {
  for (const Eigenvalue& e : sp.entries()) {
    out << "  " << format_point(e.value) << " x" << e.multiplicity << '\n';
  }
}

void print_angles(std::ostream& out, const char* label, const std::vector<double>& xs) {
  out << label << ':';
  for (double x : xs) out << ' ' << format_number(x);
  out << '\n';
}

bool regions_agree(const ConvexRegion& a, const ConvexRegion& b) {
  return region_equal(a, b, kAgreementTol);
}

int cmd_range(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = read_document(opt, in);
  const Tolerance tol = opt.tolerance();
  const NormalSpectrum sp = io::spectrum_from_json(doc, tol);
  const std::size_t k = rank(opt, doc);
  const ConvexRegion region = lambda_k(sp, k, tol);

  Json result = io::to_json(region);
  std::optional<bool> agrees;
  if (opt.oracle) {
    agrees = regions_agree(region, oracle::hull_intersection(sp, k, tol));
    result["oracle_agrees"] = *agrees;
  }
  write_svg(opt, region, sp.distinct_values());

  if (opt.json) {
    out << io::dump(result) << '\n';
  } else {
    print_region(out, region);
    if (agrees) out << "oracle: " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees && !*agrees ? kVerificationError : kOk;
}

int cmd_synthesize(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = read_document(opt, in);
  const Tolerance tol = opt.tolerance();
  const std::size_t k = rank(opt, doc);

  SynthesisOutput result;
  std::vector<CPoint> reference;
  const bool by_vertices = !(doc.is_object() && doc.contains("support"));
  std::vector<CPoint> raw = by_vertices ? io::vertices_from_json(doc) : std::vector<CPoint>{};
  const ConvexRegion hull = by_vertices ? convex_hull(raw, tol) : ConvexRegion{};
  if (by_vertices && (hull.kind() == RegionKind::Point || hull.kind() == RegionKind::Segment) &&
      raw.size() <= 2) {
    const auto& v = hull.vertices();
    result = synthesize_degenerate(v.front(), v.back(), k, tol);
    reference = v;
  } else {
    const PolygonSpec polygon = io::polygon_from_json(doc, tol);
    result = synthesize(polygon, k, tol);
    reference = polygon.vertices;
  }
  write_svg(opt, lambda_k(result.spectrum, k, tol), result.spectrum.distinct_values(), reference);

  if (opt.json) {
    out << io::dump(io::to_json(result)) << '\n';
  } else {
    out << "n: " << result.n << "\nq: " << result.q << '\n';
    print_angles(out, "added", result.added);
    out << "spectrum:\n";
    print_spectrum(out, result.spectrum);
  }
  return kOk;
}

int cmd_check_regular(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = read_document(opt, in);
  const std::size_t k = rank(opt, doc);
  const double angle_tol = opt.angle_tol.value_or(kDirectionTol);
  const DirectionSet ds(io::angles_from_json(doc), angle_tol);

  Json result = {{"k", k},
                 {"p", ds.size()},
                 {"antipodal_pairs", ds.antipodal_pairs()},
                 {"regular", is_k_regular(ds, k, angle_tol)},
                 {"one_regular", is_k_regular(ds, 1, angle_tol)}};
  std::optional<ExtensionResult> ext;
  if (result["one_regular"].get<bool>()) {
    ext = minimal_extension(ds, k);
    result["q"] = ext->q;
    result["added"] = ext->added;
    if (ext->witness_removed) result["removed"] = *ext->witness_removed;
  }

  if (opt.json) {
    out << io::dump(result) << '\n';
  } else {
    out << "regular: " << (result["regular"].get<bool>() ? "true" : "false") << '\n';
    if (ext) {
      out << "q: " << ext->q << '\n';
      print_angles(out, "added", ext->added);
      if (ext->witness_removed) print_angles(out, "removed", *ext->witness_removed);
    } else {
      out << "not 1-regular: no finite extension count\n";
    }
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = read_document(opt, in);
  const Tolerance tol = opt.tolerance();
  const NormalSpectrum sp = io::spectrum_from_json(doc, tol);
  const std::size_t k = rank(opt, doc);
  const ConvexRegion region = lambda_k(sp, k, tol);

  Json result = {{"region", io::to_json(region)}};
  bool agree = true;
  if (sp.dimension() <= oracle::kMaxHullDimension) {
    const ConvexRegion hull = oracle::hull_intersection(sp, k, tol);
    const bool ok = regions_agree(region, hull);
    result["hull"] = {{"region", io::to_json(hull)}, {"agrees", ok}};
    agree = agree && ok;
  }
  ConvexRegion swept;
  try {
    swept = oracle::sweep_region(oracle::angle_sweep(sp, k, kSweepAngles, true, tol), tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnboundedRegion) throw;
  }
  const bool sweep_ok = regions_agree(region, swept);
  result["sweep"] = {{"region", io::to_json(swept)}, {"agrees", sweep_ok}};
  agree = agree && sweep_ok;
  result["agree"] = agree;
  write_svg(opt, region, sp.distinct_values());

  if (opt.json) {
    out << io::dump(result) << '\n';
  } else {
    print_region(out, region);
    out << (agree ? "oracles agree" : "oracles DISAGREE") << '\n';
  }
  return agree ? kOk : kVerificationError;
}

int cmd_prune(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = read_document(opt, in);
  const Tolerance tol = opt.tolerance();
  const NormalSpectrum sp = io::spectrum_from_json(doc, tol);
  const std::size_t k = rank(opt, doc);
  const NormalSpectrum pruned = prune_spectrum(sp, k, tol);

  std::vector<CPoint> removed;
  for (CPoint v : sp.distinct_values()) {
    const auto& kept = pruned.entries();
    const bool present = std::any_of(kept.begin(), kept.end(),
                                     [&](const Eigenvalue& e) { return e.value == v; });
    if (!present) removed.push_back(v);
  }
  write_svg(opt, lambda_k(pruned, k, tol), pruned.distinct_values(), removed);

  if (opt.json) {
    Json gone = Json::array();
    for (CPoint v : removed) gone.push_back(io::point_to_json(v));
    out << io::dump({{"spectrum", io::to_json(pruned)}, {"removed", gone}}) << '\n';
  } else {
    out << "kept:\n";
    print_spectrum(out, pruned);
    out << "removed:\n";
    for (CPoint v : removed) out << "  " << format_point(v) << '\n';
  }
  return kOk;
}

void report(std::ostream& err, const std::string& code, const std::string& message) {
  err << io::dump({{"error", {{"code", code}, {"message", message}}}}) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rank-k numerical ranges of normal matrices", "rankrange"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "input document (default: stdin)");
    sub->add_option("--k", opt.k, "rank k (overrides the document)");
    sub->add_option("--tol", opt.tol, "absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--angle-tol", opt.angle_tol, "angular tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--svg", opt.svg_path, "write an SVG figure");
    sub->add_flag("--oracle", opt.oracle, "cross-check against the hull oracle");
    sub->add_flag("--json", opt.json, "structured output");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*handler)(const Options&, std::istream&, std::ostream&);
  };
  const Command commands[] = {
      {"range", "rank-k range of a spectrum", cmd_range},
      {"synthesize", "smallest spectrum with a given polygon as rank-k range", cmd_synthesize},
      {"check-regular", "k-regularity and minimal extension of a direction set",
       cmd_check_regular},
      {"verify", "compare the range against both oracles", cmd_verify},
      {"prune", "drop eigenvalues that do not shape the range", cmd_prune},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) subs.emplace_back(app.add_subcommand(c.name, c.help), &c);
  for (auto& [sub, c] : subs) add_common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    report(err, "InvalidInput", e.what());
    return kInputError;
  }

  try {
    for (auto& [sub, c] : subs) {
      if (sub->parsed()) return c->handler(opt, in, out);
    }
  } catch (const Error& e) {
    report(err, std::string(to_string(e.code())), e.what());
    return e.code() == ErrorCode::VerificationFailed ? kVerificationError : kInputError;
  } catch (const std::exception& e) {
    report(err, "InvalidInput", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace rankrange::cli
