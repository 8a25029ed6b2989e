// g2qm: command-line front end.
//
// Exit codes: 0 success, 1 mathematical negative, 2 input error, 3 numerical failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2qm/endodetect/endodetect.hpp"
#include "g2qm/hypnum/theta.hpp"
#include "g2qm/igusa/igusa.hpp"
#include "g2qm/io/json_io.hpp"
#include "g2qm/pollab/polarization.hpp"
#include "g2qm/quatalg/classnumber.hpp"
#include "g2qm/quatalg/hilbert.hpp"
#include "g2qm/richelot/richelot.hpp"
#include "report.hpp"

using nlohmann::json;
using namespace g2qm;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct JobConfig {
  int precision{kDefaultDigits};
  std::string max_den{"100000000"};
  std::string pairing;
  std::string file;
  bool json{false};
  bool expect_principal{false};
  bool identities{false};

  ReconstructConfig reconstruct() const {
    ReconstructConfig cfg;
    cfg.digits = checked_digits(precision);
    try {
      cfg.max_denominator = Integer(max_den);
    } catch (const std::exception&) {
      throw InputError("--max-den must be a positive integer");
    }
    if (cfg.max_denominator < 1) throw InputError("--max-den must be a positive integer");
    return cfg;
  }
};

// Failure inside a named pipeline stage; the report so far is kept.
struct StageError : std::runtime_error {
  StageError(std::string stage, const std::string& what, int code)
      : std::runtime_error(stage + ": " + what), stage(std::move(stage)), code(code) {}
  std::string stage;
  int code;
};

struct MathNegative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const NumericalFailure& e) {
    throw StageError(name, e.what(), kExitNumeric);
  } catch (const DecomposableSurface& e) {
    throw StageError(name, e.what(), kExitNumeric);
  } catch (const InputError& e) {
    throw StageError(name, e.what(), kExitInput);
  } catch (const SingularModel& e) {
    throw StageError(name, e.what(), kExitInput);
  }
}

json parsed(const std::string& s) { return json::parse(s); }

json quad(const QuadElem& x) { return {{"exact", parsed(json_quad(x))}, {"text", x.str()}}; }

json real_text(const Real& x) { return to_string(x, 6); }

json complex_list(const std::vector<BigComplex>& v, int digits) {
  json out = json::array();
  for (const auto& z : v) out.push_back(parsed(json_complex(z, digits)));
  return out;
}

std::string pairs_text(const std::array<std::pair<int, int>, 3>& p) {
  std::string s;
  for (const auto& [a, b] : p) s += "(x" + std::to_string(a + 1) + ",x" + std::to_string(b + 1) + ")";
  return s;
}

std::optional<std::vector<Loop>> chosen_loops(const JobConfig& job, const CurveFile& cf) {
  if (!job.pairing.empty()) return stage("input", [&] { return parse_loops(job.pairing); });
  return cf.loops;
}

json roots_report(const BranchPoints& bp, int digits) {
  return {{"branch_points", complex_list(bp.roots, digits)},
          {"infinity", bp.infinity},
          {"max_residual", real_text(bp.max_residual)}};
}

json riemann_report(const RiemannResiduals& r, int digits) {
  return {{"relation", real_text(r.relation)},
          {"scale", real_text(r.scale)},
          {"min_eigenvalue", real_text(r.min_eigen)},
          {"holds", r.holds(digits)}};
}

json invariants_report(const CurveModel& c, int digits) {
  InvariantTuple inv = igusa_invariants(c, digits);
  json exact = json::array(), numeric = json::array();
  for (const auto& x : inv.absolute) exact.push_back(quad(x));
  for (const auto& z : inv.absolute_numeric) numeric.push_back(parsed(json_complex(z, 20)));
  bool rational = std::all_of(inv.absolute.begin(), inv.absolute.end(), [](const QuadElem& x) { return x.is_rational(); });
  return {{"igusa_clebsch",
           {{"I2", quad(inv.exact.i2)}, {"I4", quad(inv.exact.i4)}, {"I6", quad(inv.exact.i6)}, {"I10", quad(inv.exact.i10)}}},
          {"absolute", exact},
          {"absolute_from_roots", numeric},
          {"rational", rational},
          {"isomorphic_to_conjugate", same_invariants(c, conjugate_curve(c))}};
}

json order_report(const QuatOrder& o) {
  json basis = json::array();
  for (const auto& b : o.basis()) basis.push_back(b.str());
  json out{{"algebra", o.algebra().str()}, {"basis", basis}};
  auto ram = ramification(o.algebra());
  out["ramified_primes"] = ram.finite;
  out["definite"] = ram.definite();
  out["discriminant"] = order_discriminant(o).str();
  if (!ram.definite()) {
    out["algebra_discriminant"] = ram.reduced_discriminant().str();
    out["maximal"] = is_maximal(o);
  }
  return out;
}

json search_report(const PrincipalSearch& ps) {
  json classes = json::array();
  for (const auto& c : ps.principal)
    classes.push_back({{"gamma", c.gamma.str()},
                       {"class_size", c.class_size},
                       {"twisted_form", parsed(json_matrix(c.twisted))},
                       {"symplectic_change", parsed(json_matrix(c.change))}});
  json rejected = json::array();
  for (const auto& c : ps.rejected)
    rejected.push_back({{"gamma", c.gamma.str()}, {"integral", c.integral}, {"type", c.integral ? c.type.str() : "-"}});
  json out{{"start_type", ps.start_type.str()},
           {"norm", ps.norm},
           {"principal_classes", ps.principal.size()},
           {"classes", classes},
           {"rejected", rejected},
           {"certified", ps.certified}};
  out["expected"] = ps.expected ? json(*ps.expected) : json();
  return out;
}

struct EndoStage {
  QuatAction action;
  OrderScan scan;
  QuatInvolution rosati;
};

EndoStage detect_stage(const CurveFile& cf, const PeriodMatrix& pm, const ReconstructConfig& cfg) {
  if (!cf.ti || !cf.tj) throw InputError("curve file has no 'endomorphisms' entry");
  QuatAction g = stage("endomorphisms", [&] { return detect_generators(pm.omega, *cf.ti, *cf.tj, cfg); });
  if (cf.algebra && !(*cf.algebra == g.algebra))
    throw StageError("endomorphisms", "detected generators satisfy " + g.algebra.str() + ", file declares " + cf.algebra->str(), kExitNegative);
  long bound = default_denominator_bound(g.algebra, *cf.ti, *cf.tj);
  OrderScan scan = stage("order", [&] { return scan_order(g, bound); });
  QuatInvolution inv = rosati_involution(g, pm.form);
  return {g, scan, inv};
}

json endo_report(const EndoStage& e) {
  json order = order_report(e.scan.order);
  order["scan_bound"] = e.scan.bound;
  order["candidates_passed"] = e.scan.passed;
  return {{"generators", {{"i", parsed(json_matrix(e.action.mi))}, {"j", parsed(json_matrix(e.action.mj))}}},
          {"order", order},
          {"rosati", {{"matrix", parsed(json_matrix(e.rosati.matrix()))}, {"j_sign", e.rosati.j_sign()}}}};
}

json cmd_curve_periods(const JobConfig& job) {
  auto cfg = job.reconstruct();
  int P = cfg.digits;
  CurveFile cf = read_curve_file(job.file);
  BranchPoints bp = stage("roots", [&] { return find_roots(cf.curve, P); });
  PeriodMatrix pm = stage("periods", [&] { return build_period_matrix(bp, chosen_loops(job, cf), P); });
  json out{{"curve", parsed(curve_json(cf.curve))}, {"precision", P}, {"roots", roots_report(bp, P)}};
  out["period_matrix"] = parsed(json_period_matrix(pm, P));
  out["riemann"] = riemann_report(validate_riemann(pm.omega, pm.form, P), P);
  if (frobenius_type(pm.form).type.principal()) {
    stage("rosenhain", [&] {
      auto sp = symplectic_period_matrix(pm);
      auto tau = small_period_matrix(sp.omega, P);
      auto red = siegel_reduce(tau);
      json t = json::array();
      for (std::size_t r = 0; r < 2; ++r)
        t.push_back(json::array({parsed(json_complex(tau.tau(r, 0), P)), parsed(json_complex(tau.tau(r, 1), P))}));
      out["tau"] = t;
      auto ro = rosenhain_reconstruct(red.tau, P);
      out["rosenhain_lambda"] = complex_list({ro.lambda.begin(), ro.lambda.end()}, P);
      return 0;
    });
  }
  return out;
}

json cmd_curve_igusa(const JobConfig& job) {
  auto cfg = job.reconstruct();
  CurveFile cf = read_curve_file(job.file);
  json out{{"curve", parsed(curve_json(cf.curve))}, {"precision", cfg.digits}};
  out["invariants"] = stage("igusa", [&] { return invariants_report(cf.curve, cfg.digits); });
  return out;
}

json cmd_curve_richelot(const JobConfig& job) {
  auto cfg = job.reconstruct();
  int P = cfg.digits;
  CurveFile cf = read_curve_file(job.file);
  if (cf.curve.degree() != 6) throw InputError("Richelot groupings need a sextic model");
  auto rows = stage("richelot", [&] { return richelot_table(cf.curve, cfg); });
  json table = json::array();
  json images = json::array();
  std::size_t self = 0;
  for (const auto& r : rows) {
    json row{{"grouping", pairs_text(r.grouping.pairs)},
             {"exact", r.grouping.exact},
             {"delta", r.delta ? r.delta->str() : (r.degenerate ? std::string("0") : r.delta_numeric.str(12))},
             {"degenerate", r.degenerate},
             {"i1", r.degenerate ? json() : json(r.absolute[0].str(10))},
             {"i2", r.degenerate ? json() : json(r.absolute[1].str(10))},
             {"i3", r.degenerate ? json() : json(r.absolute[2].str(10))},
             {"self_isogeny", r.self_isogeny}};
    table.push_back(row);
    if (r.self_isogeny) ++self;
    if (r.image) {
      CurveModel im(*r.image, "image " + pairs_text(r.grouping.pairs));
      json entry{{"grouping", pairs_text(r.grouping.pairs)}, {"delta", quad(*r.delta)}, {"curve", parsed(curve_json(im))}};
      if (job.identities) {
        entry["period_identities"] = stage("isogeny periods", [&] {
          json ids = json::array();
          auto src = find_roots(cf.curve, P);
          auto dst = find_roots(im, P);
          for (const auto& x : discover_isogeny_periods(src, dst, std::nullopt, P))
            ids.push_back({{"source", "x" + std::to_string(x.id.a + 1) + "->x" + std::to_string(x.id.b + 1)},
                           {"factor", x.id.factor},
                           {"target", "x'" + std::to_string(x.id.p + 1) + "->x'" + std::to_string(x.id.q + 1)},
                           {"residual_dx", real_text(x.residual[0])},
                           {"residual_xdx", real_text(x.residual[1])}});
          return ids;
        });
      }
      images.push_back(entry);
    }
  }
  return {{"curve", parsed(curve_json(cf.curve))},
          {"precision", P},
          {"groupings", table},
          {"self_isogenies", self},
          {"exact_images", images}};
}

json cmd_curve_analyze(const JobConfig& job) {
  auto cfg = job.reconstruct();
  int P = cfg.digits;
  CurveFile cf = read_curve_file(job.file);
  BranchPoints bp = stage("roots", [&] { return find_roots(cf.curve, P); });
  PeriodMatrix pm = stage("periods", [&] { return build_period_matrix(bp, chosen_loops(job, cf), P); });
  auto rr = validate_riemann(pm.omega, pm.form, P);
  json out{{"curve", parsed(curve_json(cf.curve))}, {"precision", P}, {"roots", roots_report(bp, P)}};
  out["period_matrix"] = parsed(json_period_matrix(pm, P));
  out["riemann"] = riemann_report(rr, P);
  if (!rr.holds(P)) throw StageError("periods", "Riemann relations fail, relation " + to_string(rr.relation, 6), kExitNumeric);
  if (cf.ti) {
    EndoStage e = detect_stage(cf, pm, cfg);
    out["endomorphisms"] = endo_report(e);
    out["polarizations"] = stage("polarizations", [&] {
      QMLattice lat{e.scan.order, e.action, pm.form, cf.curve.label()};
      validate_lattice(lat);
      return search_report(principal_search(lat, e.rosati));
    });
    if (job.expect_principal && out["polarizations"]["principal_classes"] == 0)
      throw MathNegative("no principal polarization");
  }
  out["invariants"] = stage("igusa", [&] { return invariants_report(cf.curve, P); });
  return out;
}

json cmd_endo_detect(const JobConfig& job) {
  auto cfg = job.reconstruct();
  int P = cfg.digits;
  CurveFile cf = read_curve_file(job.file);
  BranchPoints bp = stage("roots", [&] { return find_roots(cf.curve, P); });
  PeriodMatrix pm = stage("periods", [&] { return build_period_matrix(bp, chosen_loops(job, cf), P); });
  json out{{"curve", parsed(curve_json(cf.curve))}, {"precision", P}};
  out["loops"] = parsed(json_period_matrix(pm, P))["loops"];
  out["form"] = parsed(json_matrix(pm.form));
  out.update(endo_report(detect_stage(cf, pm, cfg)));
  return out;
}

json cmd_order_check(const JobConfig& job) {
  QMLattice lat = read_lattice_file(job.file);
  json out{{"label", lat.label}, {"order", order_report(lat.order)}};
  out["form"] = parsed(json_matrix(lat.form));
  out["type"] = frobenius_type(lat.form).type.str();
  return out;
}

json cmd_polarize_search(const JobConfig& job) {
  QMLattice lat = read_lattice_file(job.file);
  QuatInvolution inv = rosati_involution(lat.action, lat.form);
  json out{{"label", lat.label}, {"order", order_report(lat.order)}};
  out["rosati"] = {{"matrix", parsed(json_matrix(inv.matrix()))}, {"j_sign", inv.j_sign()}};
  out["search"] = search_report(principal_search(lat, inv));
  if (job.expect_principal && out["search"]["principal_classes"] == 0) throw MathNegative("no principal polarization");
  return out;
}

json algebra_info(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InputError("a and b must be nonzero");
  QuatAlgebra alg(a, b);
  auto ram = ramification(alg);
  json out{{"algebra", alg.str()}, {"ramified_primes", ram.finite}, {"definite", ram.definite()}};
  Integer D = ram.reduced_discriminant();
  out["D"] = D.str();
  out["split"] = ram.finite.empty() && !ram.definite();
  if (!ram.definite() && D > 1) {
    long d = D.convert_to<long>();
    out["pi"] = pi_principal_count(d).str();
    out["h(-4D)"] = class_number(-4 * d);
    out["h(-D)"] = d % 4 == 3 ? json(class_number(-d)) : json();
  }
  return out;
}

void emit(const JobConfig& job, const json& report) {
  if (job.json)
    std::cout << report.dump(2) << '\n';
  else
    cli::print_table(std::cout, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-two curves and abelian surfaces with quaternionic multiplication"};
  app.require_subcommand(1);
  JobConfig job;
  auto common = [&](CLI::App* c, bool numeric) {
    c->add_flag("--json", job.json, "Emit JSON instead of a table");
    if (!numeric) return;
    c->add_option("--precision", job.precision, "Working precision in decimal digits")
        ->check(CLI::Range(kMinDigits, kMaxDigits));
    c->add_option("--max-den", job.max_den, "Largest denominator accepted when recognizing exact values");
  };
  auto with_file = [&](CLI::App* c, const char* what) {
    c->add_option("file", job.file, what)->required();
  };

  std::function<json()> run;

  auto* curve = app.add_subcommand("curve", "Curve pipeline")->require_subcommand(1);
  auto* analyze = curve->add_subcommand("analyze", "Roots, periods, endomorphisms, polarizations, invariants");
  common(analyze, true);
  with_file(analyze, "Curve JSON file");
  analyze->add_option("--pairing", job.pairing, "Loops as 'from,to,sign;...' with branch points 1..6");
  analyze->add_flag("--expect-principal", job.expect_principal, "Exit 1 when no principal polarization exists");
  analyze->callback([&] { run = [&] { return cmd_curve_analyze(job); }; });

  auto* periods = curve->add_subcommand("periods", "Period matrix and Riemann relations");
  common(periods, true);
  with_file(periods, "Curve JSON file");
  periods->add_option("--pairing", job.pairing, "Loops as 'from,to,sign;...' with branch points 1..6");
  periods->callback([&] { run = [&] { return cmd_curve_periods(job); }; });

  auto* igusa = curve->add_subcommand("igusa", "Igusa-Clebsch and absolute invariants");
  common(igusa, true);
  with_file(igusa, "Curve JSON file");
  igusa->callback([&] { run = [&] { return cmd_curve_igusa(job); }; });

  auto* richelot = curve->add_subcommand("richelot", "The 15 Richelot isogenies");
  common(richelot, true);
  with_file(richelot, "Curve JSON file");
  richelot->add_flag("--identities", job.identities, "Match segment periods for the exact images");
  richelot->callback([&] { run = [&] { return cmd_curve_richelot(job); }; });

  std::string a_text, b_text;
  long place = 0, disc = 0;
  auto* algebra = app.add_subcommand("algebra", "Quaternion algebra data")->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "Ramification, D, pi(D) and class numbers of (a, b / Q)");
  common(info, false);
  info->add_option("a", a_text)->required();
  info->add_option("b", b_text)->required();
  info->callback([&] {
    run = [&] { return algebra_info(parse_rational(a_text), parse_rational(b_text)); };
  });
  auto* pi = algebra->add_subcommand("pi", "Number of principal polarization classes for discriminant D");
  common(pi, false);
  pi->add_option("D", disc)->required();
  pi->callback([&] {
    run = [&] {
      long d = disc;
      json out{{"D", d}, {"pi", pi_principal_count(d).str()}, {"h(-4D)", class_number(-4 * d)}};
      out["h(-D)"] = d % 4 == 3 ? json(class_number(-d)) : json();
      return out;
    };
  });
  auto* hilbert = algebra->add_subcommand("hilbert", "Hilbert symbol (a, b)_p; p = 0 is the real place");
  common(hilbert, false);
  hilbert->add_option("a", a_text)->required();
  hilbert->add_option("b", b_text)->required();
  hilbert->add_option("p", place)->required();
  hilbert->callback([&] {
    run = [&] {
      Rational a = parse_rational(a_text), b = parse_rational(b_text);
      if (a == 0 || b == 0) throw InputError("a and b must be nonzero");
      if (place != kInfinity && !is_prime(place)) throw InputError("p must be a prime or 0");
      return json{{"a", to_string(a)}, {"b", to_string(b)}, {"p", place == kInfinity ? json("inf") : json(place)},
                  {"symbol", hilbert_symbol(a, b, place)}};
    };
  });

  auto* order = app.add_subcommand("order", "Orders")->require_subcommand(1);
  auto* check = order->add_subcommand("check", "Discriminant and maximality of a lattice file's order");
  common(check, false);
  with_file(check, "Lattice JSON file");
  check->callback([&] { run = [&] { return cmd_order_check(job); }; });

  auto* polarize = app.add_subcommand("polarize", "Polarizations")->require_subcommand(1);
  auto* search = polarize->add_subcommand("search", "Principal polarizations of a QM lattice");
  common(search, false);
  with_file(search, "Lattice JSON file");
  search->add_flag("--expect-principal", job.expect_principal, "Exit 1 when no principal polarization exists");
  search->callback([&] { run = [&] { return cmd_polarize_search(job); }; });

  auto* endo = app.add_subcommand("endo", "Endomorphisms")->require_subcommand(1);
  auto* detect = endo->add_subcommand("detect", "Homology matrices, order and Rosati involution");
  common(detect, true);
  with_file(detect, "Curve JSON file with 'endomorphisms'");
  detect->add_option("--pairing", job.pairing, "Loops as 'from,to,sign;...' with branch points 1..6");
  detect->callback([&] { run = [&] { return cmd_endo_detect(job); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    emit(job, run());
    return 0;
  } catch (const MathNegative& e) {
    std::cerr << "g2qm: " << e.what() << '\n';
    return kExitNegative;
  } catch (const StageError& e) {
    std::cerr << "g2qm: stage " << e.what() << '\n';
    return e.code;
  } catch (const NumericalFailure& e) {
    std::cerr << "g2qm: numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const DecomposableSurface& e) {
    std::cerr << "g2qm: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const InputError& e) {
    std::cerr << "g2qm: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "g2qm: invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "g2qm: " << e.what() << '\n';
    return kExitInput;
  }
}
