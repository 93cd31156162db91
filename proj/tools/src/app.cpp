#include "zdci_cli/app.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdci/border.hpp"
#include "zdci/ci.hpp"
#include "zdci/format.hpp"
#include "zdci/groebner.hpp"
#include "zdci/kahler.hpp"
#include "zdci/primdec.hpp"
#include "zdci/quotient.hpp"
#include "zdci_cli/problem.hpp"

namespace zdci::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string ideal;
  std::string maximal;
  std::string order_ideal;
  std::string method = "macaulay";
  std::string target = "self";
  bool local = false;
  bool assume_primary = false;
  bool short_circuit = false;
  bool timing = false;
};

struct Context {
  Options opt;
  ProblemFile problem;
  std::string digest;
  std::ostream& out;
  Json doc;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json poly_list(std::span<const Polynomial> fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(to_string(f));
  return a;
}

std::string subset_text(const std::vector<std::size_t>& s) {
  std::string t = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) t += ",";
    t += std::to_string(s[k] + 1);
  }
  return t + "}";
}

Json subset_json(const std::vector<std::size_t>& s) {
  Json a = Json::array();
  for (std::size_t c : s) a.push_back(c + 1);
  return a;
}

std::string join(std::span<const Polynomial> fs, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) s += sep;
    s += to_string(fs[k]);
  }
  return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

Json hilbert_json(const HilbertData& h) {
  Json j;
  j["mu"] = h.mu;
  j["hilbert_function"] = h.hf;
  j["castelnuovo"] = h.castelnuovo;
  j["regularity_index"] = h.ri;
  j["symmetric"] = h.castelnuovo_symmetric();
  return j;
}

void print_hilbert(std::ostream& out, const HilbertData& h) {
  out << "mu: " << h.mu << "\n";
  out << "affine Hilbert function: (" << join_numbers(h.hf) << ")\n";
  out << "Castelnuovo function: (" << join_numbers(h.castelnuovo) << ")"
      << (h.castelnuovo_symmetric() ? " symmetric" : " not symmetric") << "\n";
}

Json matrix_json(const SyzygyMatrix& w) {
  Json j;
  j["rows"] = poly_list(w.row_labels);
  j["columns"] = poly_list(w.col_labels);
  Json entries = Json::array();
  for (const auto& row : w.entries) entries.push_back(poly_list(row));
  j["entries"] = entries;
  return j;
}

void print_matrix(std::ostream& out, const SyzygyMatrix& w) {
  out << "W (" << w.rows() << " x " << w.cols() << "):\n";
  for (const auto& row : w.entries) out << "  [" << join(row) << "]\n";
}

Json ci_json(const CIReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["failure_reason"] = std::string(to_string(r.failure_reason));
  if (r.matrix) j["matrix"] = matrix_json(*r.matrix);
  Json minors = Json::array();
  for (const auto& m : r.minors) {
    Json e;
    e["subset"] = subset_json(m.column_subset);
    e["minor"] = to_string(m.minor);
    e["residue"] = to_string(m.residue);
    minors.push_back(e);
  }
  j["minors"] = minors;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(subset_json(w));
  j["witnesses"] = witnesses;
  Json full = Json::array();
  for (const auto& g : r.full_generation) full.push_back(g ? Json(*g) : Json(nullptr));
  j["full_generation"] = full;
  if (r.hilbert) j["hilbert"] = hilbert_json(*r.hilbert);
  return j;
}

void print_ci(std::ostream& out, const CIReport& r) {
  if (r.hilbert) print_hilbert(out, *r.hilbert);
  if (r.matrix) print_matrix(out, *r.matrix);
  if (!r.minors.empty()) {
    out << "minor residues:\n";
    for (const auto& m : r.minors) {
      out << "  " << subset_text(m.column_subset) << ": " << to_string(m.residue) << "\n";
    }
  }
  out << "witnesses:";
  if (r.witnesses.empty()) out << " none";
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
    out << " " << subset_text(r.witnesses[k]);
    if (r.full_generation[k]) {
      out << (*r.full_generation[k] ? " (generates the ideal)" : " (local generators only)");
    }
  }
  out << "\n";
  out << "verdict: " << (r.verdict ? "TRUE" : "FALSE");
  if (!r.verdict) out << " (" << to_string(r.failure_reason) << ")";
  out << "\n";
}

Json component_json(const PrimaryComponent& c) {
  Json j;
  j["component"] = poly_list(c.component);
  j["radical"] = poly_list(c.radical);
  j["triangular"] = poly_list(c.triangular);
  j["multiplicity"] = c.multiplicity;
  Json cert;
  cert["witness"] = c.certificate.witness ? Json(to_string(*c.certificate.witness)) : Json(nullptr);
  cert["minimal_polynomial"] = c.certificate.minimal_polynomial.to_string("t");
  j["certificate"] = cert;
  return j;
}

void print_component(std::ostream& out, std::size_t k, const PrimaryComponent& c) {
  out << "component " << k + 1 << " (multiplicity " << c.multiplicity << "):\n";
  out << "  Q = <" << join(c.component) << ">\n";
  out << "  M = <" << join(c.triangular) << ">\n";
}

std::vector<Polynomial> resolve_ideal(Context& ctx, const std::string& name,
                                      const std::string& exclude = "") {
  const ProblemFile& pf = ctx.problem;
  auto use_points = [&](const NamedPoints& p) {
    ctx.doc["ideal"] = p.name;
    return vanishing_ideal_of_points(pf.ring, p.points);
  };
  if (!name.empty()) {
    if (const auto* i = pf.find_ideal(name)) {
      ctx.doc["ideal"] = i->name;
      return i->generators;
    }
    if (const auto* p = pf.find_points(name)) return use_points(*p);
    throw UsageError("no ideal or point set named '" + name + "'");
  }
  for (const auto& i : pf.ideals) {
    if (i.name == exclude) continue;
    ctx.doc["ideal"] = i.name;
    return i.generators;
  }
  if (!pf.point_sets.empty()) return use_points(pf.point_sets.front());
  throw UsageError("the problem file defines no ideal");
}

std::optional<OrderIdeal> resolve_order_ideal(Context& ctx, bool use_default) {
  const ProblemFile& pf = ctx.problem;
  const NamedOrderIdeal* o = nullptr;
  if (!ctx.opt.order_ideal.empty()) {
    o = pf.find_order_ideal(ctx.opt.order_ideal);
    if (!o) throw UsageError("no order ideal named '" + ctx.opt.order_ideal + "'");
  } else if (use_default && !pf.order_ideals.empty()) {
    o = &pf.order_ideals.front();
  }
  if (!o) return std::nullopt;
  ctx.doc["order_ideal"] = o->name;
  return OrderIdeal::from_terms(pf.ring, o->terms);
}

CIOptions ci_options(const Options& opt) {
  CIOptions c;
  c.short_circuit = opt.short_circuit;
  c.threads = opt.threads;
  c.assume_primary = opt.assume_primary;
  c.seed = opt.seed;
  return c;
}

int verdict_code(bool v) { return v ? kHolds : kFails; }

int cmd_gb(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  GroebnerBasis gb = buchberger(gens);
  ctx.doc["basis"] = poly_list(gb.elements);
  if (!ctx.opt.json) {
    for (const auto& g : gb.elements) ctx.out << to_string(g) << "\n";
  }
  return kHolds;
}

int cmd_hilbert(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  RingPtr ring = ctx.problem.ring;
  if (!ring->order().is_degree_compatible()) ring = ring->with_order(TermOrder::degrevlex());
  DegreeFormIdeal dfi = degree_form_ideal(in_ring(gens, ring));
  if (dfi.macaulay_basis.is_unit() || !dfi.macaulay_basis.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  HilbertData h = hilbert_data(dfi.macaulay_basis);
  ctx.doc["hilbert"] = hilbert_json(h);
  ctx.doc["macaulay_basis"] = poly_list(dfi.macaulay_basis.elements);
  ctx.doc["degree_forms"] = poly_list(dfi.degree_forms);
  if (!ctx.opt.json) {
    print_hilbert(ctx.out, h);
    ctx.out << "DF(I) = <" << join(dfi.degree_forms) << ">\n";
  }
  return kHolds;
}

int cmd_primdec(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  auto comps = primary_decomposition(gens, ctx.opt.seed);
  Json a = Json::array();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    a.push_back(component_json(comps[k]));
    if (!ctx.opt.json) print_component(ctx.out, k, comps[k]);
  }
  ctx.doc["components"] = a;
  return kHolds;
}

int cmd_lci(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  LocalCIResult r = check_locally_ci(gens, ci_options(ctx.opt));
  ctx.doc["verdict"] = r.verdict;
  Json a = Json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    Json c = component_json(r.components[k].component);
    c["report"] = ci_json(r.components[k].report);
    a.push_back(c);
    if (!ctx.opt.json) {
      print_component(ctx.out, k, r.components[k].component);
      print_ci(ctx.out, r.components[k].report);
    }
  }
  ctx.doc["components"] = a;
  if (!ctx.opt.json) ctx.out << "locally complete intersection: " << (r.verdict ? "TRUE" : "FALSE") << "\n";
  return verdict_code(r.verdict);
}

CIReport run_ci_at(Context& ctx) {
  if (ctx.opt.maximal.empty()) throw UsageError("--maximal is required");
  const NamedIdeal* m = ctx.problem.find_ideal(ctx.opt.maximal);
  if (!m) throw UsageError("no ideal named '" + ctx.opt.maximal + "'");
  auto q = resolve_ideal(ctx, ctx.opt.ideal, ctx.opt.maximal);
  ctx.doc["maximal"] = m->name;
  return check_ci_at_maximal(q, m->generators, ci_options(ctx.opt));
}

CIReport run_sci(Context& ctx, const CIOptions& options) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  ctx.doc["method"] = ctx.opt.method;
  if (ctx.opt.method == "border") {
    return check_sci_border(gens, options, resolve_order_ideal(ctx, true));
  }
  if (!ctx.opt.order_ideal.empty()) throw UsageError("--order-ideal needs --method border");
  return check_sci_macaulay(gens, options);
}

int emit_ci(Context& ctx, const CIReport& r) {
  Json j = ci_json(r);
  for (auto it = j.begin(); it != j.end(); ++it) ctx.doc[it.key()] = it.value();
  if (!ctx.opt.json) print_ci(ctx.out, r);
  return verdict_code(r.verdict);
}

int cmd_ci_at(Context& ctx) { return emit_ci(ctx, run_ci_at(ctx)); }

int cmd_sci(Context& ctx) { return emit_ci(ctx, run_sci(ctx, ci_options(ctx.opt))); }

int cmd_witnesses(Context& ctx) {
  ctx.opt.short_circuit = false;
  CIReport r = ctx.opt.maximal.empty() ? run_sci(ctx, ci_options(ctx.opt)) : run_ci_at(ctx);
  const auto& labels = r.matrix->col_labels;
  Json a = Json::array();
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
    Json w;
    w["subset"] = subset_json(r.witnesses[k]);
    std::vector<Polynomial> fs;
    for (std::size_t c : r.witnesses[k]) fs.push_back(labels[c]);
    w["generators"] = poly_list(fs);
    w["full_generation"] = r.full_generation[k] ? Json(*r.full_generation[k]) : Json(nullptr);
    a.push_back(w);
    if (!ctx.opt.json) ctx.out << subset_text(r.witnesses[k]) << ": " << join(fs) << "\n";
  }
  ctx.doc["verdict"] = r.verdict;
  ctx.doc["witnesses"] = a;
  if (!ctx.opt.json && r.witnesses.empty()) ctx.out << "no witnesses\n";
  return verdict_code(r.verdict);
}

int cmd_kahler(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  if (ctx.opt.local) {
    if (ctx.opt.target != "self") throw UsageError("--local uses the generators themselves");
    KahlerLocalReport r = kahler_local_ci_check(gens, ci_options(ctx.opt));
    ctx.doc["local"] = true;
    ctx.doc["verdict"] = r.verdict;
    Json a = Json::array();
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto& c = r.components[k];
      Json j = component_json(c.component);
      Json theta = Json::array();
      for (const auto& m : c.theta_generators) theta.push_back(to_string(m.residue));
      j["theta"] = theta;
      j["nonzero"] = c.nonzero;
      a.push_back(j);
      if (!ctx.opt.json) {
        print_component(ctx.out, k, c.component);
        ctx.out << "  theta image " << (c.nonzero ? "nonzero" : "zero") << "\n";
      }
    }
    ctx.doc["components"] = a;
    if (!ctx.opt.json) ctx.out << "verdict: " << (r.verdict ? "TRUE" : "FALSE") << "\n";
    return verdict_code(r.verdict);
  }
  KahlerTarget target = ctx.opt.target == "df" ? KahlerTarget::DegreeForm : KahlerTarget::Self;
  KahlerReport r = kahler_different(gens, target, {false, ctx.opt.threads});
  ctx.doc["target"] = ctx.opt.target;
  ctx.doc["mu"] = r.mu;
  ctx.doc["char_ok"] = r.char_ok;
  ctx.doc["verdict"] = r.verdict_if_applicable ? Json(*r.verdict_if_applicable) : Json(nullptr);
  Json jac = Json::array();
  for (const auto& row : r.jacobian) jac.push_back(poly_list(row));
  ctx.doc["jacobian"] = jac;
  Json theta = Json::array();
  for (const auto& m : r.theta_generators) {
    Json e;
    e["subset"] = subset_json(m.column_subset);
    e["residue"] = to_string(m.residue);
    theta.push_back(e);
  }
  ctx.doc["theta"] = theta;
  if (!ctx.opt.json) {
    ctx.out << "Jacobian:\n";
    for (const auto& row : r.jacobian) ctx.out << "  [" << join(row) << "]\n";
    ctx.out << "theta = <";
    for (std::size_t k = 0; k < r.theta_generators.size(); ++k) {
      ctx.out << (k ? ", " : "") << to_string(r.theta_generators[k].residue);
    }
    ctx.out << (r.theta_generators.empty() ? "0>" : ">") << "\n";
    ctx.out << "mu = " << r.mu << ", characteristic guard " << (r.char_ok ? "ok" : "violated") << "\n";
    ctx.out << "verdict: "
            << (r.verdict_if_applicable ? (*r.verdict_if_applicable ? "TRUE" : "FALSE") : "none")
            << "\n";
  }
  if (!r.verdict_if_applicable) return kUnsupported;
  return verdict_code(*r.verdict_if_applicable);
}

int cmd_family(Context& ctx) {
  auto gens = resolve_ideal(ctx, ctx.opt.ideal);
  FamilyLocus f = family_sci_locus(gens, ci_options(ctx.opt), resolve_order_ideal(ctx, true));
  Json j = ci_json(f.report);
  for (auto it = j.begin(); it != j.end(); ++it) ctx.doc[it.key()] = it.value();
  Json locus;
  locus["generic_only"] = f.generic_only;
  locus["warning"] = "valid for generic parameter values only";
  locus["conditions"] = f.conditions;
  Json minors = Json::array();
  for (const auto& m : f.minors) {
    Json e;
    e["subset"] = subset_json(m.column_subset);
    e["residue"] = to_string(m.residue);
    e["condition"] = m.text;
    minors.push_back(e);
  }
  locus["minors"] = minors;
  ctx.doc["locus"] = locus;
  if (!ctx.opt.json) {
    print_ci(ctx.out, f.report);
    ctx.out << "strict complete intersection locus (generic fibers):\n";
    if (f.conditions.empty()) ctx.out << "  empty\n";
    for (const auto& c : f.conditions) ctx.out << "  " << c << "\n";
  }
  return f.conditions.empty() ? kFails : kHolds;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedField:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::PrimitiveElementNotFound:
    case ErrorKind::CharacteristicObstruction:
      return kUnsupported;
    default:
      return kInputError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("file", opt.file, "Problem file")->required();
  sub->add_flag("--json", opt.json, "Machine-readable output");
  sub->add_option("--seed", opt.seed, "Seed for primitive element search");
  sub->add_option("--threads", opt.threads, "Worker threads for minors")
      ->check(CLI::Range(1u, 256u));
  sub->add_option("--ideal", opt.ideal, "Ideal or point set to use");
  sub->add_flag("--timing", opt.timing, "Report wall-clock time");
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Complete intersection checks for zero-dimensional ideals", "zdci"};
  app.require_subcommand(1);
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert and Castelnuovo functions, DF(I)");
  auto* primdec = app.add_subcommand("primdec", "Primary decomposition");
  auto* check = app.add_subcommand("check", "Decide a complete intersection property");
  check->require_subcommand(1);
  auto* lci = check->add_subcommand("lci", "Locally complete intersection");
  auto* ci_at = check->add_subcommand("ci-at", "Complete intersection at a maximal ideal");
  auto* sci = check->add_subcommand("sci", "Strict complete intersection");
  auto* witnesses = app.add_subcommand("witnesses", "Generator subsets forming regular sequences");
  auto* kahler = app.add_subcommand("kahler", "Kaehler different");
  auto* family = app.add_subcommand("family-sci", "Strict complete intersection locus of a family");
  for (auto* sub : {gb, hilbert, primdec, lci, ci_at, sci, witnesses, kahler, family}) {
    add_common(sub, opt);
  }
  for (auto* sub : {lci, ci_at, sci}) {
    sub->add_flag("--short-circuit", opt.short_circuit, "Stop at the first nonzero minor");
  }
  for (auto* sub : {ci_at, witnesses}) {
    sub->add_option("--maximal", opt.maximal, "Name of the maximal ideal");
    sub->add_flag("--assume-primary", opt.assume_primary, "Skip the primary check");
  }
  ci_at->get_option("--maximal")->required();
  for (auto* sub : {sci, witnesses}) {
    sub->add_option("--method", opt.method, "macaulay or border")
        ->check(CLI::IsMember({"macaulay", "border"}));
  }
  for (auto* sub : {sci, witnesses, family}) {
    sub->add_option("--order-ideal", opt.order_ideal, "Declared order ideal for the border method");
  }
  kahler->add_option("--target", opt.target, "self or df")->check(CLI::IsMember({"self", "df"}));
  kahler->add_flag("--local", opt.local, "Test the image in every local ring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "zdci: " << e.what() << "\n";
    return kInputError;
  }

  std::string command;
  int (*handler)(Context&) = nullptr;
  if (gb->parsed()) command = "gb", handler = cmd_gb;
  else if (hilbert->parsed()) command = "hilbert", handler = cmd_hilbert;
  else if (primdec->parsed()) command = "primdec", handler = cmd_primdec;
  else if (lci->parsed()) command = "check lci", handler = cmd_lci;
  else if (ci_at->parsed()) command = "check ci-at", handler = cmd_ci_at;
  else if (sci->parsed()) command = "check sci", handler = cmd_sci;
  else if (witnesses->parsed()) command = "witnesses", handler = cmd_witnesses;
  else if (kahler->parsed()) command = "kahler", handler = cmd_kahler;
  else command = "family-sci", handler = cmd_family;

  auto start = std::chrono::steady_clock::now();
  try {
    std::string text = read_file(opt.file);
    Context ctx{opt, parse_problem(text), "fnv1a64:" + hex64(fnv1a64(text)), out, Json::object()};
    ctx.doc["schema"] = 1;
    ctx.doc["command"] = command;
    ctx.doc["input_digest"] = ctx.digest;
    Json ring;
    ring["field"] = to_string(ctx.problem.ring->field());
    ring["variables"] = ctx.problem.ring->variables();
    ring["ordering"] = to_string(ctx.problem.ring->order());
    ctx.doc["ring"] = ring;
    int code = handler(ctx);
    if (opt.timing) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      ctx.doc["timing"] = {{"seconds", elapsed.count()}};
      if (!opt.json) out << "time: " << elapsed.count() << " s\n";
    }
    ctx.doc["seed"] = opt.seed;
    if (opt.json) out << ctx.doc.dump(2) << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "zdci: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "zdci: " << opt.file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "zdci: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace zdci::cli
