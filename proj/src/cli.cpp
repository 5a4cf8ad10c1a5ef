#include "jack/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "jack/acceptance.hpp"
#include "jack/cst_spectra.hpp"
#include "jack/errors.hpp"
#include "jack/hilbert_series.hpp"
#include "jack/jack_graph.hpp"
#include "jack/norms_pairing.hpp"
#include "jack/serialize.hpp"
#include "jack/supersymmetrize.hpp"

namespace jack {

namespace {

constexpr int kSafeMaxN = 12;
constexpr int kSafeMaxDegree = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  int n = 0;
  int m = 0;
  int family = 0;
  std::string alpha;
  std::string set;
  std::string lambda;
  int s = 0;
  int k = 0;
  int trunc = -1;
  int degree = 6;
  std::string kappa0 = "3/17";
  bool json = false;
  bool pretty = false;
  bool oracle = false;
  bool unsafe = false;
  unsigned jobs = 1;
  long cache_size = -1;
  std::string normalization = "orbit";
  std::vector<int> only;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::string cleaned;
  for (char c : text) {
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') continue;
    cleaned.push_back(c);
  }
  std::vector<int> out;
  if (cleaned.empty()) return out;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
  }
  return out;
}

void check_limits(const Params& p, int n, int degree) {
  if (p.unsafe) return;
  if (n > kSafeMaxN) raise("LimitExceeded", "N above " + std::to_string(kSafeMaxN) + " needs --unsafe-limits");
  if (degree > kSafeMaxDegree) {
    raise("LimitExceeded", "bosonic degree above " + std::to_string(kSafeMaxDegree) + " needs --unsafe-limits");
  }
}

Family family_of(const Params& p) {
  if (p.family != 0 && p.family != 1) throw UsageError("--family must be 0 or 1");
  return family_from_int(p.family);
}

int resolve_n(const Params& p, std::optional<int> from_list) {
  if (from_list && p.n && *from_list != p.n) throw UsageError("--N disagrees with the composition length");
  const int n = from_list ? *from_list : p.n;
  if (n <= 0) throw UsageError("--N is required");
  return n;
}

Composition composition_arg(const Params& p, const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("--") + what + " is required");
  const std::vector<int> parts = parse_list(text, what);
  for (int v : parts) {
    if (v < 0 || v > kMaxExponent) raise("InvalidExponent", "exponents must lie in 0.." + std::to_string(kMaxExponent));
  }
  const Composition c(parts);
  check_limits(p, c.size(), c.degree());
  return c;
}

HookLabel label_arg(const Params& p, int n) {
  check_limits(p, n, 0);
  return HookLabel::make(family_of(p), p.m, SubsetE::from_positions(n, parse_list(p.set, "set")));
}

void emit_poly(std::ostream& out, const Params& p, const SuperPoly& poly) {
  if (p.json) {
    out << superpoly_to_json(poly).dump(p.pretty ? 2 : -1) << '\n';
    return;
  }
  if (!p.pretty) {
    out << poly.to_string() << '\n';
    return;
  }
  std::optional<Composition> last;
  for (const auto& [key, value] : poly.terms()) {
    if (last && *last == key.alpha) continue;
    last = key.alpha;
    std::string mono;
    for (int i = 1; i <= key.alpha.size(); ++i) {
      const int e = key.alpha.at(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "x" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    out << (mono.empty() ? "1" : mono) << " : " << poly.fermion_part(key.alpha).to_string() << '\n';
  }
}

void emit_json_or_text(std::ostream& out, const Params& p, const Json& doc, const std::string& text) {
  if (p.json) {
    out << doc.dump(p.pretty ? 2 : -1) << '\n';
  } else {
    out << text;
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Json norm_json(const NormReport& r) {
  Json doc{{"value", kfield_to_json(r.value)}, {"text", r.value.to_string()}};
  if (r.constant) doc["constant"] = rational_string(*r.constant);
  if (r.kappa_part) doc["kappa_part"] = r.kappa_part->to_string();
  if (r.oracle) {
    doc["oracle"] = kfield_to_json(*r.oracle);
    doc["oracle_agrees"] = r.oracle_agrees();
  }
  return doc;
}

std::string norm_text(const NormReport& r) {
  std::string s = "norm: " + r.value.to_string() + "\n";
  if (r.constant) s += "constant: " + rational_string(*r.constant) + "\n";
  if (r.kappa_part) s += "kappa part: " + r.kappa_part->to_string() + "\n";
  if (r.oracle) s += std::string("oracle: ") + r.oracle->to_string() + (r.oracle_agrees() ? " (agrees)\n" : " (DISAGREES)\n");
  return s;
}

int finish_norm(std::ostream& out, const Params& p, const NormReport& r) {
  emit_json_or_text(out, p, norm_json(r), norm_text(r));
  if (r.oracle && !r.oracle_agrees()) raise_internal("closed-form norm differs from the pairing oracle");
  return kExitOk;
}

// ---------------------------------------------------------------- commands

int cmd_basis(std::ostream& out, const Params& p) {
  const int n = resolve_n(p, std::nullopt);
  check_limits(p, n, 0);
  const Family f = family_of(p);
  Json doc = Json::array();
  std::ostringstream text;
  for (const SubsetE& e : labels_of(n, p.m, f)) {
    const HookLabel label = HookLabel::make(f, p.m, e);
    const FermionPoly t = build_T(label);
    Json entry = label_to_json(label);
    entry["T"] = fermion_to_json(t);
    doc.push_back(entry);
    const HookTableau y = tableau_of(label);
    text << "E=" << e.to_string() << " inv=" << inv_count(e) << " row=[" << join(y.row) << "] col=[" << join(y.col)
         << "] content=[" << join(content_vector(label)) << "] |T|^2=" << T_norm_sq(label).get_str() << "\n  T = "
         << t.to_string() << '\n';
  }
  emit_json_or_text(out, p, doc, text.str());
  return kExitOk;
}

int cmd_tableau(std::ostream& out, const Params& p) {
  const int n = resolve_n(p, std::nullopt);
  const HookLabel label = label_arg(p, n);
  const HookTableau y = tableau_of(label);
  std::ostringstream text;
  text << "row: " << join(y.row) << "\ncol: " << join(y.col) << "\ncontent: " << join(content_vector(label))
       << "\nT_norm_sq: " << rational_string(T_norm_sq(label)) << '\n';
  emit_json_or_text(out, p, label_to_json(label), text.str());
  return kExitOk;
}

int cmd_build(std::ostream& out, const Params& p) {
  const Composition alpha = composition_arg(p, p.alpha, "alpha");
  const HookLabel label = label_arg(p, resolve_n(p, alpha.size()));
  emit_poly(out, p, build_jack(alpha, label));
  return kExitOk;
}

int cmd_verify(std::ostream& out, const Params& p) {
  const Composition alpha = composition_arg(p, p.alpha, "alpha");
  const HookLabel label = label_arg(p, resolve_n(p, alpha.size()));
  const SuperPoly j = build_jack(alpha, label);
  const bool ok = verify_eigen(j, alpha, label);
  Json zeta = Json::array();
  std::string text = "zeta: [";
  const auto z = spectral_vector(alpha, label);
  for (std::size_t i = 0; i < z.size(); ++i) {
    zeta.push_back(z[i].value().to_string());
    text += (i ? ", " : "") + z[i].value().to_string();
  }
  text += std::string("]\neigen: ") + (ok ? "ok" : "FAILED") + "\n";
  emit_json_or_text(out, p, Json{{"zeta", zeta}, {"eigen", ok}, {"terms", j.size()}}, text);
  if (!ok) raise_internal("U_i eigenvalue check failed");
  return kExitOk;
}

int cmd_norm(std::ostream& out, const Params& p) {
  const Composition alpha = composition_arg(p, p.alpha, "alpha");
  const HookLabel label = label_arg(p, resolve_n(p, alpha.size()));
  return finish_norm(out, p, jack_norm(alpha, label, p.oracle));
}

int cmd_supernorm(std::ostream& out, const Params& p) {
  const Composition lambda = composition_arg(p, p.lambda, "lambda");
  const HookLabel label = label_arg(p, resolve_n(p, lambda.size()));
  return finish_norm(out, p, supersym_norm(lambda, label, p.oracle));
}

int cmd_minnorm(std::ostream& out, const Params& p) {
  const int n = resolve_n(p, std::nullopt);
  check_limits(p, n, 0);
  const MinimalNormCase mc = minimal_norm(n, p.m, p.s, p.k);
  const NormReport general = supersym_norm(mc.lambda, mc.label);
  Json doc = norm_json(mc.report);
  doc["lambda"] = mc.lambda.to_vector();
  doc["E"] = mc.label.set.positions();
  doc["general_formula_agrees"] = general.value == mc.report.value;
  std::string text = "lambda: " + mc.lambda.to_string() + "\nE: " + mc.label.set.to_string() + "\n" +
                     norm_text(mc.report) + "general formula: " +
                     (general.value == mc.report.value ? "agrees" : "DISAGREES") + "\n";
  emit_json_or_text(out, p, doc, text);
  if (!(general.value == mc.report.value)) raise_internal("minimal-norm formula differs from the general norm");
  return kExitOk;
}

int cmd_supersym(std::ostream& out, const Params& p) {
  const Composition lambda = composition_arg(p, p.lambda, "lambda");
  const HookLabel label = label_arg(p, resolve_n(p, lambda.size()));
  Normalization norm = Normalization::Orbit;
  if (p.normalization == "monic") {
    norm = Normalization::Monic;
  } else if (p.normalization != "orbit") {
    throw UsageError("--normalization must be orbit or monic");
  }
  emit_poly(out, p, build_supersymmetric(lambda, label, norm));
  return kExitOk;
}

int cmd_antisym(std::ostream& out, const Params& p) {
  const Composition lambda = composition_arg(p, p.lambda, "lambda");
  const HookLabel label = label_arg(p, resolve_n(p, lambda.size()));
  emit_poly(out, p, build_antisymmetric(lambda, label));
  return kExitOk;
}

int cmd_series(std::ostream& out, const Params& p, bool family_given) {
  const int n = resolve_n(p, std::nullopt);
  check_limits(p, n, 0);
  QSeries series;
  std::string kind;
  if (family_given) {
    const int trunc = p.trunc >= 0 ? p.trunc : kSafeMaxDegree;
    check_limits(p, n, trunc);
    series = hook_series(n, p.m, family_of(p), trunc);
    kind = "column-strict count";
  } else {
    if (p.m < 0 || p.m > n - 1) raise("InvalidDegree", "m must lie in 0..N-1");
    const int top = p.m * (p.m + 1) / 2 + p.m * (n - 1 - p.m);
    series = Q_series(n, p.m, p.trunc >= 0 ? p.trunc : top);
    kind = "generator degrees";
  }
  Json coeffs = Json::array();
  for (const Integer& c : series.coeffs()) coeffs.push_back(c.get_str());
  emit_json_or_text(out, p, Json{{"kind", kind}, {"trunc", series.trunc()}, {"coeffs", coeffs}}, series.to_string() + "\n");
  return kExitOk;
}

int cmd_generators(std::ostream& out, const Params& p) {
  const int n = resolve_n(p, std::nullopt);
  check_limits(p, n, p.degree);
  if (p.degree < 0) throw UsageError("--degree must be nonnegative");
  Rational at;
  try {
    at = parse_rational(p.kappa0);
  } catch (const Error&) {
    throw UsageError("malformed kappa0: '" + p.kappa0 + "'");
  }
  const Family family = family_of(p);
  Json rows = Json::array();
  std::ostringstream text;
  text << "degree products rank tableaux\n";
  bool consistent = true;
  for (int d = 0; d <= p.degree; ++d) {
    const GeneratorEvidence e = generator_evidence(n, p.m, family, d, at);
    consistent = consistent && e.consistent();
    rows.push_back(Json{{"degree", d}, {"products", e.products}, {"rank", e.rank}, {"tableaux", e.expected.get_str()}});
    text << d << ' ' << e.products << ' ' << e.rank << ' ' << e.expected.get_str() << (e.consistent() ? "" : "  mismatch") << '\n';
  }
  text << (consistent ? "independent and spanning at kappa = " : "inconsistent at kappa = ") << rational_string(at)
       << " (numerical evidence only)\n";
  emit_json_or_text(out, p, Json{{"kappa0", rational_string(at)}, {"consistent", consistent}, {"degrees", rows}}, text.str());
  return consistent ? kExitOk : kExitFailure;
}

int cmd_spectrum(std::ostream& out, const Params& p) {
  const Composition lambda = composition_arg(p, p.lambda, "lambda");
  const HookLabel label = label_arg(p, resolve_n(p, lambda.size()));
  const KField content_form = cst_eigenvalue_content(lambda, label);
  const KField mu_form = cst_eigenvalue(labeled_tableau(lambda, label));
  const MuNotation mn = mu_notation(labeled_tableau(lambda, label));
  std::string text = "eigenvalue: " + content_form.to_string() + "\nmu: " + join(mn.mu) + "\nmu_tilde: " + join(mn.mu_tilde) +
                     "\ngamma: " + rational_string(gamma_shift(label.n(), label.m, label.family)) + "\n";
  emit_json_or_text(out, p,
                    Json{{"eigenvalue", kfield_to_json(content_form)},
                         {"text", content_form.to_string()},
                         {"mu", mn.mu},
                         {"mu_tilde", mn.mu_tilde}},
                    text);
  if (!(content_form == mu_form)) raise_internal("eigenvalue forms disagree");
  return kExitOk;
}

int cmd_selftest(std::ostream& out, const Params& p) {
  AcceptanceOptions options;
  options.jobs = p.jobs;
  options.only = p.only;
  int failed = 0;
  Json rows = Json::array();
  run_acceptance(options, [&](const CriterionResult& r) {
    if (!r.passed) ++failed;
    if (p.json) {
      rows.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      out << format_result(r) << std::endl;
    }
  });
  if (p.json) {
    out << rows.dump(p.pretty ? 2 : -1) << '\n';
  } else {
    out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact nonsymmetric and supersymmetric Jack polynomials with hook-tableau labels", "jack"};
  app.require_subcommand(1);
  app.fallthrough();
  Params p;

  app.add_flag("--json", p.json, "emit JSON");
  app.add_flag("--pretty", p.pretty, "human-oriented layout (indented JSON with --json)");
  app.add_flag("--unsafe-limits", p.unsafe, "lift the N and degree caps");
  app.add_option("--cache-size", p.cache_size, "in-memory node cache capacity")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", p.jobs, "worker threads for independent node builds")->check(CLI::Range(1U, 256U));

  auto add_label = [&](CLI::App* sub, bool with_n) {
    if (with_n) sub->add_option("--N", p.n, "number of variables");
    sub->add_option("--m", p.m, "fermionic degree")->required();
    sub->add_option("--family", p.family, "label family 0 or 1")->check(CLI::IsMember({0, 1}));
  };
  auto add_set = [&](CLI::App* sub) { sub->add_option("--set", p.set, "label set E, e.g. 2,3,4")->required(); };

  CLI::App* basis = app.add_subcommand("basis", "list the T_E basis of one family");
  basis->add_option("--N", p.n, "number of variables")->required();
  add_label(basis, false);

  CLI::App* tableau = app.add_subcommand("tableau", "hook tableau, contents and |T_E|^2 of a label");
  tableau->add_option("--N", p.n, "number of variables")->required();
  add_label(tableau, false);
  add_set(tableau);

  std::vector<CLI::App*> node_commands;
  for (const char* name : {"build", "verify", "norm"}) {
    const std::string help = std::string(name) == "build"    ? "construct J_{alpha,E}"
                             : std::string(name) == "verify" ? "check U_i J = zeta_i J"
                                                             : "closed-form norm of J_{alpha,E}";
    CLI::App* sub = app.add_subcommand(name, help);
    add_label(sub, true);
    add_set(sub);
    sub->add_option("--alpha", p.alpha, "composition, e.g. 0,1,1,0")->required();
    node_commands.push_back(sub);
  }
  node_commands.back()->add_flag("--oracle", p.oracle, "also evaluate the pairing directly");

  std::vector<CLI::App*> partition_commands;
  const std::vector<std::pair<const char*, const char*>> partition_specs{
      {"supernorm", "norm of the supersymmetric polynomial of (lambda, E)"},
      {"supersym", "supersymmetric polynomial of (lambda, E)"},
      {"antisym", "antisymmetric polynomial of (lambda, E)"},
      {"spectrum", "Calogero-Sutherland eigenvalue of (lambda, E)"}};
  for (const auto& [name, help] : partition_specs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_label(sub, true);
    add_set(sub);
    sub->add_option("--lambda", p.lambda, "partition, e.g. 2,1,1,0")->required();
    partition_commands.push_back(sub);
  }
  partition_commands[0]->add_flag("--oracle", p.oracle, "also evaluate the pairing directly");
  partition_commands[1]->add_option("--normalization", p.normalization, "orbit or monic");

  CLI::App* minnorm = app.add_subcommand("minnorm", "norm of the minimal supersymmetric polynomial (N,m,s,k)");
  minnorm->add_option("--N", p.n, "number of variables")->required();
  minnorm->add_option("--m", p.m, "fermionic degree")->required();
  minnorm->add_option("--s", p.s, "row level")->required();
  minnorm->add_option("--k", p.k, "number of raised row cells")->required();

  CLI::App* series = app.add_subcommand("series", "generator series Q_{N,m}, or the count series with --family");
  series->add_option("--N", p.n, "number of variables")->required();
  series->add_option("--m", p.m, "fermionic degree")->required();
  CLI::Option* series_family = series->add_option("--family", p.family, "count column-strict tableaux of this family");
  series->add_option("--trunc", p.trunc, "truncation degree")->check(CLI::NonNegativeNumber);

  CLI::App* generators =
      app.add_subcommand("generators", "rank of candidate generators times symmetric polynomials, degree by degree");
  generators->add_option("--N", p.n, "number of variables")->required();
  generators->add_option("--m", p.m, "fermionic degree")->required();
  generators->add_option("--family", p.family, "label family 0 or 1")->check(CLI::IsMember({0, 1}));
  generators->add_option("--degree", p.degree, "highest bosonic degree");
  generators->add_option("--kappa0", p.kappa0, "rational evaluation point");

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--only", p.only, "criterion ids to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (p.cache_size >= 0) set_jack_cache_capacity(static_cast<std::size_t>(p.cache_size));
    if (const char* dir = std::getenv("JACK_CACHE_DIR"); dir && *dir) set_jack_disk_cache(dir);
    if (p.jobs == 0) p.jobs = std::max(1U, std::thread::hardware_concurrency());

    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "basis") return cmd_basis(out, p);
    if (name == "tableau") return cmd_tableau(out, p);
    if (name == "build") return cmd_build(out, p);
    if (name == "verify") return cmd_verify(out, p);
    if (name == "norm") return cmd_norm(out, p);
    if (name == "supernorm") return cmd_supernorm(out, p);
    if (name == "minnorm") return cmd_minnorm(out, p);
    if (name == "supersym") return cmd_supersym(out, p);
    if (name == "antisym") return cmd_antisym(out, p);
    if (name == "series") return cmd_series(out, p, series_family->count() > 0);
    if (name == "spectrum") return cmd_spectrum(out, p);
    if (name == "generators") return cmd_generators(out, p);
    if (name == "selftest") return cmd_selftest(out, p);
    throw UsageError("unknown subcommand " + name);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kExitInternal : kExitPrecondition;
  } catch (const std::exception& e) {
    err << "InternalInvariant: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace jack
