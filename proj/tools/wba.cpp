// wba: command-line front end. Every verb prints a JSON report and exits
// 0 when all checks pass, 1 when a check fails, 2 on input or usage errors.

#include <openssl/evp.h>

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "wba/bimre.hpp"
#include "wba/errors.hpp"
#include "wba/functors.hpp"
#include "wba/gallery.hpp"
#include "wba/hopf.hpp"
#include "wba/io.hpp"
#include "wba/span.hpp"

#ifndef WBA_VERSION
#define WBA_VERSION "0.0.0"
#endif

using namespace wba;

namespace {

struct Input {
  std::string path;
  std::string digest;
  Json json;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Json gallery_json(const std::string& name) {
  const std::string span_prefix = "span:", frob_prefix = "frobenius:";
  if (name.rfind(span_prefix, 0) == 0)
    return span_bimonoid_to_json(span_bimonoid_of_category(builtin_category(name.substr(span_prefix.size()))));
  if (name.rfind(frob_prefix, 0) == 0) return frobenius_to_json(builtin_frobenius(name.substr(frob_prefix.size())));
  try {
    return wba_to_json(builtin_wba(name));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownName) throw;
  }
  return category_to_json(builtin_category(name));
}

std::vector<std::string> gallery_names() {
  std::vector<std::string> out = builtin_wba_names();
  for (const auto& c : builtin_category_samples()) out.push_back(c);
  for (const auto& c : builtin_category_samples()) out.push_back("span:" + c);
  for (const auto& f : builtin_frobenius_names()) out.push_back("frobenius:" + f);
  return out;
}

// A file path, or builtin:<gallery name>.
Input load(const std::string& path) {
  const std::string prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) {
    Json j = gallery_json(path.substr(prefix.size()));
    return {path, sha256_hex(j.dump()), j};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return {path, sha256_hex(ss.str()), Json::parse(ss.str())};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::string linear_combination(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    const bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (neg) c = c.substr(1);
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    std::string term = c == "1" ? labels[i] : (compound ? "(" + c + ")" : c) + "*" + labels[i];
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

Json element_table(const Matrix& m, const std::vector<std::string>& labels) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.cols(); ++i) out[labels[i]] = linear_combination(m.column(i), labels);
  return out;
}

class Run {
 public:
  Run(std::string verb) : verb_(std::move(verb)) {}

  const Input& input(const std::string& path) {
    inputs_.push_back(load(path));
    return inputs_.back();
  }

  // Loads a weak bialgebra and runs the axioms; on failure the run stops there.
  std::optional<WeakBialgebra> load_wba(const std::string& path, const std::string& prefix = "axioms.") {
    WeakBialgebra h = wba_from_json(input(path).json);
    Report ax = check_weak_bialgebra(h);
    report.merge(ax, prefix);
    if (!ax.all_pass()) return std::nullopt;
    return h;
  }

  Report report;
  Json result;
  Json options = Json::object();

  int emit(const std::string& out_path) const {
    Json out;
    out["tool"] = "wba";
    out["version"] = WBA_VERSION;
    out["verb"] = verb_;
    Json ins = Json::array();
    for (const auto& in : inputs_) ins.push_back({{"path", in.path}, {"sha256", in.digest}});
    out["inputs"] = ins;
    if (!options.empty()) out["options"] = options;
    const Json rep = report.to_json();
    out["checks"] = rep["checks"];
    if (rep.contains("info")) out["info"] = rep["info"];
    if (!result.is_null()) out["result"] = result;
    out["verdict"] = report.all_pass() ? "pass" : "fail";
    write(out, out_path);
    return report.all_pass() ? 0 : 1;
  }

  static void write(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream os(out_path);
    if (!os) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
    os << j.dump(2) << "\n";
  }

 private:
  std::string verb_;
  std::deque<Input> inputs_;
};

struct Options {
  std::uint32_t seed = 1;
  std::string field;
  std::string out;
  int n = 4;
  long q = 1;
};

const Field& field_option(const Options& o, const Field& fallback) {
  if (o.field.empty()) return fallback;
  return field_from_json(parse_json_text(o.field));
}

int verb_check(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    run.report.merge(weak_identity_suite(*h), "identities.");
    run.report.info()["dim"] = h->dim();
    run.report.info()["field"] = h->field().describe();
    run.report.info()["cocommutative"] = is_cocommutative(*h);
  }
  return 0;
}

int verb_pi(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const CounitalMaps m = counital_maps(*h);
    run.report.merge(m.report, "identities.");
    run.result = {{"piR", element_table(m.piR, h->basis())},
                  {"piL", element_table(m.piL, h->basis())},
                  {"piRbar", element_table(m.piRbar, h->basis())},
                  {"piLbar", element_table(m.piLbar, h->basis())}};
  }
  return 0;
}

Json grouplike_json(const GroupLikeSet& g, const WeakBialgebra& h) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    out.push_back({{"label", g.labels[i]}, {"element", linear_combination(g.elements[i], h.basis())}});
  return out;
}

int verb_grouplikes(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const GCategory g = g_category(*h);
    run.report.merge(g.report, "g.");
    run.report.merge(grouplike_identities(*h, g), "grouplike.");
    Json admissible = Json::array();
    for (const auto& m : g.cat.morphisms) admissible.push_back(m.name);
    run.result = {{"grouplikes", grouplike_json(g.grouplikes, *h)},
                  {"admissible", admissible},
                  {"completeness", completeness_name(g.grouplikes.completeness)}};
  }
  return 0;
}

int verb_g(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const GCategory g = g_category(*h);
    run.report.merge(g.report, "g.");
    run.report.merge(g.cat.inverse ? validate_groupoid(g.cat) : validate_category(g.cat), "category.");
    Json cat = category_to_json(g.cat);
    Json carrier = Json::object();
    for (std::size_t i = 0; i < g.carrier.size(); ++i)
      carrier[g.cat.morphisms[i].name] = vector_to_json(g.carrier[i], h->field());
    cat["carrier"] = carrier;
    run.result = cat;
  }
  return 0;
}

int verb_antipode(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const AntipodeSolution s = solve_antipode(*h);
    run.report.add("antipode.exists", s.antipode.has_value(),
                   s.antipode ? Json(nullptr) : Json{{"reason", s.reason}, {"certificate", s.certificate}});
    if (s.antipode) {
      run.report.merge(hopf_identity_suite(*h, s.antipode->matrix), "hopf.");
      run.result = {{"antipode", element_table(s.antipode->matrix, h->basis())},
                    {"matrix", matrix_to_json(s.antipode->matrix, h->field())}};
    }
  }
  return 0;
}

int verb_galois(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const GaloisMap g = galois_map(*h);
    run.report.merge(g.report, "galois.");
    run.report.add("galois.bijective", g.bijective,
                   g.bijective ? Json(nullptr)
                               : Json{{"domain_dim", g.beta.cols()}, {"codomain_dim", g.beta.rows()}, {"rank", rank(g.beta)}});
  }
  return 0;
}

int verb_hopf_suite(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    const WeakHopfVerdict v = is_weak_hopf(*h);
    run.report.merge(v.report, "verdict.");
    run.report.add("weak_hopf", v.weak_hopf, v.weak_hopf ? Json(nullptr) : Json("the Galois map is not bijective"));
    if (v.antipode) {
      run.report.merge(hopf_identity_suite(*h, v.antipode->matrix), "hopf.");
      run.result = {{"antipode", element_table(v.antipode->matrix, h->basis())},
                    {"provenance", provenance_name(v.antipode->provenance)}};
    }
  }
  return 0;
}

int verb_from_category(Run& run, const std::vector<std::string>& in, const Options& o) {
  const FiniteCategory c = category_from_json(run.input(in[0]).json);
  Report v = c.inverse ? validate_groupoid(c) : validate_category(c);
  run.report.merge(v, "category.");
  if (!v.all_pass()) return 0;
  WeakBialgebra h = linearize(c, field_option(o, Field::Q()));
  run.report.merge(check_weak_bialgebra(h), "axioms.");
  run.result = wba_to_json(h);
  return 0;
}

int verb_dual(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) {
    WeakBialgebra d = dual_wba(*h);
    run.report.merge(check_weak_bialgebra(d), "dual.axioms.");
    run.result = wba_to_json(d);
  }
  return 0;
}

int verb_counit(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) run.report.merge(counit_analysis(*h), "counit.");
  return 0;
}

int verb_adjoint(Run& run, const std::vector<std::string>& in) {
  const FiniteCategory a = category_from_json(run.input(in[0]).json);
  Report v = validate_category(a);
  run.report.merge(v, "category.");
  if (!v.all_pass()) return 0;
  if (auto h = run.load_wba(in[1])) {
    const AdjunctionCount c = adjunction_check(a, *h);
    run.report.add("adjunction.counts_agree", c.wba_morphisms == c.functors,
                   Json{{"wba_morphisms", c.wba_morphisms}, {"functors", c.functors}});
    run.report.add("adjunction.phi_inverse_lands", c.phi_inverse_lands);
    run.report.add("adjunction.round_trips", c.round_trips);
    run.report.add("adjunction.phi_injective", c.phi_injective);
    run.report.info()["wba_morphisms"] = c.wba_morphisms;
    run.report.info()["functors"] = c.functors;
  }
  return 0;
}

int verb_morphism(Run& run, const std::vector<std::string>& in) {
  auto src = run.load_wba(in[0], "source.axioms.");
  auto tgt = run.load_wba(in[1], "target.axioms.");
  const Json& qj = run.input(in[2]).json;
  if (!src || !tgt) return 0;
  const Matrix q = matrix_from_json(qj.is_object() ? qj.at("matrix") : qj, tgt->field(), tgt->dim(), src->dim());
  run.report.merge(is_wba_morphism(q, *src, *tgt), "");
  return 0;
}

int verb_span_suite(Run& run, const std::vector<std::string>& in, const Options& o) {
  std::vector<Span> samples;
  for (const auto& path : in) {
    const Json& j = run.input(path).json;
    samples.push_back(j.contains("mult") ? span_bimonoid_from_json(j).span : span_from_json(j));
    if (samples.back().name.empty()) samples.back().name = path;
  }
  std::mt19937 rng(o.seed);
  if (!samples.empty()) {
    const auto base = samples.front().base;
    samples.insert(samples.begin(), {span_unit_I(base), span_unit_J(base)});
    run.report.merge(span_duoidal_suite(base, samples, {o.seed, 48}), "span.");
    return 0;
  }
  // Default: |X| = 1, 2, 3 with the units, 2 and iso2 (|X| = 2) and 8 random spans each.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> base;
    for (std::size_t i = 0; i < n; ++i) base.push_back(n == 2 ? (i == 0 ? "S" : "T") : "x" + std::to_string(i));
    std::vector<Span> s{span_unit_I(base), span_unit_J(base)};
    if (n == 2) {
      s.push_back(span_of_category(builtin_category("interval")));
      s.back().name = "2";
      s.push_back(span_of_category(builtin_category("iso2")));
      s.back().name = "iso2";
    }
    for (int k = 0; k < 8; ++k) s.push_back(random_span(rng, base, 4, "r" + std::to_string(k)));
    run.report.merge(span_duoidal_suite(base, s, {o.seed, 48}), "X" + std::to_string(n) + ".");
  }
  for (const auto& name : builtin_category_samples()) {
    const FiniteCategory c = builtin_category(name);
    const SpanBeta b = span_hopf_beta_JJ(span_bimonoid_of_category(c));
    run.report.add("beta_JJ." + name, b.bijective == c.inverse.has_value(),
                   Json{{"bijective", b.bijective}, {"groupoid", c.inverse.has_value()}});
  }
  return 0;
}

int verb_bimre_suite(Run& run, const std::vector<std::string>& in, const Options& o) {
  const Json r_ref = in[0].rfind("builtin:", 0) == 0 || std::filesystem::exists(in[0]) ? run.input(in[0]).json : Json(in[0]);
  const auto base = re_base_from_json(r_ref);
  std::mt19937 rng(o.seed);
  std::vector<ReBimodule> samples{bimre_unit_I(base), bimre_unit_J(base)};
  for (std::size_t k = 1; k < in.size(); ++k) samples.push_back(re_bimodule_from_json(run.input(in[k]).json, base));
  if (in.size() == 1) samples.push_back(random_re_bimodule(base, rng, 3, "M"));
  run.report.merge(bimre_duoidal_suite(base, samples, {o.seed, 2, 4, 32}), "bimre.");
  return 0;
}

int verb_duoidal_roundtrip(Run& run, const std::vector<std::string>& in) {
  if (auto h = run.load_wba(in[0])) run.report.merge(duoidal_roundtrip(*h), "");
  return 0;
}

int verb_torus(Run& run, const Options& o) {
  if (o.n < 1 || o.n > 64) throw Error(ErrorCode::ParseError, "--N must be in 1..64");
  if (std::gcd(o.q, static_cast<long>(o.n)) != 1) throw Error(ErrorCode::ParseError, "--q must be coprime to --N");
  const Field& f = field_option(o, Field::Qzeta(o.n));
  WeakBialgebra b = torus_b(o.n, f);
  Report ax = check_weak_bialgebra(b);
  run.report.merge(ax, "axioms.");
  if (!ax.all_pass()) return 0;
  run.report.merge(weak_identity_suite(b), "identities.");
  run.report.add("eps(1)=N", b.coalg.apply_counit(b.alg.unit) == Scalar(f, o.n));
  run.report.merge(hopf_identity_suite(b, Matrix::identity(b.dim(), f)), "antipode_id.");
  const GCategory g = g_category(b);
  run.report.merge(g.report, "g.");
  const std::size_t n = static_cast<std::size_t>(o.n);
  run.report.add("grouplikes.count", g.grouplikes.elements.size() == n,
                 Json{{"found", g.grouplikes.elements.size()}, {"completeness", completeness_name(g.grouplikes.completeness)}});
  bool all_found = true, orthogonal = true;
  for (int k = 0; k < o.n; ++k) {
    const Vector gk = torus_grouplike(b, o.n, k);
    all_found = all_found && std::find(g.grouplikes.elements.begin(), g.grouplikes.elements.end(), gk) != g.grouplikes.elements.end();
    for (int l = 0; l < o.n; ++l) {
      const Vector prod = b.alg.multiply(gk, torus_grouplike(b, o.n, l));
      orthogonal = orthogonal && prod == (k == l ? gk : Vector(n, Scalar(f)));
    }
  }
  run.report.add("grouplikes.g_omega_found", all_found);
  run.report.add("grouplikes.orthogonal_idempotents", orthogonal);
  bool discrete = g.cat.objects.size() == n && g.cat.size() == n;
  run.report.add("g.discrete_groupoid", discrete, Json{{"objects", g.cat.objects.size()}, {"morphisms", g.cat.size()}});
  run.report.merge(counit_analysis(b), "counit.");
  run.report.info()["q"] = "zeta_" + std::to_string(o.n) + "^" + std::to_string(((o.q % o.n) + o.n) % o.n);
  run.report.info()["field"] = f.describe();
  run.result = wba_to_json(b);
  return 0;
}

int verb_gallery(const std::vector<std::string>& in, const Options& o) {
  if (in.empty() || in[0] == "list") {
    Run::write(Json(gallery_names()), o.out);
    return 0;
  }
  if (in[0] == "all") {
    if (o.out.empty()) throw Error(ErrorCode::ParseError, "gallery all needs --out <directory>");
    std::filesystem::create_directories(o.out);
    for (const auto& name : gallery_names()) {
      std::string file = name;
      std::replace(file.begin(), file.end(), ':', '_');
      Run::write(gallery_json(name), (std::filesystem::path(o.out) / (file + ".json")).string());
    }
    return 0;
  }
  Run::write(gallery_json(in[0]), o.out);
  return 0;
}

bool usage_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::UnknownName || c == ErrorCode::DimensionMismatch ||
         c == ErrorCode::FieldMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional weak bialgebras"};
  app.set_version_flag("--version", WBA_VERSION);
  app.require_subcommand(1);
  Options opt;
  std::vector<std::string> inputs;

  struct Verb {
    const char* name;
    const char* help;
    std::size_t min_inputs, max_inputs;
  };
  const std::vector<Verb> verbs{
      {"check", "weak bialgebra axioms and counital identities", 1, 1},
      {"pi", "the four counital maps", 1, 1},
      {"grouplikes", "group-like elements and the admissible subset", 1, 1},
      {"g", "the category g(H)", 1, 1},
      {"antipode", "solve for an antipode", 1, 1},
      {"galois", "bijectivity of the Galois map", 1, 1},
      {"hopf-suite", "weak Hopf verdict and antipode identities", 1, 1},
      {"from-category", "linearize a finite category", 1, 1},
      {"dual", "the dual weak bialgebra", 1, 1},
      {"counit", "the counit kg(H) -> H", 1, 1},
      {"adjoint", "hom-set bijection wba(kA, H) = cat(A, g(H)); inputs: category, weak bialgebra", 2, 2},
      {"morphism", "morphism check; inputs: source, target, matrix", 3, 3},
      {"span-suite", "span(X) duoidal diagrams; optional span inputs over one X", 0, 64},
      {"bimre-suite", "bim(R^e) duoidal diagrams; inputs: R (builtin Frobenius name or file), bimodules", 1, 64},
      {"duoidal-roundtrip", "weak bialgebra <-> bimonoid in bim(R^e)", 1, 1},
      {"torus", "finite factor B of the quantum torus", 0, 0},
      {"gallery", "builtin objects: list | all | <name>", 0, 1},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    if (v.max_inputs > 0) {
      auto* opt_in = sub->add_option("inputs", inputs, "input files or builtin:<name>");
      opt_in->expected(static_cast<int>(v.min_inputs), static_cast<int>(v.max_inputs));
      if (v.min_inputs > 0) opt_in->required();
    }
    sub->add_option("--seed", opt.seed, "seed for randomized suites");
    sub->add_option("--field", opt.field, R"(field, {"kind":"Q"} or {"kind":"Qzeta","N":n})");
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
    if (std::string(v.name) == "torus") {
      sub->add_option("--N", opt.n, "order N");
      sub->add_option("--q", opt.q, "q = zeta_N^q, q coprime to N");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Run run(verb);
  run.options["seed"] = opt.seed;
  if (verb == "torus") {
    run.options["N"] = opt.n;
    run.options["q"] = opt.q;
  }
  try {
    if (verb == "gallery") return verb_gallery(inputs, opt);
    if (verb == "check") verb_check(run, inputs);
    else if (verb == "pi") verb_pi(run, inputs);
    else if (verb == "grouplikes") verb_grouplikes(run, inputs);
    else if (verb == "g") verb_g(run, inputs);
    else if (verb == "antipode") verb_antipode(run, inputs);
    else if (verb == "galois") verb_galois(run, inputs);
    else if (verb == "hopf-suite") verb_hopf_suite(run, inputs);
    else if (verb == "from-category") verb_from_category(run, inputs, opt);
    else if (verb == "dual") verb_dual(run, inputs);
    else if (verb == "counit") verb_counit(run, inputs);
    else if (verb == "adjoint") verb_adjoint(run, inputs);
    else if (verb == "morphism") verb_morphism(run, inputs);
    else if (verb == "span-suite") verb_span_suite(run, inputs, opt);
    else if (verb == "bimre-suite") verb_bimre_suite(run, inputs, opt);
    else if (verb == "duoidal-roundtrip") verb_duoidal_roundtrip(run, inputs);
    else if (verb == "torus") verb_torus(run, opt);
    return run.emit(opt.out);
  } catch (const Error& e) {
    if (usage_error(e.code())) {
      std::cerr << "wba " << verb << ": " << e.what() << "\n";
      return 2;
    }
    run.report.fail("error", Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}});
    try {
      return run.emit(opt.out);
    } catch (const Error& w) {
      std::cerr << "wba " << verb << ": " << w.what() << "\n";
      return 2;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "wba " << verb << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wba " << verb << ": " << e.what() << "\n";
    return 2;
  }
}
