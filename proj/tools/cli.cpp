#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <thread>

#include <CLI11.hpp>

#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/io.hpp"
#include "qsymkit/search.hpp"
#include "qsymkit/verify.hpp"
#include "report.hpp"

namespace qsym::cli {

namespace {

using families::DirectedGraph;
using posets::Poset;
using verify::Check;
using verify::Status;

// Everything a command reads feeds the digest: its arguments and file contents.
class Inputs {
 public:
  void add(std::string_view s) {
    hash_ = io::fnv1a(s, hash_);
    hash_ = io::fnv1a(std::string_view("\0", 1), hash_);
  }
  Json json(const std::string& path) {
    std::string text = io::read_file(path);
    add(text);
    return io::parse_json(text, path);
  }
  std::string digest() const { return io::hex64(hash_); }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

bool is_qsym_basis(const std::string& b) { return b == "M" || b == "F" || b == "Psi"; }

QSymElement as_qsym(const io::AnyElement& e) {
  if (auto q = std::get_if<QSymElement>(&e)) return *q;
  return from_sym(std::get<SymElement>(e));
}

io::AnyElement convert(const io::AnyElement& e, const std::string& basis) {
  if (is_qsym_basis(basis)) return to_basis(as_qsym(e), parse_basis(basis));
  return to_sym(as_qsym(e), parse_sym_basis(basis));
}

io::AnyElement apply_omega(const io::AnyElement& e) {
  QSymElement w = omega(as_qsym(e));
  if (auto s = std::get_if<SymElement>(&e)) return to_sym(w, s->basis());
  return w;
}

// Every parameter p becomes p + 1.
QSymElement shift_parameters(const QSymElement& e) {
  return e.map_coefficients([](const ParamPoly& c) {
    ParamPoly r = c;
    for (Param p : {Param::q, Param::y, Param::z}) r = r.substitute(p, ParamPoly::var(p) + ParamPoly(1));
    return r;
  });
}

Check pass(std::string name, std::string detail) { return Check{std::move(name), Status::Pass, std::move(detail), {}}; }

Check expect(std::string name, bool ok, std::string detail, Json witness = {}) {
  Check c{std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), {}};
  if (!ok) c.witness = witness.is_null() ? Json("mismatch") : std::move(witness);
  return c;
}

Partition parse_partition(const std::string& text) {
  auto parts = io::parse_int_list(text);
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw InvalidArgument("--lambda must be weakly decreasing");
  return Partition(parts);
}

// Shared options; filled by CLI11.
struct Args {
  std::string json_path;
  bool timing = false;
  bool plain = false;
  std::string basis;
  std::string family;
  std::string lambda;
  std::string graph;
  std::string edges;
  int k = 1;
  bool shift = false;
  bool omega = false;
  std::string kp_file;
  std::string element_file;
  std::string text;
  std::string poset;
  std::string weights;
  std::string equiv;
  std::string route = "all";
  bool check = false;
  std::string matroid;
  std::string uniform;
  std::optional<int> n;
  std::string suite;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  int max_terms = 8;
  std::string builtin;
  std::string posets_file;
  std::string coeffs;
};

io::AnyElement load_element(const Args& a, Inputs& in) {
  if (!a.element_file.empty() && !a.text.empty()) throw InvalidArgument("give --element or --text, not both");
  if (!a.element_file.empty()) return io::element_from_json(in.json(a.element_file));
  if (!a.text.empty()) return io::parse_element_text(a.text);
  throw InvalidArgument("an element is required (--element file.json or --text)");
}

DirectedGraph load_graph(const Args& a, Inputs& in) {
  if (a.graph.empty()) throw InvalidArgument("--graph is required");
  return io::graph_from_json(in.json(a.graph));
}

std::vector<int> load_edges(const Args& a, Inputs& in, const DirectedGraph& g) {
  if (a.edges.empty()) throw InvalidArgument("--edges is required");
  return io::edge_subset_from_json(in.json(a.edges), g);
}

// The family member itself, before omega or shifts.
QSymElement family_function(const Args& a, Inputs& in) {
  const std::string& f = a.family;
  if (f == "schur") {
    if (a.lambda.empty()) throw InvalidArgument("--lambda is required");
    return families::schur(parse_partition(a.lambda));
  }
  DirectedGraph g = load_graph(a, in);
  if (f == "chromatic") return families::chromatic_x(g);
  if (f == "kbalanced") return families::k_balanced_x(g, a.k);
  if (f == "llt") return families::llt_unicellular(g);
  if (f == "llt-vstrip") return families::llt_vertical_coloring(g, load_edges(a, in, g));
  if (f == "bpoly") return families::b_polynomial(g);
  throw InvalidArgument("unknown family '" + f + "'");
}

void cmd_expand(const Args& a, Inputs& in, RunReport& r) {
  const int sources = !a.family.empty() + !a.kp_file.empty() + (!a.element_file.empty() || !a.text.empty());
  if (sources != 1) throw InvalidArgument("expand needs exactly one of --family, --kp, --element/--text");
  io::AnyElement e;
  std::string name;
  if (!a.family.empty()) {
    e = family_function(a, in);
    name = a.family;
  } else if (!a.kp_file.empty()) {
    auto p = io::poset_from_json(in.json(a.kp_file));
    if (p.is_natural()) {
      e = pp::kp_psi(p).element;
    } else {
      e = pp::kp_fundamental(p);
      r.notes.push_back("labeling is not natural; K_{P,w} from its F expansion");
    }
    name = "K_P";
  } else {
    e = load_element(a, in);
    name = "element";
  }
  if (a.shift) {
    e = shift_parameters(as_qsym(e));
    name += "(params + 1)";
  }
  if (a.shift || a.omega) {
    e = apply_omega(e);
    name = "omega " + name;
  }
  const std::string basis = a.basis.empty() ? "Psi" : a.basis;
  r.outputs.push_back({name, convert(e, basis), std::nullopt, {}});
}

void cmd_convert(const Args& a, Inputs& in, RunReport& r) {
  if (a.basis.empty()) throw InvalidArgument("--basis is required");
  io::AnyElement e = load_element(a, in);
  if (a.omega) e = apply_omega(e);
  r.outputs.push_back({"element", convert(e, a.basis), std::nullopt, {}});
}

void cmd_kp(const Args& a, Inputs& in, RunReport& r) {
  if (a.poset.empty()) throw InvalidArgument("--poset is required");
  auto p = io::poset_from_json(in.json(a.poset));
  const pp::Route route = pp::parse_route(a.route);
  const std::string basis = a.basis.empty() ? "Psi" : a.basis;
  if (!is_qsym_basis(basis)) throw InvalidArgument("kp --basis must be Psi, F or M");
  pp::PsiReport rep;
  std::string name = "K_P";
  if (!a.weights.empty()) {
    rep = pp::kpd_psi(p, io::parse_int_list(a.weights), route);
    name = "K_P^d";
  } else if (!a.equiv.empty()) {
    rep = pp::kpe_psi(p, io::equivalence_from_json(in.json(a.equiv), p.size()), route);
    name = "K_{P,E}";
  } else if (!p.is_natural()) {
    QSymElement f = pp::kp_fundamental(p);
    r.notes.push_back("labeling is not natural; only the F expansion applies");
    r.outputs.push_back({"K_{P,w}", to_basis(f, parse_basis(basis)), std::nullopt, {}});
    return;
  } else {
    rep = pp::kp_psi(p, route);
  }
  Json extra;
  if (rep.closure) extra["closure"] = io::to_json(*rep.closure);
  if (rep.closed_poset) extra["closed_poset"] = io::to_json(*rep.closed_poset);
  r.outputs.push_back({name, to_basis(rep.element, parse_basis(basis)), rep.certificates, extra});
  std::string routes;
  for (const auto& s : rep.routes) routes += (routes.empty() ? "" : ", ") + s;
  r.checks.push_back(pass("routes", "agree: " + routes));
  Check pos = pass("positivity", "certificates in N");
  if (!rep.positive) {
    pos.status = Status::Report;
    pos.detail = "some certificate is negative";
  }
  r.checks.push_back(pos);
  r.notes.insert(r.notes.end(), rep.notes.begin(), rep.notes.end());
}

void add_family_checks(const families::FamilyReport& rep, RunReport& r) {
  r.checks.push_back(expect("routes", rep.routes_agree, "coloring route = orientation route"));
  r.checks.push_back(expect("positivity", rep.positive, "certificates in N[params]"));
}

void cmd_family(const Args& a, Inputs& in, RunReport& r) {
  const std::string& f = a.family;
  auto emit = [&](const std::string& name, const io::AnyElement& e, const std::string& default_basis,
                  std::optional<pp::Certificates> certs = std::nullopt, Json extra = {}) {
    r.outputs.push_back({name, convert(e, a.basis.empty() ? default_basis : a.basis),
                         a.check ? std::move(certs) : std::nullopt, std::move(extra)});
  };
  auto graph_family = [&](const std::string& name, const families::FamilyReport& rep) {
    emit(name, rep.omega_psi, "Psi", rep.certificates);
    if (a.check) add_family_checks(rep, r);
  };
  if (f == "chromatic") return graph_family("omega X_G", families::chromatic_psi(load_graph(a, in)));
  if (f == "kbalanced") return graph_family("omega X_G^k", families::k_balanced_psi(load_graph(a, in), a.k));
  if (f == "llt") return graph_family("omega G_G(q+1)", families::llt_psi(load_graph(a, in)));
  if (f == "llt-vstrip") {
    DirectedGraph g = load_graph(a, in);
    return graph_family("omega G_{G,S}(q+1)", families::llt_vertical(g, load_edges(a, in, g)));
  }
  if (f == "bpoly") {
    DirectedGraph g = load_graph(a, in);
    graph_family("omega B_G(y+1,z+1)", families::b_psi(g));
    if (a.check) {
      auto s = families::b_specialisations(g);
      r.checks.push_back(expect("chromatic_specialisation", s.chromatic, "X_G = [z^|E|] B(qz, z)"));
      r.checks.push_back(expect("llt_specialisation", s.llt, "G_G = B(q, 1)"));
      r.checks.push_back(expect("tutte_specialisation", s.tutte, "Tutte relation"));
    }
    return;
  }
  if (f == "tutte") {
    DirectedGraph g = load_graph(a, in);
    emit("Tutte symmetric function", families::tutte_multivariate(g), "p");
    if (a.check) r.checks.push_back(expect("tutte_specialisation", families::b_specialisations(g).tutte, "B(y, y) relation"));
    return;
  }
  if (f == "matroid") {
    std::optional<families::Matroid> m;
    if (!a.matroid.empty() && !a.uniform.empty()) throw InvalidArgument("give --matroid or --uniform, not both");
    if (!a.matroid.empty()) m = io::matroid_from_json(in.json(a.matroid));
    if (!a.uniform.empty()) {
      auto nr = io::parse_int_list(a.uniform);
      if (nr.size() != 2) throw InvalidArgument("--uniform takes n,r");
      m = families::Matroid::uniform(nr[0], nr[1]);
    }
    if (!m) throw InvalidArgument("--matroid or --uniform is required");
    auto rep = families::matroid_psi(*m);
    emit("omega F_M", rep.omega_psi, "Psi", rep.certificates);
    if (a.check) {
      add_family_checks(rep, r);
      r.checks.push_back(expect("generic_colorings", rep.function == families::matroid_f(*m),
                                "brute force over generic colorings"));
      if (!a.uniform.empty()) {
        auto nr = io::parse_int_list(a.uniform);
        r.checks.push_back(expect("uniform_closed_form",
                                  rep.omega_psi.identical(families::uniform_matroid_closed_form(nr[0], nr[1])),
                                  "closed form for U_{n,r}"));
      }
    }
    return;
  }
  if (f == "eulerian" || f == "cycle-eulerian") {
    if (!a.n) throw InvalidArgument("--n is required");
    const int n = *a.n;
    if (n < 1 || n > 8) throw InvalidArgument("--n must lie in 1..8");
    if (f == "eulerian") {
      SymElement closed = families::eulerian_closed_form(n);
      emit("sum_j q^j Q_{n,j}", closed, "p", families::path_closed_form(n));
      if (a.check) {
        QSymElement dex = families::q_weighted_sum(families::eulerian_q(n), n);
        r.checks.push_back(expect("dex_route", to_sym(dex, SymBasis::p) == closed, "DEX enumeration"));
        r.checks.push_back(expect("path_posets",
                                  pp::element_from_certificates(n, families::path_certificates(n)) == dex,
                                  "sum over zigzag paths"));
      }
    } else {
      SymElement closed = families::cycle_eulerian_closed_form(n, false);
      emit("sum_j q^j Q_{(n),j}", closed, "p");
      if (a.check) {
        SymElement dex = to_sym(families::q_weighted_sum(families::cycle_eulerian_q(n), n), SymBasis::p);
        r.checks.push_back(expect("dex_route", dex == closed, "DEX over long cycles"));
        r.checks.push_back(expect("inversion", families::cycle_eulerian_by_inversion(n) == closed, "Moebius inversion"));
      }
    }
    return;
  }
  if (f == "schur") {
    if (a.lambda.empty()) throw InvalidArgument("--lambda is required");
    Partition l = parse_partition(a.lambda);
    QSymElement s = families::schur(l);
    Json chars = Json::object();
    SymElement p = to_sym(s, SymBasis::p);
    bool agree = true;
    for (const Partition& mu : partitions(l.size())) {
      Integer c = families::roichman_coeff(l, mu);
      chars[mu.to_string()] = c.get_str();
      agree = agree && p.coeff(mu).constant() * Rational(z_of(mu.parts())) == Rational(c);
    }
    emit("s_lambda", s, "p", std::nullopt, Json{{"roichman", chars}});
    if (a.check) {
      r.checks.push_back(expect("syt_route", s == sym_basis_element(SymBasis::s, l), "SYT descents = Jacobi-Trudi"));
      r.checks.push_back(expect("roichman", agree, "Roichman coefficients = z_mu [p_mu]"));
    }
    return;
  }
  throw InvalidArgument("unknown family '" + f + "'");
}

void cmd_verify(const Args& a, RunReport& r) {
  verify::Options opt;
  opt.n = a.n;
  opt.threads = thread_cap();
  r.checks = verify::run_suite(a.suite, opt);
}

std::vector<Poset> builtin_posets(const std::string& name, int n) {
  if (name == "counterexamples") {
    auto ps = families::counterexample_posets();
    return {ps.begin(), ps.end()};
  }
  if (name == "counterexamples-corrected") {
    auto ps = families::counterexample_posets();
    return {ps[0], ps[3].dual(), ps[2], ps[3]};
  }
  if (name == "chains") return {posets::chain(n)};
  throw InvalidArgument("unknown builtin '" + name + "' (counterexamples, counterexamples-corrected, chains)");
}

Json negative_terms(const std::optional<SymElement>& e) {
  Json out = Json::array();
  if (!e) return out;
  for (const auto& [lambda, c] : e->terms())
    for (const auto& [x, v] : c.terms())
      if (v < 0) out.push_back(Json{{"basis", sym_basis_name(e->basis())}, {"index", lambda.parts()}, {"coeff", c.to_string()}});
  return out;
}

void add_combination(const search::CombinationReport& c, const std::string& tag, RunReport& r) {
  Json posets = Json::array();
  for (const auto& p : c.posets) posets.push_back(io::to_json(posets::naturally_labeled(p)));
  Json coeffs = Json::array();
  for (const auto& k : c.coeffs) coeffs.push_back(k.get_str());
  Json combo{{"posets", posets}, {"coeffs", coeffs}};
  Check chk{tag, Status::Pass, "", combo};
  if (!c.symmetric) {
    r.outputs.push_back({tag, c.element, std::nullopt, combo});
    chk.status = Status::Report;
    chk.detail = "not symmetric";
    if (auto w = symmetry_witness(c.element))
      chk.witness["symmetry"] = {{"first", w->first.parts()}, {"second", w->second.parts()},
                                 {"first_coeff", w->first_coeff.to_string()}, {"second_coeff", w->second_coeff.to_string()}};
    r.checks.push_back(std::move(chk));
    return;
  }
  r.outputs.push_back({tag + " s", *c.s, std::nullopt, combo});
  r.outputs.push_back({tag + " h", *c.h, std::nullopt, {}});
  r.outputs.push_back({tag + " p", *c.p, std::nullopt, {}});
  auto yn = [](bool b, const char* what) { return std::string(b ? "" : "not ") + what; };
  chk.detail = yn(c.schur_positive, "Schur-positive") + ", " + yn(c.h_positive, "h-positive") + ", " +
               yn(c.p_positive, "p-positive");
  if (!c.schur_positive || !c.h_positive) {
    chk.status = Status::Report;
    Json neg = negative_terms(c.s);
    for (auto& t : negative_terms(c.h)) neg.push_back(t);
    chk.witness["negative"] = neg;
  } else {
    chk.witness = {};
  }
  r.checks.push_back(std::move(chk));
}

void cmd_search(const Args& a, Inputs& in, RunReport& r) {
  const bool fixed = !a.builtin.empty() || !a.posets_file.empty();
  if (!fixed) {
    if (!a.seed) throw InvalidArgument("--seed is required for a random search");
    if (!a.coeffs.empty()) throw InvalidArgument("--coeffs needs --builtin or --posets");
    const int n = a.n.value_or(4);
    auto res = search::search_positivity(n, a.trials, *a.seed, a.max_terms);
    for (std::size_t i = 0; i < res.symmetric.size(); ++i)
      add_combination(res.symmetric[i], "combination " + std::to_string(i + 1), r);
    r.notes.push_back(std::to_string(res.trials) + " trials, " + std::to_string(res.symmetric.size()) +
                      " symmetric combinations, " + std::to_string(res.flagged.size()) + " flagged");
    return;
  }
  if (!a.builtin.empty() && !a.posets_file.empty()) throw InvalidArgument("give --builtin or --posets, not both");
  std::vector<Poset> ps;
  if (!a.builtin.empty()) {
    ps = builtin_posets(a.builtin, a.n.value_or(4));
  } else {
    Json j = in.json(a.posets_file);
    if (j.is_object() && j.contains("posets")) j = j["posets"];
    if (!j.is_array()) throw InvalidArgument("--posets expects an array of posets");
    for (const auto& pj : j) ps.push_back(io::poset_from_json(pj).poset());
  }
  std::vector<Integer> coeffs(ps.size(), 1);
  if (!a.coeffs.empty()) {
    coeffs.clear();
    for (int c : io::parse_int_list(a.coeffs)) coeffs.emplace_back(c);
  }
  add_combination(search::analyse(ps, coeffs), "combination", r);
}

// Arguments that do not change the result stay out of the digest.
void digest_args(const std::vector<std::string>& args, Inputs& in) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--timing") continue;
    if (args[i] == "--json") {
      ++i;
      continue;
    }
    if (args[i].rfind("--json=", 0) == 0) continue;
    in.add(args[i]);
  }
}

}  // namespace

int thread_cap() {
  int hw = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("QSYMKIT_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) hw = std::min(hw, cap);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasisymmetric power sums, P-partitions and their Psi-positive families"};
  app.name("qsymkit");
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--json", a.json_path, "write the run report as JSON");
  app.add_flag("--timing", a.timing, "include wall time in the report");
  app.add_flag("--plain", a.plain, "plain Psi/p coefficients instead of coefficients of Psi/z");

  const std::vector<std::string> graph_families{"schur", "chromatic", "kbalanced", "llt", "llt-vstrip", "bpoly"};
  const std::vector<std::string> bases{"M", "F", "Psi", "m", "p", "h", "e", "s"};

  auto* expand = app.add_subcommand("expand", "expand an element or a family member in a basis");
  expand->add_option("--family", a.family)->check(CLI::IsMember(graph_families));
  expand->add_option("--lambda", a.lambda, "partition, e.g. 3,3");
  expand->add_option("--graph", a.graph, "graph JSON");
  expand->add_option("--edges", a.edges, "edge subset JSON for llt-vstrip");
  expand->add_option("--k", a.k, "k for kbalanced");
  expand->add_flag("--shift", a.shift, "report omega F(x; q+1) (implies --omega)");
  expand->add_flag("--omega", a.omega, "apply omega");
  expand->add_option("--kp", a.kp_file, "poset JSON; expands K_{P,w}");
  expand->add_option("--element", a.element_file, "element JSON");
  expand->add_option("--text", a.text, "element in text form");
  expand->add_option("--basis", a.basis)->check(CLI::IsMember(bases));

  auto* conv = app.add_subcommand("convert", "convert an element to another basis");
  conv->add_option("--element", a.element_file, "element JSON");
  conv->add_option("--text", a.text, "element in text form");
  conv->add_option("--basis", a.basis)->check(CLI::IsMember(bases));
  conv->add_flag("--omega", a.omega, "apply omega first");

  auto* kp = app.add_subcommand("kp", "reverse P-partition generating functions");
  kp->add_option("--poset", a.poset, "poset JSON")->required();
  auto* w = kp->add_option("--weights", a.weights, "weights, e.g. 1,0,2");
  kp->add_option("--equiv", a.equiv, "equivalence JSON")->excludes(w);
  kp->add_option("--basis", a.basis)->check(CLI::IsMember(std::vector<std::string>{"M", "F", "Psi"}));
  kp->add_option("--route", a.route)->check(CLI::IsMember(std::vector<std::string>{"all", "F", "Lstar", "Ostar"}));

  auto* fam = app.add_subcommand("family", "Psi expansions of the applied families");
  fam->add_option("name", a.family)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"chromatic", "llt", "llt-vstrip", "kbalanced", "bpoly", "tutte",
                                                     "matroid", "eulerian", "cycle-eulerian", "schur"}));
  fam->add_option("--graph", a.graph, "graph JSON");
  fam->add_option("--edges", a.edges, "edge subset JSON for llt-vstrip");
  fam->add_option("--k", a.k, "k for kbalanced");
  fam->add_option("--lambda", a.lambda, "partition for schur");
  fam->add_option("--n", a.n, "degree for eulerian and cycle-eulerian");
  fam->add_option("--matroid", a.matroid, "matroid JSON");
  fam->add_option("--uniform", a.uniform, "uniform matroid n,r");
  fam->add_option("--basis", a.basis)->check(CLI::IsMember(bases));
  fam->add_flag("--check", a.check, "cross-check the routes and print certificates");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", a.suite)->required();
  ver->add_option("--n", a.n, "size bound");

  auto* sp = app.add_subcommand("search-positivity", "look for non-Schur- or non-h-positive combinations of K_P");
  sp->add_option("--n", a.n, "poset size (default 4)");
  sp->add_option("--trials", a.trials, "random trials");
  sp->add_option("--seed", a.seed, "64-bit seed");
  sp->add_option("--max-terms", a.max_terms, "posets per combination");
  sp->add_option("--builtin", a.builtin, "counterexamples | counterexamples-corrected | chains");
  sp->add_option("--posets", a.posets_file, "JSON array of posets");
  sp->add_option("--coeffs", a.coeffs, "integer coefficients, e.g. 2,3,2,0");

  std::vector<std::string> argv_store{"qsymkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  RunReport report;
  report.view = a.plain ? View::Plain : View::ZNormalized;
  Inputs in;
  digest_args(args, in);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (expand->parsed()) {
      report.command = "expand";
      cmd_expand(a, in, report);
    } else if (conv->parsed()) {
      report.command = "convert";
      cmd_convert(a, in, report);
    } else if (kp->parsed()) {
      report.command = "kp";
      cmd_kp(a, in, report);
    } else if (fam->parsed()) {
      report.command = "family";
      cmd_family(a, in, report);
    } else if (ver->parsed()) {
      report.command = "verify";
      cmd_verify(a, report);
    } else {
      report.command = "search-positivity";
      cmd_search(a, in, report);
    }
  } catch (const RouteMismatch& e) {
    err << "route mismatch: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    // InvalidArgument, ParseError, malformed JSON, unreadable files
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (a.timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.inputs_digest = in.digest();

  print(report, out);
  if (!a.json_path.empty()) {
    std::ofstream f(a.json_path);
    if (!f) {
      err << "error: cannot write " << a.json_path << '\n';
      return kInputError;
    }
    f << to_json(report).dump(2) << '\n';
  }
  return failed(report) ? kCheckFailed : kOk;
}

}  // namespace qsym::cli
