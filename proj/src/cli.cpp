#include "novdef/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "novdef/dim2.hpp"
#include "novdef/io.hpp"
#include "novdef/scalar_io.hpp"

namespace novdef::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string params;
};

/// Text lines and a JSON object built side by side.
struct Report {
  std::vector<std::string> lines;
  json data = json::object();
  int code = kPass;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

template <Ring R>
json report_json(const IdentityReport<R>& rep, const std::vector<std::string>& labels) {
  json j{{"identity", rep.identity}, {"passed", rep.passed}, {"tuples_checked", rep.tuples_checked}};
  if (!rep.passed) {
    json t = json::array();
    for (auto i : rep.tuple) t.push_back(labels.at(i));
    json r = json::array();
    for (const auto& x : rep.residual) r.push_back(to_string(x));
    j["tuple"] = t;
    j["residual"] = r;
  }
  return j;
}

std::string product_symbol(const std::string& op, const std::string& x, const std::string& y) {
  if (op == "dot") return x + "·" + y;
  if (op == "circ") return x + "∘" + y;
  if (op == "bracket") return "[" + x + "," + y + "]";
  return op + "(" + x + "," + y + ")";
}

template <Ring R>
std::vector<std::string> product_lines(const std::string& name, const BilinearOp<R>& op,
                                       const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (name == "bracket" && j <= i) continue;
      auto v = op.product(i, j);
      if (is_zero_vec(v)) continue;
      out.push_back(product_symbol(name, labels[i], labels[j]) + " = " + format_vector(v, labels));
    }
  if (out.empty()) out.push_back(name + " = 0");
  return out;
}

json matrix_json(const LinearMap<Complex>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const LinearMap<Complex>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.dim(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

std::map<std::string, Complex> assignments(const Options& o) {
  return o.params.empty() ? std::map<std::string, Complex>{} : parse_assignments(o.params);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> remaining(const std::vector<std::string>& declared, const std::map<std::string, Complex>& values) {
  std::vector<std::string> out;
  for (const auto& p : declared)
    if (!values.count(p)) out.push_back(p);
  return out;
}

AlgebraDocument load_algebra(const std::string& path, const Options& o) {
  auto doc = parse_algebra_file(read_text_file(path));
  auto values = assignments(o);
  return {substitute_params(doc.algebra, values), remaining(doc.params, values)};
}

DeformationDocument load_deformation(const std::string& path, const Options& o) {
  auto doc = parse_deformation_file(read_text_file(path));
  auto values = assignments(o);
  return {substitute_params(doc.deformation, values), remaining(doc.params, values)};
}

template <class T>
void require_numeric(const T& x, const std::string& what) {
  auto free = free_symbols(x);
  if (!free.empty())
    throw MissingSymbol(what + " has unassigned parameters " + join(free, ", ") + " (use --params)");
}

Algebra<Complex> numeric(const Algebra<Poly>& a, const std::string& what) {
  require_numeric(a, what);
  return algebra_cast<Complex>(a);
}

Deformation numeric(const TruncatedDeformation<Poly>& d, const std::string& what) {
  require_numeric(d, what);
  return deformation_cast<Complex>(d);
}

void append_text(Report& r, const std::string& block) {
  std::istringstream in(block);
  for (std::string l; std::getline(in, l);) r.line(l);
}

// ---------------------------------------------------------------------------

void cmd_check(Report& r, const Options& o, const std::string& file, const std::string& identity) {
  std::optional<Identity> only;
  if (!identity.empty()) {
    only = parse_identity(identity);
    if (!only) throw CLI::ValidationError("--identity", "unknown identity '" + identity + "'");
  }
  json reps = json::array();
  if (is_deformation_document(read_text_file(file))) {
    auto doc = load_deformation(file, o);
    const auto& d = doc.deformation;
    const auto& labels = d.base().labels();
    std::vector<IdentityReport<Series<Poly>>> out;
    if (only) {
      if (required_ops(*only) != std::vector<std::string>{"circ"})
        throw CLI::ValidationError("--identity", "deformations support NOV_LEFTSYM, NOV_RIGHTCOMM and NCTPA");
      out.push_back(check_identity(d.series_op(), *only));
    } else {
      out.push_back(check_identity(d.series_op(), Identity::NovLeftSym));
      out.push_back(check_identity(d.series_op(), Identity::NovRightComm));
    }
    for (const auto& rep : out) {
      r.line(rep.to_string(labels));
      reps.push_back(report_json(rep, labels));
      if (!rep.passed) r.code = kFail;
    }
  } else {
    auto doc = load_algebra(file, o);
    const auto& alg = doc.algebra;
    std::vector<Identity> ids;
    if (only) {
      ids.push_back(*only);
    } else {
      for (auto id : all_identities()) {
        bool ok = true;
        for (const auto& op : required_ops(id)) ok = ok && alg.has_op(op);
        if (ok) ids.push_back(id);
      }
      if (ids.empty()) throw CLI::ValidationError("check", "no identity applies to the operations in " + file);
    }
    for (auto id : ids) {
      auto rep = check_identity(alg, id);
      r.line(rep.to_string(alg.labels()));
      reps.push_back(report_json(rep, alg.labels()));
      if (!rep.passed) r.code = kFail;
    }
  }
  r.data["reports"] = reps;
  r.data["passed"] = r.code == kPass;
}

void cmd_limit(Report& r, const Options& o, const std::string& file) {
  auto doc = load_deformation(file, o);
  auto lim = classical_limit(doc.deformation);
  const auto& labels = lim.algebra.labels();
  append_text(r, write_algebra_file(lim.algebra, doc.params));
  r.line(lim.tpa.to_string(labels));
  r.line(lim.lie.to_string(labels));
  r.data["algebra"] = json::parse(write_algebra_file(lim.algebra, doc.params));
  r.data["reports"] = json::array({report_json(lim.tpa, labels), report_json(lim.lie, labels)});
  r.data["transposed_poisson"] = lim.is_transposed_poisson();
  if (!lim.is_transposed_poisson()) r.code = kFail;
}

void emit_deformation(Report& r, const TruncatedDeformation<Poly>& d, const std::vector<std::string>& params) {
  std::string text = write_deformation_file(d, params);
  append_text(r, text);
  r.data["deformation"] = json::parse(text);
}

void cmd_deform_np(Report& r, const Options& o, const std::string& file, std::size_t order) {
  auto doc = load_algebra(file, o);
  emit_deformation(r, deform_from_np(doc.algebra, order), doc.params);
}

void cmd_deform_commutator(Report& r, const Options& o, const std::string& file, std::size_t order) {
  auto doc = load_algebra(file, o);
  auto d = commutator_deform(doc.algebra.op("circ"), order);
  Algebra<Poly> base(d.dim(), doc.algebra.labels(), doc.algebra.field());
  base.set_op("dot", d.mu(0));
  emit_deformation(r, TruncatedDeformation<Poly>(base, d.mu()), doc.params);
}

void emit_verdict(Report& r, const EquivVerdict& v, const std::string& method) {
  r.line("verdict: " + verdict_name(v.verdict));
  r.line("method: " + method);
  r.data["verdict"] = verdict_name(v.verdict);
  r.data["method"] = method;
  if (!v.reason.empty()) {
    r.line("reason: " + v.reason);
    r.data["reason"] = v.reason;
  }
  if (v.verdict == Verdict::NotEquivalent && v.failure_order > 0) {
    r.line("failure order: " + std::to_string(v.failure_order));
    r.data["failure_order"] = v.failure_order;
  }
  if (v.epsilon) {
    r.line("epsilon_h = " + v.epsilon->to_string());
    r.data["epsilon"] = v.epsilon->to_string();
  }
  if (v.mu) {
    r.line("mu_h = " + v.mu->to_string());
    r.data["mu"] = v.mu->to_string();
  }
  if (v.witness) {
    r.line("witness:");
    json w = json::array();
    for (std::size_t k = 0; k < v.witness->order(); ++k) {
      r.line("  f[" + std::to_string(k) + "] = " + matrix_text(v.witness->f(k)));
      w.push_back(matrix_json(v.witness->f(k)));
    }
    r.data["witness"] = w;
  }
  r.code = v.verdict == Verdict::Equivalent ? kPass : (v.verdict == Verdict::NotEquivalent ? kFail : kUnknown);
}

void cmd_equiv(Report& r, const Options& o, const std::string& f1, const std::string& f2, const std::string& method) {
  auto d1 = numeric(load_deformation(f1, o).deformation, f1);
  auto d2 = numeric(load_deformation(f2, o).deformation, f2);
  if (d1.dim() != d2.dim()) throw DimMismatch("deformations differ in dimension");
  if (d1.order() != d2.order()) throw OrderMismatch("deformations differ in truncation order");
  auto p1 = family2d_parameters(d1), p2 = family2d_parameters(d2);
  bool family = p1 && p2;
  if (method == "family" && !family) throw PreconditionViolated("--method family needs two A_h^{a,b} deformations");
  if (method == "family" || (method == "auto" && family)) {
    r.line("a_h = " + p1->first.to_string() + ", b_h = " + p1->second.to_string());
    r.line("a'_h = " + p2->first.to_string() + ", b'_h = " + p2->second.to_string());
    emit_verdict(r, family2d_equiv(p1->first, p1->second, p2->first, p2->second), "family2d");
  } else {
    emit_verdict(r, solve_equivalence(d1, d2), "solver");
  }
}

CSeries series_arg(const std::string& text, std::optional<std::size_t> order) {
  auto s = parse_series<Complex>(text, order);
  if (s.is_exact_constant()) {
    if (!order) throw CLI::ValidationError("--order", "constant series need --order or an @order=N suffix");
    s = s.with_order(*order);
  }
  return s;
}

std::pair<CSeries, CSeries> family_args(const std::string& a, const std::string& b, std::optional<std::size_t> order) {
  CSeries as = series_arg(a, order), bs = series_arg(b, order);
  if (as.order() != bs.order()) {
    if (as.is_exact_constant() || a.find('@') == std::string::npos) as = series_arg(a, bs.order());
    if (b.find('@') == std::string::npos) bs = series_arg(b, as.order());
  }
  return {as, bs};
}

void cmd_family2d(Report& r, const std::string& a, const std::string& b, std::optional<std::size_t> order) {
  auto [as, bs] = family_args(a, b, order);
  auto d = family2d_construct(as, bs);
  emit_deformation(r, deformation_cast<Poly>(d), {});
}

void emit_normal_form(Report& r, const NormalForm& nf) {
  r.line("normal form: " + nf.describe());
  r.line("canonical: a_h = " + nf.a.to_string() + ", b_h = " + nf.b.to_string());
  r.line("epsilon_h = " + nf.epsilon.to_string());
  r.line("mu_h = " + nf.mu.to_string());
  r.line("confirmed: " + verdict_name(nf.confirmation.verdict));
  json j{{"case", normal_case_name(nf.kind)},
         {"description", nf.describe()},
         {"a", nf.a.to_string()},
         {"b", nf.b.to_string()},
         {"epsilon", nf.epsilon.to_string()},
         {"mu", nf.mu.to_string()},
         {"confirmed", verdict_name(nf.confirmation.verdict)}};
  if (nf.kind == NormalCase::Case1 || nf.kind == NormalCase::Resonant) j["m"] = nf.m;
  if (nf.kind != NormalCase::Case2) j["coefficient"] = nf.coefficient.to_string();
  r.data["normal_form"] = j;
}

void cmd_normalize(Report& r, const Options& o, const std::string& file, const std::string& a, const std::string& b,
                   std::optional<std::size_t> order) {
  CSeries as, bs;
  if (!file.empty()) {
    auto d = numeric(load_deformation(file, o).deformation, file);
    if (auto p = family2d_parameters(d)) {
      std::tie(as, bs) = *p;
    } else {
      auto nb = normalize_basis(d);
      std::vector<std::string> labels = d.base().labels();
      auto show = [&](const Vec<CSeries>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (v[i].is_zero()) continue;
          s += (s.empty() ? "" : " + ") + std::string("(") + v[i].to_string() + ")" + labels[i];
        }
        return s.empty() ? std::string("0") : s;
      };
      r.line("(e1)_h = " + show(nb.e1));
      r.line("(e2)_h = " + show(nb.e2));
      r.data["basis"] = {show(nb.e1), show(nb.e2)};
      as = nb.a;
      bs = nb.b;
    }
  } else {
    if (a.empty() || b.empty()) throw CLI::ValidationError("normalize", "give a deformation file or both --a and --b");
    std::tie(as, bs) = family_args(a, b, order);
  }
  r.line("a_h = " + as.to_string());
  r.line("b_h = " + bs.to_string());
  r.data["a"] = as.to_string();
  r.data["b"] = bs.to_string();
  emit_normal_form(r, normalize_family(as, bs));
}

void cmd_solve_compatible(Report& r, const Options& o, const std::string& file) {
  Algebra<Complex> alg(2);
  if (file.empty()) {
    alg.set_op("bracket", standard_bracket<Complex>());
  } else {
    alg = numeric(load_algebra(file, o).algebra, file);
  }
  const auto& labels = alg.labels();
  auto fam = solve_novikov_compatible(alg.op("bracket"));
  r.data["feasible"] = fam.feasible;
  if (!fam.feasible) {
    r.line("feasible: no");
    r.line("no product ∘ with commutator equal to the bracket satisfies NCTPA");
    r.code = kFail;
    return;
  }
  r.line("feasible: yes");
  r.line("params: " + (fam.params.empty() ? std::string("none") : join(fam.params, ", ")));
  r.data["params"] = fam.params;
  json entries = json::array();
  for (const auto& l : product_lines("circ", fam.family, labels)) {
    r.line("  " + l);
    entries.push_back(l);
  }
  r.data["family"] = entries;
  r.line(fam.right_commutativity.to_string(labels));
  r.data["right_commutativity"] = report_json(fam.right_commutativity, labels);
  json obs = json::array();
  for (const auto& p : fam.obstructions) {
    r.line("  obstruction: " + p.to_string() + " = 0");
    obs.push_back(p.to_string());
  }
  r.data["obstructions"] = obs;
  if (!fam.obstructions.empty()) r.code = kFail;
}

void cmd_catalog(Report& r, const std::string& name, const std::string& lambda) {
  Poly lam = lambda.empty() ? Poly::var("lambda") : parse_poly(lambda);
  std::vector<std::string> params;
  for (const auto& v : lam.variables()) params.push_back(v);
  if (!name.empty()) {
    auto e = catalog_entry(name, lam);
    std::string text = write_algebra_file(e.algebra, name == "Alam" ? params : std::vector<std::string>{});
    append_text(r, text);
    r.data["algebra"] = json::parse(text);
    return;
  }
  json entries = json::array();
  for (const auto& e : catalog(lam)) {
    const auto& labels = e.algebra.labels();
    auto tpa = check_identity(e.algebra, Identity::Tpa);
    std::vector<std::string> parts;
    for (const auto& [opname, op] : e.algebra.ops())
      for (const auto& l : product_lines(opname, op, labels)) parts.push_back(l);
    r.line(e.name + ": " + join(parts, ", ") + "; " + tpa.to_string(labels));
    entries.push_back({{"name", e.name}, {"products", parts}, {"tpa", report_json(tpa, labels)}});
    if (!tpa.passed) r.code = kFail;
  }
  r.data["entries"] = entries;
}

void cmd_operad_dims(Report& r, long n) {
  auto [nov, tpois] = operad_dims(n);
  r.line("Nov(" + std::to_string(n) + ")=" + std::to_string(nov) + " TPois(" + std::to_string(n) + ")=" +
         std::to_string(tpois));
  r.data["n"] = n;
  r.data["nov"] = nov;
  r.data["tpois"] = tpois;
}

std::vector<Vec<Complex>> parse_span(const std::string& text, std::size_t n) {
  std::vector<Vec<Complex>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    start = end + 1;
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    Vec<Complex> v;
    std::size_t s = 0;
    while (s <= item.size()) {
      auto e = item.find(',', s);
      if (e == std::string::npos) e = item.size();
      v.push_back(parse_scalar<Complex>(item.substr(s, e - s)));
      s = e + 1;
    }
    if (v.size() != n) throw DimMismatch("span vector '" + item + "' needs " + std::to_string(n) + " coordinates");
    out.push_back(std::move(v));
  }
  return out;
}

struct GelfandArgs {
  std::string file, map_name = "D", span;
  std::vector<std::string> identities;
  std::size_t euler = 0, t2 = 0, ddt = 0;
  bool formal = false;
};

void cmd_gelfand(Report& r, const Options& o, const GelfandArgs& g) {
  int sources = (g.file.empty() ? 0 : 1) + (g.euler ? 1 : 0) + (g.t2 ? 1 : 0) + (g.ddt ? 1 : 0);
  if (sources != 1) throw CLI::ValidationError("gelfand", "give exactly one of FILE, --euler N, --t2 N, --d-dt N");
  Algebra<Complex> base;
  LinearMap<Complex> d;
  if (!g.file.empty()) {
    base = numeric(load_algebra(g.file, o).algebra, g.file);
    d = base.map(g.map_name);
  } else {
    std::size_t n = g.euler + g.t2 + g.ddt;
    base = Algebra<Complex>(n, power_labels(n));
    base.set_op("dot", truncated_polynomial_product<Complex>(n));
    d = g.euler ? euler_derivation<Complex>(n) : (g.t2 ? t2_derivation<Complex>(n) : formal_d_dt<Complex>(n));
  }
  const auto& dot = base.op("dot");
  const auto& labels = base.labels();
  Algebra<Complex> out(base.dim(), labels, base.field());
  out.set_op("dot", dot);
  if (g.formal) {
    out.set_op("circ", formal_gelfand_product(dot, d));
    out.set_op("bracket", formal_derivation_bracket(dot, d));
  } else {
    out.set_op("circ", gelfand_construct(dot, d));
    out.set_op("bracket", derivation_bracket(dot, d));
  }
  out.set_map("D", d);
  append_text(r, write_algebra_file(algebra_cast<Poly>(out)));
  r.data["algebra"] = json::parse(write_algebra_file(algebra_cast<Poly>(out)));
  json reps = json::array();
  if (!g.formal) {
    for (auto id : {Identity::NovLeftSym, Identity::NovRightComm, Identity::Lie}) {
      auto rep = check_identity(out, id);
      r.line(rep.to_string(labels));
      reps.push_back(report_json(rep, labels));
      if (!rep.passed) r.code = kFail;
    }
  }
  for (const auto& name : g.identities) {
    auto id = parse_identity(name);
    if (!id) throw CLI::ValidationError("--identity", "unknown identity " + name);
    auto rep = check_identity(out, *id);
    r.line(rep.to_string(labels));
    reps.push_back(report_json(rep, labels));
    if (!rep.passed) r.code = kFail;
  }
  r.data["reports"] = reps;
  if (g.span.empty()) return;

  auto span = parse_span(g.span, base.dim());
  Algebra<Complex> br(base.dim(), labels, base.field());
  br.set_op("bracket", out.op("bracket"));
  std::vector<std::string> names;
  for (std::size_t s = 0; s < span.size(); ++s) names.push_back("x" + std::to_string(s + 1));
  auto sub = subalgebra_check(br, span, names);
  json js{{"closed", sub.closed}};
  for (std::size_t s = 0; s < span.size(); ++s) r.line(names[s] + " = " + format_vector(span[s], labels));
  if (!sub.closed) {
    r.line("span closed under bracket: no (" + sub.failure + ")");
    js["failure"] = sub.failure;
    r.code = kFail;
  } else {
    r.line("span closed under bracket: yes");
    json prods = json::array();
    const auto& ind = sub.induced->op("bracket");
    for (std::size_t a = 0; a < span.size(); ++a)
      for (std::size_t b = 0; b < span.size(); ++b) {
        if (a == b) continue;
        auto v = ind.product(a, b);
        Vec<Complex> orig(base.dim(), Complex(0));
        for (std::size_t k = 0; k < span.size(); ++k) add_scaled(orig, span[k], v[k]);
        std::string l = "[" + format_vector(span[a], labels) + "," + format_vector(span[b], labels) +
                        "] = " + format_vector(orig, labels) + "  ([" + names[a] + "," + names[b] +
                        "] = " + format_vector(v, names) + ")";
        r.line("  " + l);
        prods.push_back(l);
      }
    js["induced"] = prods;
  }
  r.data["span"] = js;
}

int classify(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const BadScalar*>(&e) ||
      dynamic_cast<const IndexOutOfRange*>(&e) || dynamic_cast<const MissingSymbol*>(&e) ||
      dynamic_cast<const MissingOp*>(&e) || dynamic_cast<const DimMismatch*>(&e) ||
      dynamic_cast<const OrderMismatch*>(&e) || dynamic_cast<const OutOfRange*>(&e) ||
      dynamic_cast<const CLI::Error*>(&e))
    return kUsage;
  return kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Novikov deformations and transposed Poisson algebras", "novdef"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--params", opt.params, "parameter values, e.g. a=1/2,b=3");

  std::string file, file2, identity, method = "auto", a, b, name, lambda;
  std::optional<std::size_t> order;
  std::size_t np_order = 3;
  long arity = 0;
  GelfandArgs g;

  auto* check = app.add_subcommand("check", "check identities of an algebra or deformation file");
  check->add_option("file", file, "algebra or deformation file")->required();
  check->add_option("--identity", identity, "identity name (default: every applicable one)");

  auto* limit = app.add_subcommand("limit", "classical limit of a deformation");
  limit->add_option("file", file, "deformation file")->required();

  auto* dnp = app.add_subcommand("deform-np", "deformation x·y + (x∘y)h of a Novikov-Poisson algebra");
  dnp->add_option("file", file, "algebra file with dot and circ")->required();
  dnp->add_option("--order", np_order, "truncation order")->check(CLI::Range(2, 1000));

  auto* dcom = app.add_subcommand("deform-commutator", "deformation (x∘y)h of a Novikov algebra");
  dcom->add_option("file", file, "algebra file with circ")->required();
  dcom->add_option("--order", np_order, "truncation order")->check(CLI::Range(2, 1000));

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two deformations");
  equiv->add_option("first", file, "deformation file")->required();
  equiv->add_option("second", file2, "deformation file")->required();
  equiv->add_option("--method", method, "auto, family or solver")->check(CLI::IsMember({"auto", "family", "solver"}));

  auto* fam = app.add_subcommand("family2d", "the deformation A_h^{a,b}");
  fam->add_option("--a", a, "series a_h")->required();
  fam->add_option("--b", b, "series b_h")->required();
  fam->add_option("--order", order, "truncation order");

  auto* norm = app.add_subcommand("normalize", "normal form of a 2-dimensional quantization");
  norm->add_option("file", file, "deformation file");
  norm->add_option("--a", a, "series a_h");
  norm->add_option("--b", b, "series b_h");
  norm->add_option("--order", order, "truncation order");

  auto* solve = app.add_subcommand("solve-compatible", "Novikov products compatible with a Lie bracket");
  solve->add_option("file", file, "algebra file with bracket (default [e1,e2]=e2)");

  auto* cat = app.add_subcommand("catalog", "2-dimensional transposed Poisson algebras with [e1,e2]=e2");
  cat->add_option("--name", name, "A00, A01 or Alam")->check(CLI::IsMember({"A00", "A01", "Alam"}));
  cat->add_option("--lambda", lambda, "value of lambda for Alam");

  auto* dims = app.add_subcommand("operad-dims", "dimensions of Nov(n) and TPois(n)");
  dims->add_option("n", arity, "arity")->required();

  auto* gel = app.add_subcommand("gelfand", "Gel'fand product x·D(y) and bracket x·D(y)-y·D(x)");
  gel->add_option("file", g.file, "algebra file with dot and a map");
  gel->add_option("--map", g.map_name, "name of the derivation in the file");
  gel->add_option("--euler", g.euler, "Q[t]/(t^N) with D = t d/dt");
  gel->add_option("--t2", g.t2, "Q[t]/(t^N) with D = t^2 d/dt");
  gel->add_option("--d-dt", g.ddt, "Q[t]/(t^N) with D = d/dt (use --formal)");
  gel->add_flag("--formal", g.formal, "skip the derivation check");
  gel->add_option("--identity", g.identities, "extra identity to check (repeatable), e.g. s5");
  gel->add_option("--span", g.span, "vectors 'c1,...,cn;...' to test for closure under the bracket");

  std::vector<std::string> argv_s{"novdef"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  Report r;
  try {
    if (*check) {
      r.data["command"] = "check";
      cmd_check(r, opt, file, identity);
    } else if (*limit) {
      r.data["command"] = "limit";
      cmd_limit(r, opt, file);
    } else if (*dnp) {
      r.data["command"] = "deform-np";
      cmd_deform_np(r, opt, file, np_order);
    } else if (*dcom) {
      r.data["command"] = "deform-commutator";
      cmd_deform_commutator(r, opt, file, np_order);
    } else if (*equiv) {
      r.data["command"] = "equiv";
      cmd_equiv(r, opt, file, file2, method);
    } else if (*fam) {
      r.data["command"] = "family2d";
      cmd_family2d(r, a, b, order);
    } else if (*norm) {
      r.data["command"] = "normalize";
      cmd_normalize(r, opt, file, a, b, order);
    } else if (*solve) {
      r.data["command"] = "solve-compatible";
      cmd_solve_compatible(r, opt, file);
    } else if (*cat) {
      r.data["command"] = "catalog";
      cmd_catalog(r, name, lambda);
    } else if (*dims) {
      r.data["command"] = "operad-dims";
      cmd_operad_dims(r, arity);
    } else if (*gel) {
      r.data["command"] = "gelfand";
      cmd_gelfand(r, opt, g);
    }
  } catch (const std::exception& e) {
    int code = classify(e);
    if (opt.format == "json") {
      out << json{{"command", r.data.value("command", "")}, {"error", e.what()}, {"exit_code", code}}.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return code;
  }

  if (opt.format == "json") {
    r.data["exit_code"] = r.code;
    out << r.data.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
  return r.code;
}

}  // namespace novdef::cli
