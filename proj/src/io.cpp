#include "novdef/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "novdef/scalar_io.hpp"

namespace novdef {

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Line of the first occurrence of "key", or 0.
int line_of_key(std::string_view text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = e.byte > 0 ? line_of_offset(text, e.byte - 1) : 0;
    std::string msg = e.what();
    auto cut = msg.find("]: ");
    throw ParseError(cut == std::string::npos ? msg : msg.substr(cut + 3), line);
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what, const std::string& field, const std::string& key) const {
    throw ParseError(what + " (field " + field + ")", line_of_key(text_, key), field);
  }

  const json& member(const json& obj, const std::string& key, bool required = true) const {
    static const json null_value;
    if (!obj.is_object()) fail("expected an object", "<root>", key);
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) throw ParseError("missing field '" + key + "'", 0, key);
      return null_value;
    }
    return *it;
  }

  std::size_t positive(const json& v, const std::string& field) const {
    if (!v.is_number_integer() || v.get<long long>() < 1) fail("expected a positive integer", field, field);
    return static_cast<std::size_t>(v.get<long long>());
  }

  std::vector<std::string> strings(const json& v, const std::string& field) const {
    std::vector<std::string> out;
    if (v.is_null()) return out;
    if (!v.is_array()) fail("expected a list of strings", field, field);
    for (const auto& s : v) {
      if (!s.is_string()) fail("expected a list of strings", field, field);
      out.push_back(s.get<std::string>());
    }
    return out;
  }

  void header(const json& doc) {
    n_ = positive(member(doc, "dim"), "dim");
    const json& f = member(doc, "field", false);
    field_ = f.is_null() ? "Q" : (f.is_string() ? f.get<std::string>() : "");
    if (field_ != "Q" && field_ != "Qi") fail("field must be \"Q\" or \"Qi\"", "field", "field");
    labels_ = strings(member(doc, "labels", false), "labels");
    if (!labels_.empty() && labels_.size() != n_) fail("label count differs from dim", "labels", "labels");
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (uniq.size() != labels_.size()) fail("labels must be unique", "labels", "labels");
    params_ = strings(member(doc, "params", false), "params");
  }

  Poly scalar(const json& v, const std::string& field, const std::string& key) const {
    Poly p;
    if (v.is_number_integer()) {
      p = Poly(static_cast<long>(v.get<long long>()));
    } else if (v.is_string()) {
      try {
        p = parse_poly(v.get<std::string>());
      } catch (const BadScalar& e) {
        throw BadScalar(field + ": " + e.what());
      }
    } else {
      fail("scalar must be a string or an integer", field, key);
    }
    if (field_ == "Q" && !has_real_coefficients(p))
      throw BadScalar(field + ": imaginary scalar '" + p.to_string() + "' in a field Q document");
    for (const auto& var : p.variables())
      if (std::find(params_.begin(), params_.end(), var) == params_.end())
        throw BadScalar(field + ": symbol '" + var + "' is not a declared param");
    return p;
  }

  std::size_t index(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) throw ParseError("index must be an integer (field " + field + ")", 0, field);
    long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > n_)
      throw IndexOutOfRange(field + ": index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    return static_cast<std::size_t>(i - 1);
  }

  BilinearOp<Poly> op_table(const json& v, const std::string& field, const std::string& key) const {
    BilinearOp<Poly> op(n_);
    if (!v.is_array()) fail("operation table must be a list of [i, j, k, c] entries", field, key);
    for (std::size_t t = 0; t < v.size(); ++t) {
      const std::string f = field + "[" + std::to_string(t) + "]";
      const json& e = v[t];
      if (!e.is_array() || e.size() != 4) fail("entry must be [i, j, k, c]", f, key);
      std::size_t i = index(e[0], f), j = index(e[1], f), k = index(e[2], f);
      op.at(i, j, k) = op(i, j, k) + scalar(e[3], f, key);
    }
    return op;
  }

  LinearMap<Poly> map_table(const json& v, const std::string& field, const std::string& key) const {
    LinearMap<Poly> m(n_);
    if (!v.is_array()) fail("map table must be a list of [i, j, c] entries", field, key);
    for (std::size_t t = 0; t < v.size(); ++t) {
      const std::string f = field + "[" + std::to_string(t) + "]";
      const json& e = v[t];
      if (!e.is_array() || e.size() != 3) fail("entry must be [i, j, c]", f, key);
      std::size_t i = index(e[0], f), j = index(e[1], f);
      m.at(i, j) = m(i, j) + scalar(e[2], f, key);
    }
    return m;
  }

  Algebra<Poly> algebra(const json& doc) const {
    Algebra<Poly> alg(n_, labels_, field_);
    const json& ops = member(doc, "ops", false);
    if (!ops.is_null()) {
      if (!ops.is_object()) fail("ops must be an object", "ops", "ops");
      for (const auto& [name, table] : ops.items()) alg.set_op(name, op_table(table, "ops." + name, name));
    }
    const json& maps = member(doc, "maps", false);
    if (!maps.is_null()) {
      if (!maps.is_object()) fail("maps must be an object", "maps", "maps");
      for (const auto& [name, table] : maps.items()) alg.set_map(name, map_table(table, "maps." + name, name));
    }
    return alg;
  }

  const std::vector<std::string>& params() const { return params_; }

 private:
  std::string_view text_;
  std::size_t n_ = 0;
  std::string field_;
  std::vector<std::string> labels_;
  std::vector<std::string> params_;
};

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string string_list(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + quoted(v[i]);
  return s + "]";
}

void write_op_entries(std::ostringstream& out, const BilinearOp<Poly>& op, const std::string& indent) {
  const std::size_t n = op.dim();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!op(i, j, k).is_zero())
          lines.push_back(indent + "[" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                          std::to_string(k + 1) + ", " + quoted(op(i, j, k).to_string()) + "]");
  if (lines.empty()) {
    out << "[]";
    return;
  }
  out << "[\n";
  for (std::size_t t = 0; t < lines.size(); ++t) out << lines[t] << (t + 1 < lines.size() ? ",\n" : "\n");
  out << indent.substr(2) << "]";
}

void write_header(std::ostringstream& out, const Algebra<Poly>& alg, const std::vector<std::string>& params) {
  out << "{\n  \"dim\": " << alg.dim() << ",\n  \"field\": " << quoted(alg.field()) << ",\n";
  if (alg.labels() != default_labels(alg.dim())) out << "  \"labels\": " << string_list(alg.labels()) << ",\n";
  if (!params.empty()) out << "  \"params\": " << string_list(params) << ",\n";
}

void write_ops(std::ostringstream& out, const Algebra<Poly>& alg) {
  out << "  \"ops\": {";
  bool first = true;
  for (const auto& [name, op] : alg.ops()) {
    out << (first ? "\n" : ",\n") << "    " << quoted(name) << ": ";
    write_op_entries(out, op, "      ");
    first = false;
  }
  out << (first ? "}" : "\n  }");
  if (!alg.maps().empty()) {
    out << ",\n  \"maps\": {";
    first = true;
    for (const auto& [name, m] : alg.maps()) {
      out << (first ? "\n" : ",\n") << "    " << quoted(name) << ": ";
      std::vector<std::string> lines;
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
          if (!m(i, j).is_zero())
            lines.push_back("      [" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                            quoted(m(i, j).to_string()) + "]");
      if (lines.empty()) {
        out << "[]";
      } else {
        out << "[\n";
        for (std::size_t t = 0; t < lines.size(); ++t) out << lines[t] << (t + 1 < lines.size() ? ",\n" : "\n");
        out << "    ]";
      }
      first = false;
    }
    out << "\n  }";
  }
}

}  // namespace

AlgebraDocument parse_algebra_file(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object", 1);
  Reader r(text);
  r.header(doc);
  return {r.algebra(doc), r.params()};
}

DeformationDocument parse_deformation_file(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object", 1);
  Reader r(text);
  r.header(doc);
  Algebra<Poly> base = r.algebra(doc);
  const json& mu = r.member(doc, "mu");
  if (!mu.is_array() || mu.empty()) r.fail("mu must be a non-empty list of operation tables", "mu", "mu");
  std::vector<BilinearOp<Poly>> tables;
  for (std::size_t k = 0; k < mu.size(); ++k) tables.push_back(r.op_table(mu[k], "mu[" + std::to_string(k) + "]", "mu"));
  const json& ord = r.member(doc, "order", false);
  std::size_t order = ord.is_null() ? tables.size() : r.positive(ord, "order");
  if (order < 2) r.fail("order must be at least 2", "order", "order");
  if (!base.has_op("dot")) base.set_op("dot", tables[0]);
  if (!(base.op("dot") == tables[0])) r.fail("mu[0] differs from the base dot", "mu[0]", "mu");
  try {
    return {TruncatedDeformation<Poly>(std::move(base), std::move(tables), order), r.params()};
  } catch (const OrderMismatch& e) {
    r.fail(e.what(), "mu", "mu");
  }
}

bool is_deformation_document(std::string_view text) {
  json doc = parse_json(text);
  return doc.is_object() && doc.contains("mu");
}

std::string write_algebra_file(const Algebra<Poly>& alg, const std::vector<std::string>& params) {
  std::ostringstream out;
  write_header(out, alg, params);
  write_ops(out, alg);
  out << "\n}\n";
  return out.str();
}

std::string write_deformation_file(const TruncatedDeformation<Poly>& d, const std::vector<std::string>& params) {
  std::ostringstream out;
  write_header(out, d.base(), params);
  out << "  \"order\": " << d.order() << ",\n";
  write_ops(out, d.base());
  out << ",\n  \"mu\": [";
  std::size_t last = d.order();
  while (last > 1 && d.mu(last - 1).is_zero()) --last;
  for (std::size_t k = 0; k < last; ++k) {
    out << (k ? ",\n" : "\n") << "    ";
    write_op_entries(out, d.mu(k), "      ");
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, Complex> parse_assignments(std::string_view text) {
  std::map<std::string, Complex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("bad assignment '" + std::string(item) + "'", 0, "params");
    std::string name(item.substr(0, eq));
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    out[name] = parse_scalar<Complex>(item.substr(eq + 1));
  }
  return out;
}

Algebra<Poly> substitute_params(const Algebra<Poly>& alg, const std::map<std::string, Complex>& values) {
  Algebra<Poly> out(alg.dim(), alg.labels(), alg.field());
  auto sub = [&](const Poly& p) { return p.substitute(values); };
  for (const auto& [name, op] : alg.ops()) out.set_op(name, op.map(sub));
  for (const auto& [name, m] : alg.maps()) out.set_map(name, m.map(sub));
  return out;
}

TruncatedDeformation<Poly> substitute_params(const TruncatedDeformation<Poly>& d,
                                             const std::map<std::string, Complex>& values) {
  std::vector<BilinearOp<Poly>> mu;
  for (const auto& m : d.mu()) mu.push_back(m.map([&](const Poly& p) { return p.substitute(values); }));
  return TruncatedDeformation<Poly>(substitute_params(d.base(), values), std::move(mu));
}

namespace {

void collect(const BilinearOp<Poly>& op, std::set<std::string>& out) {
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n * n * n; ++i)
    for (const auto& v : op(i / (n * n), (i / n) % n, i % n).variables()) out.insert(v);
}

}  // namespace

std::vector<std::string> free_symbols(const Algebra<Poly>& alg) {
  std::set<std::string> s;
  for (const auto& [name, op] : alg.ops()) collect(op, s);
  for (const auto& [name, m] : alg.maps())
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        for (const auto& v : m(i, j).variables()) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<std::string> free_symbols(const TruncatedDeformation<Poly>& d) {
  std::set<std::string> s;
  for (const auto& m : d.mu()) collect(m, s);
  return {s.begin(), s.end()};
}

}  // namespace novdef
