#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "novdef/deform.hpp"

namespace novdef {

/// Parsed algebra document. Scalars live in Q or Q(i) adjoined the declared params.
struct AlgebraDocument {
  Algebra<Poly> algebra;
  std::vector<std::string> params;
};

struct DeformationDocument {
  TruncatedDeformation<Poly> deformation;
  std::vector<std::string> params;
};

/// {"dim": n, "field": "Q"|"Qi", "labels": [...], "params": [...],
///  "ops": {"dot": [[i, j, k, "c"], ...]}, "maps": {"D": [[i, j, "c"], ...]}}
/// Indices are 1-based; omitted entries are zero.
AlgebraDocument parse_algebra_file(std::string_view text);

/// An algebra document with "order": N and "mu": [table, table, ...]; a missing
/// "dot" defaults to mu[0].
DeformationDocument parse_deformation_file(std::string_view text);

/// True if the document has a "mu" member.
bool is_deformation_document(std::string_view text);

/// Line-oriented JSON: one sparse entry per line, keys in fixed order.
std::string write_algebra_file(const Algebra<Poly>& alg, const std::vector<std::string>& params = {});
std::string write_deformation_file(const TruncatedDeformation<Poly>& d, const std::vector<std::string>& params = {});

/// "-" reads standard input.
std::string read_text_file(const std::string& path);

/// Parses "a=1/2,b=3".
std::map<std::string, Complex> parse_assignments(std::string_view text);

Algebra<Poly> substitute_params(const Algebra<Poly>& alg, const std::map<std::string, Complex>& values);
TruncatedDeformation<Poly> substitute_params(const TruncatedDeformation<Poly>& d,
                                             const std::map<std::string, Complex>& values);

/// Variables still present in the structure constants.
std::vector<std::string> free_symbols(const Algebra<Poly>& alg);
std::vector<std::string> free_symbols(const TruncatedDeformation<Poly>& d);

}  // namespace novdef
