#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "novdef/scalar.hpp"
#include "novdef/series.hpp"

namespace novdef {

/// Parses an expanded or factored expression over Q(i) in named symbols:
/// numbers, the imaginary unit `i`, identifiers, + - * / ^ and parentheses.
/// Juxtaposition multiplies ("2h", "3a(b+1)"). Division only by nonzero constants.
Poly parse_poly(std::string_view text);

/// True when every coefficient is rational.
bool has_real_coefficients(const Poly& p);

template <Ring R>
R parse_scalar(std::string_view text) {
  return from_poly<R>(parse_poly(text));
}

/// Parses "1+2h-h^3@order=5". Without the suffix, `default_order` is used;
/// if that is also absent the text must be free of h and yields an exact constant.
template <Ring R>
Series<R> parse_series(std::string_view text, std::optional<std::size_t> default_order = std::nullopt) {
  std::optional<std::size_t> order = default_order;
  auto at = text.find('@');
  if (at != std::string_view::npos) {
    std::string_view suffix = text.substr(at + 1);
    constexpr std::string_view key = "order=";
    if (suffix.substr(0, key.size()) != key) throw BadScalar("expected '@order=N' in '" + std::string(text) + "'");
    std::string digits(suffix.substr(key.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw BadScalar("bad series order in '" + std::string(text) + "'");
    order = std::stoul(digits);
    if (*order == 0) throw BadScalar("series order must be positive");
    text = text.substr(0, at);
  }
  Poly p = parse_poly(text);
  if (!order) {
    if (p.degree_in("h") > 0) throw BadScalar("series '" + std::string(text) + "' needs an @order=N suffix");
    return Series<R>(from_poly<R>(p));
  }
  std::vector<R> c;
  for (std::size_t k = 0; k < *order; ++k) c.push_back(from_poly<R>(p.coefficient_of("h", static_cast<unsigned>(k))));
  return Series<R>(std::move(c), *order);
}

}  // namespace novdef
