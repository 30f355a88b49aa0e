#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novdef/equiv.hpp"

namespace novdef {

/// One of the 2-dimensional transposed Poisson algebras with bracket [e1,e2] = e2.
struct CatalogEntry {
  std::string name;  // "A00", "A01" or "Alam"
  std::optional<Poly> lambda;
  Algebra<Poly> algebra;
};

/// A00, A01 and Alam (at the given λ; symbolic by default).
std::vector<CatalogEntry> catalog(const Poly& lambda = Poly::var("lambda"));
CatalogEntry catalog_entry(const std::string& name, const Poly& lambda = Poly::var("lambda"));

/// The bracket [e1,e2] = e2 of every catalog entry.
template <Ring R>
BilinearOp<R> standard_bracket() {
  BilinearOp<R> br(2);
  br.at(0, 1, 1) = R(1);
  br.at(1, 0, 1) = R(-1);
  return br;
}

/// e1∘e1 = a e1 + b e2, e1∘e2 = (a+1) e2, e2∘e1 = a e2, e2∘e2 = 0.
template <Ring R>
BilinearOp<R> affine_novikov_family(const R& a, const R& b) {
  BilinearOp<R> c(2);
  c.at(0, 0, 0) = a;
  c.at(0, 0, 1) = b;
  c.at(0, 1, 1) = a + R(1);
  c.at(1, 0, 1) = a;
  return c;
}

struct CompatibleFamily {
  /// False when commutator(∘) = bracket together with NCTPA has no solution.
  bool feasible = false;
  BilinearOp<Complex> particular;
  std::vector<BilinearOp<Complex>> directions;
  std::vector<std::string> params;
  /// particular + Σ p_t directions[t].
  BilinearOp<Poly> family;
  IdentityReport<Poly> right_commutativity;
  /// Distinct nonzero NOV_RIGHTCOMM residual components over all triples.
  std::vector<Poly> obstructions;
};

/// All ∘ with x∘y - y∘x = [x,y] satisfying NCTPA, followed by the
/// NOV_RIGHTCOMM residuals of the resulting parametric family.
CompatibleFamily solve_novikov_compatible(const BilinearOp<Complex>& bracket);

/// NP1 then NP2 for (dot, circ); the report names the first failing identity.
IdentityReport<Poly> np_compatibility(const BilinearOp<Poly>& dot, const BilinearOp<Poly>& circ);

struct NormalizedBasis {
  /// Coordinates of (e1)_h and (e2)_h in the original basis.
  Vec<CSeries> e1, e2;
  CSeries mu, nu;
  CSeries a, b;
  /// Maps d onto family2d_construct(a, b).
  EquivalenceWitness witness;
};

/// Rewrites a 2-dimensional deformation with e1·e2 - e2·e1 = h(μ e1 + ν e2),
/// μ ≡ 0 and ν ≡ 1 (mod h), in the basis (e1)_h = ν⁻¹ e1, (e2)_h = ν⁻¹ μ e1 + e2.
NormalizedBasis normalize_basis(const Deformation& d);

enum class NormalCase { Case1, Case2, Case3, Resonant, Unital, Lambda };
std::string normal_case_name(NormalCase c);

struct NormalForm {
  NormalCase kind = NormalCase::Case2;
  /// Valuation m of b_h (Case1, Resonant).
  std::size_t m = 0;
  /// b_m (Case1, Resonant), b_1 (Case3), b_0 (Unital) or λ (Lambda).
  Complex coefficient;
  CSeries a, b;
  /// b = b_in ε - μ h (a + h).
  CSeries epsilon, mu;
  EquivVerdict confirmation;

  std::string describe() const;
};

/// (a_h, b_h) if d is literally family2d_construct(a_h, b_h).
std::optional<std::pair<CSeries, CSeries>> family2d_parameters(const Deformation& d);

/// Canonical representative of the equivalence class of A_h^{a,b}.
NormalForm normalize_family(const CSeries& a, const CSeries& b);

/// (dim Nov(n), dim TPois(n)) for 1 <= n <= 5.
std::pair<std::uint64_t, std::uint64_t> operad_dims(long n);
std::uint64_t nov_operad_dim(long n);

}  // namespace novdef
