#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novdef/deform.hpp"

namespace novdef {

using CSeries = Series<Complex>;
using Deformation = TruncatedDeformation<Complex>;

/// f_h = Σ_k f[k] h^k with f[0] = id.
class EquivalenceWitness {
 public:
  explicit EquivalenceWitness(std::vector<LinearMap<Complex>> f);
  static EquivalenceWitness identity(std::size_t dim, std::size_t order);

  std::size_t order() const noexcept { return f_.size(); }
  std::size_t dim() const noexcept { return f_.front().dim(); }
  const std::vector<LinearMap<Complex>>& f() const noexcept { return f_; }
  const LinearMap<Complex>& f(std::size_t k) const { return f_.at(k); }

  /// f_h as one linear map over C[h]/(h^N).
  LinearMap<CSeries> series_map() const;

 private:
  std::vector<LinearMap<Complex>> f_;
};

/// Truncated inverse of f_h; exists because f[0] = id.
EquivalenceWitness invert_witness(const EquivalenceWitness& w);

/// Checks f_h(x ·_h y) = f_h(x) ·'_h f_h(y) on all basis pairs through degree N-1.
IdentityReport<CSeries> verify_witness(const Deformation& d1, const Deformation& d2, const EquivalenceWitness& w);

enum class Verdict { Equivalent, NotEquivalent, Unknown };
std::string verdict_name(Verdict v);

struct EquivVerdict {
  Verdict verdict = Verdict::Unknown;
  /// Present for Equivalent verdicts; always accepted by verify_witness.
  std::optional<EquivalenceWitness> witness;
  /// Degree of h at which the obstruction appears (NotEquivalent).
  std::size_t failure_order = 0;
  std::string reason;
  /// The (ε_h, μ_h) pair of the 2-dimensional criterion, when that route decided.
  std::optional<CSeries> epsilon;
  std::optional<CSeries> mu;
};

/// Order-by-order search for f_h. Free parameters of earlier orders are kept
/// symbolic; linear consistency conditions on them are eliminated exactly,
/// nonlinear ones force a commitment to the basic solution. NotEquivalent is
/// returned only for parameter-free obstructions reached without commitment.
EquivVerdict solve_equivalence(const Deformation& d1, const Deformation& d2);

/// Exact decision for A_h^{a,b} versus A_h^{a',b'}: equivalent iff a = a' and
/// b' = b ε - μ h (a + h) for some ε ≡ 1 (mod h) and μ.
EquivVerdict family2d_equiv(const CSeries& a, const CSeries& b, const CSeries& a2, const CSeries& b2);

/// Witness f(e1) = e1 + μ h e2, f(e2) = ε e2 for the 2-dimensional family.
EquivalenceWitness family2d_witness(const CSeries& epsilon, const CSeries& mu);

/// Rebuilds a deformation from its product over C[h]/(h^N).
Deformation deformation_from_series(const BilinearOp<CSeries>& op, std::size_t order,
                                    std::vector<std::string> labels = {});

/// Rewrites d in the basis E_j = g(e_j). The returned deformation is
/// equivalent to d via invert_witness(g).
Deformation transport(const Deformation& d, const EquivalenceWitness& g);

}  // namespace novdef
