#pragma once

#include <string>
#include <vector>

#include "novdef/algebra.hpp"

namespace novdef {

/// x ·_h y = Σ_k mu[k](x,y) h^k in A ⊗ R[h]/(h^N), deforming the base "dot" = mu[0].
template <Ring R>
class TruncatedDeformation {
 public:
  TruncatedDeformation() = default;
  TruncatedDeformation(Algebra<R> base, std::vector<BilinearOp<R>> mu) : base_(std::move(base)), mu_(std::move(mu)) {
    if (mu_.size() < 2) throw OrderMismatch("deformation order must be at least 2");
    if (!(mu_[0] == base_.op("dot"))) throw DimMismatch("mu[0] must equal the base product");
    for (const auto& m : mu_)
      if (m.dim() != base_.dim()) throw DimMismatch("all mu[k] must share the base dimension");
  }
  /// Pads with zero operations up to the requested order.
  TruncatedDeformation(Algebra<R> base, std::vector<BilinearOp<R>> mu, std::size_t order)
      : TruncatedDeformation(std::move(base), padded(std::move(mu), order)) {}

  const Algebra<R>& base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return base_.dim(); }
  std::size_t order() const noexcept { return mu_.size(); }
  const std::vector<BilinearOp<R>>& mu() const noexcept { return mu_; }
  const BilinearOp<R>& mu(std::size_t k) const { return mu_.at(k); }

  /// The deformed product as one operation over R[h]/(h^N).
  BilinearOp<Series<R>> series_op() const {
    const std::size_t n = dim(), N = order();
    BilinearOp<Series<R>> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<R> c(N);
          for (std::size_t p = 0; p < N; ++p) c[p] = mu_[p](i, j, k);
          out.at(i, j, k) = Series<R>(std::move(c), N);
        }
    return out;
  }

  /// Same products reinterpreted at another truncation order.
  TruncatedDeformation with_order(std::size_t order) const {
    std::vector<BilinearOp<R>> mu(mu_.begin(), mu_.begin() + static_cast<std::ptrdiff_t>(std::min(order, mu_.size())));
    return TruncatedDeformation(base_, std::move(mu), order);
  }

  friend bool operator==(const TruncatedDeformation&, const TruncatedDeformation&) = default;

 private:
  static std::vector<BilinearOp<R>> padded(std::vector<BilinearOp<R>> mu, std::size_t order) {
    if (mu.empty()) throw OrderMismatch("deformation needs mu[0]");
    if (mu.size() > order) {
      for (std::size_t k = order; k < mu.size(); ++k)
        if (!mu[k].is_zero()) throw OrderMismatch("nonzero mu[k] beyond the truncation order");
      mu.resize(order);
    }
    while (mu.size() < order) mu.emplace_back(mu.front().dim());
    return mu;
  }

  Algebra<R> base_;
  std::vector<BilinearOp<R>> mu_;
};

template <Ring To, Ring From>
TruncatedDeformation<To> deformation_cast(const TruncatedDeformation<From>& d) {
  std::vector<BilinearOp<To>> mu;
  for (const auto& m : d.mu()) mu.push_back(op_cast<To>(m));
  return TruncatedDeformation<To>(algebra_cast<To>(d.base()), std::move(mu));
}

/// Novikov axioms for ·_h over R[h]/(h^N): each basis triple's residual series
/// must vanish through degree N-1. Left-symmetry is checked first.
template <Ring R>
IdentityReport<Series<R>> check_novikov_deformation(const TruncatedDeformation<R>& d) {
  auto op = d.series_op();
  auto left = check_identity(op, Identity::NovLeftSym);
  if (!left.passed) return left;
  auto right = check_identity(op, Identity::NovRightComm);
  right.tuples_checked += left.tuples_checked;
  return right;
}

template <Ring R>
struct ClassicalLimit {
  /// (A, dot = mu[0], bracket = commutator of mu[1]).
  Algebra<R> algebra;
  IdentityReport<R> tpa;
  IdentityReport<R> lie;
  bool is_transposed_poisson() const { return tpa.passed && lie.passed; }
};

/// Classical limit [x,y] = (x·_h y - y·_h x)/h mod h, with TPA and LIE checked
/// on the result.
template <Ring R>
ClassicalLimit<R> classical_limit(const TruncatedDeformation<R>& d) {
  const auto& dot = d.mu(0);
  if (!commutator(dot).is_zero()) {
    auto rep = check_identity(d.base(), Identity::CommAssoc);
    throw NotCommutativeBase("mu[0] is not commutative: " + rep.to_string(d.base().labels()));
  }
  Algebra<R> lim(d.dim(), d.base().labels(), d.base().field());
  lim.set_op("dot", dot);
  lim.set_op("bracket", commutator(d.mu(1)));
  auto tpa = check_identity(lim, Identity::Tpa);
  auto lie = check_identity(lim, Identity::Lie);
  return {std::move(lim), std::move(tpa), std::move(lie)};
}

/// x ·_h y = x·y + (x∘y) h from a Novikov–Poisson algebra (ops "dot", "circ").
template <Ring R>
TruncatedDeformation<R> deform_from_np(const Algebra<R>& np, std::size_t order) {
  for (auto id : {Identity::CommAssoc, Identity::NovLeftSym, Identity::NovRightComm, Identity::Np1, Identity::Np2}) {
    auto rep = check_identity(np, id);
    if (!rep.passed) throw NotNovikovPoisson(rep.to_string(np.labels()));
  }
  Algebra<R> base(np.dim(), np.labels(), np.field());
  base.set_op("dot", np.op("dot"));
  return TruncatedDeformation<R>(base, {np.op("dot"), np.op("circ")}, order);
}

/// x ·_h y = (x∘y) h over the trivial product, for a Novikov product ∘.
template <Ring R>
TruncatedDeformation<R> commutator_deform(const BilinearOp<R>& nov, std::size_t order) {
  for (auto id : {Identity::NovLeftSym, Identity::NovRightComm}) {
    auto rep = check_identity(nov, id);
    if (!rep.passed) throw NotNovikov(rep.to_string(default_labels(nov.dim())));
  }
  Algebra<R> base(nov.dim());
  base.set_op("dot", BilinearOp<R>(nov.dim()));
  return TruncatedDeformation<R>(base, {BilinearOp<R>(nov.dim()), nov}, order);
}

/// The 2-dimensional family A_h^{a_h,b_h}:
///   e1·e1 = a_h e1 + b_h e2,  e1·e2 = (a_h + h) e2,  e2·e1 = a_h e2,  e2·e2 = 0.
template <Ring R>
TruncatedDeformation<R> family2d_construct(const Series<R>& a, const Series<R>& b) {
  if (a.order() != b.order() || a.order() < 2)
    throw OrderMismatch("a_h and b_h need a common order >= 2 (got " + std::to_string(a.order()) + ", " +
                        std::to_string(b.order()) + ")");
  const std::size_t N = a.order();
  std::vector<BilinearOp<R>> mu;
  for (std::size_t k = 0; k < N; ++k) {
    BilinearOp<R> m(2);
    m.at(0, 0, 0) = a.coeff(k);
    m.at(0, 0, 1) = b.coeff(k);
    m.at(0, 1, 1) = k == 1 ? a.coeff(k) + R(1) : a.coeff(k);
    m.at(1, 0, 1) = a.coeff(k);
    mu.push_back(std::move(m));
  }
  Algebra<R> base(2);
  base.set_op("dot", mu[0]);
  return TruncatedDeformation<R>(base, std::move(mu));
}

/// D(x) = [1_A, x] for a unital transposed Poisson algebra; D is a derivation
/// and x·D(y) - y·D(x) reproduces the bracket.
template <Ring R>
LinearMap<R> unital_derivation(const Algebra<R>& tpa, const Vec<R>& unit) {
  const std::size_t n = tpa.dim();
  const auto& dot = tpa.op("dot");
  const auto& br = tpa.op("bracket");
  if (unit.size() != n) throw DimMismatch("unit vector has wrong length");
  for (std::size_t j = 0; j < n; ++j) {
    auto e = basis_vector<R>(n, j);
    if (!(dot(unit, e) == e) || !(dot(e, unit) == e))
      throw NotUnit("not a two-sided unit: fails on " + tpa.labels()[j]);
  }
  for (auto id : {Identity::CommAssoc, Identity::Lie, Identity::Tpa}) {
    auto rep = check_identity(tpa, id);
    if (!rep.passed) throw NotTPA(rep.to_string(tpa.labels()));
  }
  LinearMap<R> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = br(unit, basis_vector<R>(n, j));
    for (std::size_t i = 0; i < n; ++i) d.at(i, j) = col[i];
  }
  auto der = is_derivation(dot, d);
  if (!der.passed) throw NotDerivation(der.to_string(tpa.labels()));
  return d;
}

}  // namespace novdef
