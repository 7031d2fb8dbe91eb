#pragma once

#include <array>

#include "spinrep/multivector.hpp"

namespace spinrep::clifford {

/// Cl(g) realised inside the operators on Λ₄.
///
/// Coefficients live in the ordered-product basis γ_I = γ_{i1}⋯γ_{ik}
/// (i1 < … < ik). Each basis element is represented by the composed operator
/// γ̂_{i1}∘⋯∘γ̂_{ik}; an element is identified with its action on the unit
/// 1 ∈ Λ₄ (the symbol). For a g-orthogonal generator basis the symbol of γ_I
/// is exactly d_I, otherwise it picks up lower-grade metric terms, and the
/// symbol matrix accounts for them when reading results back.
///
/// Immutable after construction; safe to share across threads.
class CliffordAlgebra {
 public:
  /// Throws DegenerateMetric.
  explicit CliffordAlgebra(const Metric& g);

  const Metric& metric() const { return g_; }

  /// Operator of the basis element γ_I acting from the left.
  const EndoOp& left_blade_op(BladeIndex b) const { return left_[b]; }
  /// Operator of right multiplication by γ_I: right γ̂_{ik}∘⋯∘right γ̂_{i1}.
  const EndoOp& right_blade_op(BladeIndex b) const { return right_[b]; }

  EndoOp left_op(const CliffordElement& a) const;
  EndoOp right_op(const CliffordElement& a) const;

  /// Column I is the symbol γ̂_I(1).
  const EndoOp& symbol_matrix() const { return symbol_; }

  CliffordElement product(const CliffordElement& a, const CliffordElement& b) const;

  /// Exact anti-automorphism γ_{i1}⋯γ_{ik} ↦ γ_{ik}⋯γ_{i1}.
  CliffordElement reversion(const CliffordElement& a) const;

  /// Two-sided inverse when a is invertible in Cl(g). Throws std::domain_error
  /// if the left-multiplication operator is singular.
  CliffordElement inverse(const CliffordElement& a) const;

 private:
  Metric g_;
  std::array<EndoOp, kBlades> left_;
  std::array<EndoOp, kBlades> right_;
  EndoOp symbol_;
  EndoOp symbol_inv_;
};

CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b,
                                  const Metric& g);

CliffordElement grade_project(const CliffordElement& a, int k);

/// Grades 0, 2 and 4.
CliffordElement even_part(const CliffordElement& a);
CliffordElement odd_part(const CliffordElement& a);

/// Grade-sign reversion (-1)^(k(k-1)/2). Agrees with
/// CliffordAlgebra::reversion whenever the generators are g-orthogonal.
CliffordElement reversion(const CliffordElement& a);

CliffordElement reversion(const CliffordElement& a, const Metric& g);

}  // namespace spinrep::clifford
