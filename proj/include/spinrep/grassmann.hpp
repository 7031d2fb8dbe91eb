#pragma once

#include <array>

#include "spinrep/multivector.hpp"

// Complex exterior algebra over four generators d_0..d_3.
namespace spinrep::grassmann {

GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b);

/// Left exterior multiplication: v ∧ a.
GrassmannElement delta(const Vec4c& v, const GrassmannElement& a);

/// Left contraction with v through g. On an ascending blade v_1∧…∧v_k this is
/// Σ_l (-1)^(l+1) g(v, v_l) v_1∧…(v_l omitted)…∧v_k, which makes
/// delta + delta_star satisfy the Clifford anticommutator {γ̂_μ, γ̂_ν} = 2 g_μν.
/// Throws DegenerateMetric.
GrassmannElement delta_star(const Vec4c& v, const GrassmannElement& a, const Metric& g);

/// Right exterior multiplication: a ∧ v.
GrassmannElement right_delta(const Vec4c& v, const GrassmannElement& a);

/// Right contraction: Σ_l (-1)^(k-l) g(v_l, v) v_1∧…(v_l omitted)…∧v_k.
GrassmannElement right_delta_star(const Vec4c& v, const GrassmannElement& a, const Metric& g);

// Matrix forms of the operators above, acting on coefficient vectors.
EndoOp delta_op(const Vec4c& v);
EndoOp delta_star_op(const Vec4c& v, const Metric& g);
EndoOp right_delta_op(const Vec4c& v);
EndoOp right_delta_star_op(const Vec4c& v, const Metric& g);

/// γ̂_i = δ_i + δ*_i.
EndoOp gamma_op(int i, const Metric& g);
/// Right-acting γ̂_i = right δ_i + right δ*_i.
EndoOp right_gamma_op(int i, const Metric& g);

/// Hodge star for the g-induced inner product on Λᵏ,
/// ⟨d_I, d_J⟩ = det g[I, J], with a ∧ ⋆b = ⟨a, b⟩ vol and
/// vol = o·d_0∧d_1∧d_2∧d_3 / √|det g| (so ⟨vol, vol⟩ = sign det g).
GrassmannElement hodge(const GrassmannElement& a, const Metric& g, Orientation o);
EndoOp hodge_op(const Metric& g, Orientation o);

/// Dual product a ∨ b = ⋆(a ∧ ⋆b). For a vector v, v ∨ ω is the
/// contraction δ*_v ω up to a per-grade sign (see contraction_sign_table).
GrassmannElement vee(const GrassmannElement& a, const GrassmannElement& b, const Metric& g,
                     Orientation o);

/// Mirror dual product a ∨ b = ⋆(⋆a ∧ b), used for the right contraction ω ∨ v.
GrassmannElement right_vee(const GrassmannElement& a, const GrassmannElement& b, const Metric& g,
                           Orientation o);

/// ⋆⋆ restricted to Λᵏ, k = 0..4, read off from the operator.
std::array<Complex, 5> double_hodge_scalars(const Metric& g, Orientation o);

/// s_k with δ*_v ω = s_k · (v ∨ ω) on ω ∈ Λᵏ (k = 1..4; s_0 = 0 since both
/// sides vanish). Computed from the generator contractions of the blade basis.
std::array<int, 5> contraction_sign_table(const Metric& g, Orientation o);

/// Same for the right contraction against right_vee(ω, v).
std::array<int, 5> right_contraction_sign_table(const Metric& g, Orientation o);

}  // namespace spinrep::grassmann
