#pragma once

#include <cstdint>

#include "dualkern/norm_spec.hpp"
#include "dualkern/types.hpp"

namespace dualkern {

/// ||v|| under `spec`.  Throws on dimension mismatch and on non-real
/// coordinates when the field is real.
double norm_eval(const NormSpec& spec, const Vector& v);

/// Dual norm ||lam||_* = sup { |lam(v)| : ||v|| <= 1 }.
///
/// lp / weighted_lp evaluate the conjugate-exponent closed form (reciprocal
/// weights for weighted_lp).  polytope solves
///     min { sum_i |c_i| : lam = sum_i c_i g_i }
/// by enumerating basic solutions, which is exact at small scale.
double dual_norm_eval(const NormSpec& spec, const Functional& lam);

/// A functional with ||lam||_* = 1 and lam(v) = ||v|| (real).  v must be
/// nonzero.  Ties break at the lowest index.
Functional norming_functional(const NormSpec& spec, const Vector& v);

/// A vector with ||v|| = 1 and lam(v) = ||lam||_* for nonzero lam;
/// closed-form for lp and weighted_lp only.
Vector dual_attaining_vector(const NormSpec& spec, const Functional& lam);

/// max { |lam(v)| : ||lam||_* <= 1 }, evaluated per family without calling
/// norm_eval: conjugate-spec closed form for lp/weighted_lp, maximum over
/// generators for polytope.  Equal to ||v|| in exact arithmetic.
double recover_norm_by_duality(const NormSpec& spec, const Vector& v);

/// Checks |lam(v)| <= k ||v|| + tol over deterministic witnesses
/// (coordinate vectors, the dual-attaining direction where closed-form)
/// plus `trials` seeded random vectors.  Guaranteed true when
/// k >= dual_norm_eval(spec, lam).
bool bound_constant_check(const NormSpec& spec, const Functional& lam, double k, int trials,
                          std::uint64_t seed);

}  // namespace dualkern
