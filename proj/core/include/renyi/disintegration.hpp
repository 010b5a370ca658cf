#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renyi/event.hpp"
#include "renyi/function.hpp"
#include "renyi/measure.hpp"
#include "renyi/rational.hpp"
#include "renyi/state.hpp"
#include "renyi/statistic.hpp"

namespace renyi {

/// How to pick the dominating measure ν on the codomain.
enum class NuMode {
  counting,     // weight 1 everywhere; dominates every pushforward
  pushforward,  // ν = P_T itself; recovers Kolmogorov's normalized kernels
  supplied,     // user-provided, verified for domination
};

/// A measure on the codomain that assigns positive weight wherever the
/// pushforward does. The reference against which each kernel is a density.
class DominatingMeasure {
 public:
  explicit DominatingMeasure(SigmaFiniteMeasure measure) : measure_(std::move(measure)) {}

  const SigmaFiniteMeasure& measure() const { return measure_; }
  const Carrier& carrier() const { return measure_.carrier(); }

 private:
  SigmaFiniteMeasure measure_;
};

/// Selects ν per `mode`. A supplied ν is verified to dominate the
/// pushforward of P's representative; a violation names the offending atom.
DominatingMeasure choose_dominating(const RenyiState& P, const Statistic& T, NuMode mode,
                                    const std::optional<SigmaFiniteMeasure>& supplied = {});

/// The conditional Rényi state t ↦ P^t obtained by disintegrating a state
/// along a statistic against a dominating measure ν:
///
///   P^t(ω) = μ(ω)·[T(ω) = t] / ν(t)    where ν(t) > 0,
///
/// and the zero table where ν(t) = 0 (such t carries no pushforward mass).
/// Each kernel is supported inside its fiber, and the family satisfies
/// Σ_t φ(t)·P^t(A)·ν(t) = ∫ φ(T)·A dμ exactly for all φ and A.
///
/// The family is defined up to any rescaling t ↦ c(t) that is positive on
/// the support of the pushforward; this representative is the one pinned by
/// the stored ν.
class ConditionalState {
 public:
  ConditionalState(RenyiState base, Statistic statistic, DominatingMeasure nu);

  const RenyiState& base() const { return base_; }
  const Statistic& statistic() const { return statistic_; }
  const SigmaFiniteMeasure& nu() const { return nu_.measure(); }

  /// Pushforward of the base representative (cached).
  const SigmaFiniteMeasure& p_t() const { return p_t_; }

  /// Kernel weights of P^t over the domain carrier; all zero when ν(t) = 0.
  const std::vector<Rational>& kernel(std::size_t t) const { return kernels_[t]; }

  /// The kernel as a measure, or nullopt for the zero table.
  std::optional<SigmaFiniteMeasure> kernel_measure(std::size_t t) const;

 private:
  RenyiState base_;
  Statistic statistic_;
  DominatingMeasure nu_;
  SigmaFiniteMeasure p_t_;
  std::vector<std::vector<Rational>> kernels_;
};

/// Builds the conditional state. Throws PreconditionError when ν fails to
/// dominate the pushforward of the representative.
ConditionalState disintegrate(const RenyiState& P, const Statistic& T,
                              const DominatingMeasure& nu);

/// P^t(A) = Σ_{T(ω)=t} A(ω)·μ(ω)/ν(t), and 0 when ν(t) = 0.
Rational kernel_mass(const ConditionalState& C, const NonNegFunction& A, std::size_t t);

/// P^t(A|B) = ∫_{T=t} A·1_B dμ / μ({T=t} ∩ B).
///
/// Representative-independent and ν-independent. Only defined where the
/// fiber meets B with positive mass; elsewhere the value is undefined
/// rather than zero, and this throws PreconditionError.
Rational conditional_given(const ConditionalState& C, const NonNegFunction& A, const Event& B,
                           std::size_t t);

/// Outcome of checking the factorization P^t(AB) = P^t(A|B)·P^t(B) at every
/// codomain atom, together with the identity P_T({t}|B)·P(B) = P^t(B)·ν(t)
/// that underpins it.
struct FactorizationReport {
  bool factorization_ok = true;
  std::optional<std::string> factorization_witness;  // codomain atom label
  bool scaling_identity_ok = true;
  std::optional<std::string> scaling_witness;
  std::size_t atoms_checked = 0;

  bool ok() const { return factorization_ok && scaling_identity_ok; }
};

/// Verifies, exactly and for every codomain atom t:
///   - P^t(A·1_B) = P^t(A|B)·P^t(B) wherever P^t(B) > 0,
///   - P^t(A·1_B) = 0 wherever P^t(B) = 0,
///   - P_T({t}|B)·P(B) = P^t(B)·ν(t).
/// Throws PreconditionError when B is not elementary for the base state.
FactorizationReport verify_factorization(const ConditionalState& C, const NonNegFunction& A,
                                         const Event& B);

/// The classical conditional expectation P(A | T = t) given a normalizable
/// state: Σ_{T(ω)=t} A(ω)·μ(ω) / μ({T = t}). Equals conditional_given with
/// B = Ω, and equals kernel_mass(A, t) when ν is the pushforward.
/// Throws PreconditionError when P_T({t}) = 0 (undefined off the support).
Rational kolmogorov_conditional(const RenyiState& P, const NonNegFunction& A, const Statistic& T,
                                std::size_t t);

}  // namespace renyi
