#include "renyi/disintegration.hpp"

#include "renyi/error.hpp"

namespace renyi {

DominatingMeasure choose_dominating(const RenyiState& P, const Statistic& T, NuMode mode,
                                    const std::optional<SigmaFiniteMeasure>& supplied) {
  require_same_carrier(P.carrier(), T.domain(), "choose_dominating");
  switch (mode) {
    case NuMode::counting:
      return DominatingMeasure(SigmaFiniteMeasure::counting(T.codomain()));
    case NuMode::pushforward:
      return DominatingMeasure(pushforward(P.representative(), T));
    case NuMode::supplied:
      break;
  }
  if (!supplied) throw PreconditionError("supplied mode requires a measure");
  require_same_carrier(supplied->carrier(), T.codomain(), "choose_dominating");
  SigmaFiniteMeasure image = pushforward(P.representative(), T);
  for (std::size_t t = 0; t < image.carrier().size(); ++t) {
    if (image.weight(t).is_positive() && !supplied->weight(t).is_positive()) {
      throw PreconditionError("supplied measure does not dominate the pushforward at atom '" +
                              image.carrier().atom(t) + "'");
    }
  }
  return DominatingMeasure(*supplied);
}

ConditionalState::ConditionalState(RenyiState base, Statistic statistic, DominatingMeasure nu)
    : base_(std::move(base)),
      statistic_(std::move(statistic)),
      nu_(std::move(nu)),
      p_t_(pushforward(base_.representative(), statistic_)) {
  require_same_carrier(base_.carrier(), statistic_.domain(), "disintegrate");
  require_same_carrier(nu_.carrier(), statistic_.codomain(), "disintegrate");

  const std::size_t nt = statistic_.codomain().size();
  for (std::size_t t = 0; t < nt; ++t) {
    if (p_t_.weight(t).is_positive() && !nu_.measure().weight(t).is_positive()) {
      throw PreconditionError("dominating measure vanishes at atom '" +
                              statistic_.codomain().atom(t) + "' where the pushforward does not");
    }
  }

  const auto& mu = base_.representative();
  kernels_.assign(nt, std::vector<Rational>(mu.carrier().size(), Rational(0)));
  for (std::size_t i = 0; i < mu.carrier().size(); ++i) {
    std::size_t t = statistic_.apply(i);
    const Rational& nu_t = nu_.measure().weight(t);
    if (nu_t.is_positive()) kernels_[t][i] = mu.weight(i) / nu_t;
  }
}

std::optional<SigmaFiniteMeasure> ConditionalState::kernel_measure(std::size_t t) const {
  const auto& weights = kernels_[t];
  bool any_positive = false;
  for (const auto& w : weights) any_positive = any_positive || w.is_positive();
  if (!any_positive) return std::nullopt;
  return SigmaFiniteMeasure(base_.carrier(), weights);
}

ConditionalState disintegrate(const RenyiState& P, const Statistic& T,
                              const DominatingMeasure& nu) {
  return ConditionalState(P, T, nu);
}

Rational kernel_mass(const ConditionalState& C, const NonNegFunction& A, std::size_t t) {
  require_same_carrier(A.carrier(), C.base().carrier(), "kernel_mass");
  if (t >= C.statistic().codomain().size()) throw Error("codomain atom index out of range");
  const auto& kernel = C.kernel(t);
  Rational sum;
  for (std::size_t i = 0; i < kernel.size(); ++i) sum += A.at(i) * kernel[i];
  return sum;
}

Rational conditional_given(const ConditionalState& C, const NonNegFunction& A, const Event& B,
                           std::size_t t) {
  const auto& mu = C.base().representative();
  require_same_carrier(A.carrier(), mu.carrier(), "conditional_given");
  require_same_carrier(B.carrier(), mu.carrier(), "conditional_given");
  if (t >= C.statistic().codomain().size()) throw Error("codomain atom index out of range");

  Rational numerator, denominator;
  for (std::size_t i = 0; i < mu.carrier().size(); ++i) {
    if (C.statistic().apply(i) != t || !B.contains(i)) continue;
    numerator += A.at(i) * mu.weight(i);
    denominator += mu.weight(i);
  }
  if (!denominator.is_positive()) {
    throw PreconditionError("conditional is undefined at atom '" +
                            C.statistic().codomain().atom(t) +
                            "': the fiber meets " + B.str() + " with zero mass");
  }
  return numerator / denominator;
}

FactorizationReport verify_factorization(const ConditionalState& C, const NonNegFunction& A,
                                         const Event& B) {
  const auto& mu = C.base().representative();
  require_same_carrier(A.carrier(), mu.carrier(), "verify_factorization");
  Rational mass_b = mass(B, mu);
  if (!mass_b.is_positive()) {
    throw PreconditionError(B.str() + " is not an elementary condition (zero mass)");
  }

  FactorizationReport report;
  const Carrier& codomain = C.statistic().codomain();
  NonNegFunction a_on_b = A * NonNegFunction::indicator(B);
  NonNegFunction indicator_b = NonNegFunction::indicator(B);

  for (std::size_t t = 0; t < codomain.size(); ++t) {
    ++report.atoms_checked;
    Rational lhs = kernel_mass(C, a_on_b, t);   // P^t(AB)
    Rational pt_b = kernel_mass(C, indicator_b, t);  // P^t(B)

    if (pt_b.is_positive()) {
      Rational rhs = conditional_given(C, A, B, t) * pt_b;
      if (report.factorization_ok && lhs != rhs) {
        report.factorization_ok = false;
        report.factorization_witness = codomain.atom(t);
      }
    } else if (report.factorization_ok && !lhs.is_zero()) {
      report.factorization_ok = false;
      report.factorization_witness = codomain.atom(t);
    }

    // P_T({t}|B)·P(B) = P^t(B)·ν(t), the identity that pins the conditional
    // pushforward against ν.
    Rational fiber_b_mass;  // μ({T = t} ∩ B)
    for (std::size_t i = 0; i < mu.carrier().size(); ++i) {
      if (C.statistic().apply(i) == t && B.contains(i)) fiber_b_mass += mu.weight(i);
    }
    if (report.scaling_identity_ok && fiber_b_mass != pt_b * C.nu().weight(t)) {
      report.scaling_identity_ok = false;
      report.scaling_witness = codomain.atom(t);
    }
  }
  return report;
}

Rational kolmogorov_conditional(const RenyiState& P, const NonNegFunction& A, const Statistic& T,
                                std::size_t t) {
  const auto& mu = P.representative();
  require_same_carrier(A.carrier(), mu.carrier(), "kolmogorov_conditional");
  require_same_carrier(mu.carrier(), T.domain(), "kolmogorov_conditional");
  if (t >= T.codomain().size()) throw Error("codomain atom index out of range");

  Rational numerator, denominator;
  for (std::size_t i = 0; i < mu.carrier().size(); ++i) {
    if (T.apply(i) != t) continue;
    numerator += A.at(i) * mu.weight(i);
    denominator += mu.weight(i);
  }
  if (!denominator.is_positive()) {
    throw PreconditionError("conditional is undefined at atom '" + T.codomain().atom(t) +
                            "': it carries no pushforward mass");
  }
  return numerator / denominator;
}

}  // namespace renyi
