#pragma once

#include "cobsig/field.hpp"
#include "cobsig/geodesy.hpp"
#include "cobsig/signal.hpp"

namespace cobsig {

// Σ_v f(v) m(v) with m the lumped vertex volume.
double lumped_integral(const ScalarField& f, const ScalarField& mass);

// Σ_T vol(T) · mean of f over the vertices of T. Kept as a cross-check of the
// lumped rule.
double barycentric_integral(const CobordismComplex& complex, const MetricField& metric, const ScalarField& f);

// E(M) = ∫_M ρ(x, A) dV, lumped quadrature of the Steiner distance field.
double energy(const Signal& signal, int steiner_level = kDefaultSteinerLevel);
double barycentric_energy(const Signal& signal, int steiner_level = kDefaultSteinerLevel);

// Same complex and metric with the roles of the end and side strata exchanged:
// X' = A, Y' = B, A' = X, B' = Y. Throws StructureError if the result is not a
// valid cobordism (e.g. X and Y touch, so the new A and B would).
Signal fourier_relabel(const Signal& signal);

// E(F(M)) = ∫_M ρ(x, X) dV, evaluated as energy(fourier_relabel(signal)).
double fourier_energy(const Signal& signal, int steiner_level = kDefaultSteinerLevel);

// E(F(M)) / E(M). Throws if E(M) is zero.
double energy_ratio(const Signal& signal, int steiner_level = kDefaultSteinerLevel);

struct EnergySummary {
  double energy = 0.0;
  double fourier_energy = 0.0;
  double ratio = 0.0;
  int steiner_level = kDefaultSteinerLevel;
};

EnergySummary summarize_energy(const Signal& signal, int steiner_level = kDefaultSteinerLevel);

}  // namespace cobsig
