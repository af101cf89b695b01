#include "cobsig/energy.hpp"

#include <utility>

#include "cobsig/error.hpp"

namespace cobsig {

double lumped_integral(const ScalarField& f, const ScalarField& mass) {
  if (f.size() != mass.size()) throw InvalidArgument("field and mass sizes differ");
  double total = 0.0;
  for (std::size_t v = 0; v < f.size(); ++v) total += f[v] * mass[v];
  return total;
}

double barycentric_integral(const CobordismComplex& complex, const MetricField& metric, const ScalarField& f) {
  const auto vols = top_simplex_volumes(complex, metric);
  double total = 0.0;
  for (std::size_t s = 0; s < vols.size(); ++s) {
    double mean = 0.0;
    for (Index v : complex.simplices()[s].verts) mean += f[v];
    total += vols[s] * mean / static_cast<double>(complex.simplices()[s].verts.size());
  }
  return total;
}

double energy(const Signal& signal, int steiner_level) {
  const auto f = distance_field(signal, Region::A, steiner_level);
  return lumped_integral(f, lumped_vertex_volume(signal));
}

double barycentric_energy(const Signal& signal, int steiner_level) {
  const auto f = distance_field(signal, Region::A, steiner_level);
  return barycentric_integral(signal.complex(), signal.metric(), f);
}

Signal fourier_relabel(const Signal& signal) {
  const auto& c = signal.complex();
  LabelMap labels{
      {Region::X, c.labeled(Region::A)},
      {Region::Y, c.labeled(Region::B)},
      {Region::A, c.labeled(Region::X)},
      {Region::B, c.labeled(Region::Y)},
  };
  auto relabeled = CobordismComplex::build(c.vertices(), c.simplices(), std::move(labels));
  auto ptr = std::make_shared<const CobordismComplex>(std::move(relabeled));

  Hints hints;
  const std::pair<const char*, const char*> swaps[] = {
      {"E", "EF"}, {"i_A", "i_X"}, {"vol_A", "vol_X"}, {"diam_A", "diam_X"}};
  for (const auto& [key, value] : signal.hints()) hints[key] = value;
  for (const auto& [a, b] : swaps) {
    auto ha = signal.hint(a);
    auto hb = signal.hint(b);
    hints.erase(a);
    hints.erase(b);
    if (ha) hints[b] = *ha;
    if (hb) hints[a] = *hb;
  }
  // The edge list is a function of the simplices, so the metric carries over.
  MetricField metric(ptr->shared_edges(),
                     std::vector<double>(signal.metric().lengths().begin(), signal.metric().lengths().end()),
                     signal.metric().source());
  return Signal(std::move(ptr), std::move(metric), std::move(hints));
}

double fourier_energy(const Signal& signal, int steiner_level) {
  return energy(fourier_relabel(signal), steiner_level);
}

double energy_ratio(const Signal& signal, int steiner_level) {
  return summarize_energy(signal, steiner_level).ratio;
}

EnergySummary summarize_energy(const Signal& signal, int steiner_level) {
  EnergySummary s;
  s.steiner_level = steiner_level;
  s.energy = energy(signal, steiner_level);
  s.fourier_energy = fourier_energy(signal, steiner_level);
  if (!(s.energy > 0.0)) throw InvalidArgument("energy is zero; the ratio is undefined");
  s.ratio = s.fourier_energy / s.energy;
  return s;
}

}  // namespace cobsig
