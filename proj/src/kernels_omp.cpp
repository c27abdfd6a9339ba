#include <algorithm>
#include <omp.h>

#include "kernels_common.hpp"
#include "superhopf/kernels.hpp"

namespace superhopf::kernels {

namespace {

template <class Mono>
SuperPoly<Mono> multiply_impl(const SuperPoly<Mono>& f, const SuperPoly<Mono>& g) {
  std::vector<std::pair<Mono, Coeff>> left(f.terms.begin(), f.terms.end());
  std::vector<std::pair<Mono, Coeff>> right(g.terms.begin(), g.terms.end());
  SuperPoly<Mono> out(std::max(f.N, g.N));
  const long long n = static_cast<long long>(left.size());
#pragma omp parallel
  {
    SuperPoly<Mono> local(out.N);
#pragma omp for schedule(dynamic, 4) nowait
    for (long long i = 0; i < n; ++i) {
      const auto& [u, a] = left[static_cast<std::size_t>(i)];
      for (const auto& [v, b] : right) {
        if (auto w = mono_mul(u, v)) local.add(w->first, a * b * w->second);
      }
    }
#pragma omp critical(superhopf_merge)
    out.add_scaled(local, 1);
  }
  return out;
}

NcPoly expand_labeled(const SetSupercomposition& I, std::size_t N,
                      const std::vector<std::vector<Value>>& labels) {
  std::vector<std::pair<NcMonomial, int>> monos(labels.size());
  const long long n = static_cast<long long>(labels.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    monos[static_cast<std::size_t>(i)] = detail::labeled_monomial(I, labels[static_cast<std::size_t>(i)]);
  }
  NcPoly out(N);
  for (const auto& [u, sign] : monos) out.add(u, sign);
  return out;
}

}  // namespace

NcPoly multiply_parallel(const NcPoly& f, const NcPoly& g) { return multiply_impl(f, g); }
CPoly multiply_parallel(const CPoly& f, const CPoly& g) { return multiply_impl(f, g); }

NcPoly expand_M_parallel(const SetSupercomposition& I, std::size_t N) {
  return expand_labeled(I, N, detail::increasing_tuples(I.length(), N));
}

NcPoly expand_m_parallel(const SetSupercomposition& I, std::size_t N) {
  return expand_labeled(I, N, detail::injective_tuples(I.length(), N));
}

}  // namespace superhopf::kernels
