#include <algorithm>

#include "kernels_common.hpp"
#include "superhopf/kernels.hpp"

namespace superhopf::kernels {

namespace detail {

std::vector<std::vector<Value>> increasing_tuples(std::size_t k, std::size_t N) {
  std::vector<std::vector<Value>> out;
  std::vector<Value> cur;
  auto rec = [&](auto&& self, Value from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Value v = from; v + (k - cur.size()) <= N + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<Value>> injective_tuples(std::size_t k, std::size_t N) {
  std::vector<std::vector<Value>> out;
  std::vector<Value> cur;
  std::vector<bool> used(N + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Value v = 1; v <= N; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::pair<NcMonomial, int> labeled_monomial(const SetSupercomposition& I, const std::vector<Value>& labels) {
  NcMonomial u;
  u.word.assign(I.bidegree().n, 0);
  for (std::size_t r = 0; r < I.length(); ++r) {
    if (I[r].fermionic()) u.thetas.push_back(labels[r]);
    for (Value t : I[r].nonzero()) u.word[t - 1] = labels[r];
  }
  std::size_t inv = 0;
  for (std::size_t a = 0; a < u.thetas.size(); ++a) {
    for (std::size_t b = a + 1; b < u.thetas.size(); ++b) {
      if (u.thetas[a] > u.thetas[b]) ++inv;
    }
  }
  std::sort(u.thetas.begin(), u.thetas.end());
  return {std::move(u), inv % 2 ? -1 : 1};
}

}  // namespace detail

namespace {

template <class Mono>
SuperPoly<Mono> multiply_impl(const SuperPoly<Mono>& f, const SuperPoly<Mono>& g) {
  SuperPoly<Mono> out(std::max(f.N, g.N));
  for (const auto& [u, a] : f.terms) {
    for (const auto& [v, b] : g.terms) {
      if (auto w = mono_mul(u, v)) out.add(w->first, a * b * w->second);
    }
  }
  return out;
}

}  // namespace

NcPoly multiply_serial(const NcPoly& f, const NcPoly& g) { return multiply_impl(f, g); }
CPoly multiply_serial(const CPoly& f, const CPoly& g) { return multiply_impl(f, g); }

NcPoly expand_M_serial(const SetSupercomposition& I, std::size_t N) {
  NcPoly out(N);
  for (const auto& a : detail::increasing_tuples(I.length(), N)) {
    auto [u, sign] = detail::labeled_monomial(I, a);
    out.add(u, sign);
  }
  return out;
}

NcPoly expand_m_serial(const SetSupercomposition& I, std::size_t N) {
  NcPoly out(N);
  for (const auto& a : detail::injective_tuples(I.length(), N)) {
    auto [u, sign] = detail::labeled_monomial(I, a);
    out.add(u, sign);
  }
  return out;
}

}  // namespace superhopf::kernels
