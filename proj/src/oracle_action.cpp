#include <algorithm>
#include <stdexcept>

#include "superhopf/oracle.hpp"

namespace superhopf {

namespace {

bool uses(const NcMonomial& u, Value i) {
  return std::binary_search(u.thetas.begin(), u.thetas.end(), i) ||
         std::find(u.word.begin(), u.word.end(), i) != u.word.end();
}

bool uses(const CMonomial& u, Value i) {
  return std::binary_search(u.thetas.begin(), u.thetas.end(), i) ||
         (i <= u.exponents.size() && u.exponents[i - 1] > 0);
}

Value swap_label(Value v, Value i) { return v == i ? i + 1 : v == i + 1 ? i : v; }

void check_alphabet(Value top, std::size_t N, Value i) {
  if (top > N) {
    throw std::out_of_range("s_" + std::to_string(i) + " moves a variable to index " + std::to_string(top) +
                            " outside the alphabet of size " + std::to_string(N));
  }
}

// s_i exchanges the slots i and i+1 when at most one of them is occupied;
// when both are occupied it acts trivially.
NcMonomial apply_generator(Value i, NcMonomial u, std::size_t N) {
  if (i == 0) throw std::invalid_argument("generators are numbered from 1");
  if (uses(u, i) == uses(u, i + 1)) return u;
  for (auto& t : u.thetas) t = swap_label(t, i);
  for (auto& x : u.word) x = swap_label(x, i);
  check_alphabet(max_index(u), N, i);
  return u;
}

CMonomial apply_generator(Value i, CMonomial u, std::size_t N) {
  if (i == 0) throw std::invalid_argument("generators are numbered from 1");
  if (uses(u, i) == uses(u, i + 1)) return u;
  for (auto& t : u.thetas) t = swap_label(t, i);
  if (u.exponents.size() < i + 1) u.exponents.resize(i + 1, 0);
  std::swap(u.exponents[i - 1], u.exponents[i]);
  while (!u.exponents.empty() && u.exponents.back() == 0) u.exponents.pop_back();
  check_alphabet(max_index(u), N, i);
  return u;
}

template <class Mono>
Mono act(const std::vector<Value>& gens, Mono u, std::size_t N) {
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) u = apply_generator(*it, std::move(u), N);
  return u;
}

template <class Mono>
SuperPoly<Mono> act_poly(const std::vector<Value>& gens, const SuperPoly<Mono>& f) {
  SuperPoly<Mono> out(f.N);
  for (const auto& [u, c] : f.terms) out.add(act(gens, u, f.N), c);
  return out;
}

template <class Mono>
bool invariant(const SuperPoly<Mono>& f, std::size_t max_gen) {
  if (max_gen >= f.N && max_gen > 0) {
    throw std::invalid_argument("check_invariance: generators must stay below the alphabet size " +
                                std::to_string(f.N));
  }
  for (Value i = 1; i <= max_gen; ++i) {
    if (act_poly<Mono>({i}, f) != f) return false;
  }
  return true;
}

}  // namespace

std::pair<NcMonomial, SetSupercomposition> std_and_I(const NcMonomial& u) {
  std::vector<Value> labels(u.thetas);
  labels.insert(labels.end(), u.word.begin(), u.word.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto rank = [&](Value v) {
    return static_cast<Value>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin() + 1);
  };
  NcMonomial s;
  for (Value t : u.thetas) s.thetas.push_back(rank(t));
  for (Value x : u.word) s.word.push_back(rank(x));
  BlockSequence blocks;
  for (Value r = 1; r <= labels.size(); ++r) {
    std::vector<Value> elems;
    if (std::binary_search(s.thetas.begin(), s.thetas.end(), r)) elems.push_back(0);
    for (std::size_t t = 0; t < s.word.size(); ++t) {
      if (s.word[t] == r) elems.push_back(static_cast<Value>(t + 1));
    }
    blocks.emplace_back(std::move(elems));
  }
  return {std::move(s), SetSupercomposition::trusted(std::move(blocks))};
}

NcMonomial qs_action(const std::vector<Value>& gens, const NcMonomial& u, std::size_t N) {
  return act(gens, u, N);
}
CMonomial qs_action(const std::vector<Value>& gens, const CMonomial& u, std::size_t N) {
  return act(gens, u, N);
}
NcPoly qs_action(const std::vector<Value>& gens, const NcPoly& f) { return act_poly(gens, f); }
CPoly qs_action(const std::vector<Value>& gens, const CPoly& f) { return act_poly(gens, f); }

bool check_invariance(const NcPoly& f, std::size_t max_gen) { return invariant(f, max_gen); }
bool check_invariance(const CPoly& f, std::size_t max_gen) { return invariant(f, max_gen); }

NcMonomial monomial_AI(const std::vector<Value>& A, const SetSupercomposition& I) {
  if (A.size() != I.length()) throw std::invalid_argument("monomial_AI: |A| must equal the number of blocks");
  if (!std::is_sorted(A.begin(), A.end()) || std::adjacent_find(A.begin(), A.end()) != A.end()) {
    throw std::invalid_argument("monomial_AI: A must be strictly increasing");
  }
  NcMonomial u;
  u.word.assign(I.bidegree().n, 0);
  for (std::size_t r = 0; r < I.length(); ++r) {
    if (I[r].fermionic()) u.thetas.push_back(A[r]);
    for (Value t : I[r].nonzero()) u.word[t - 1] = A[r];
  }
  return u;
}

CMonomial monomial_Aalpha(const std::vector<Value>& A, const DottedComposition& alpha) {
  if (A.size() != alpha.length()) {
    throw std::invalid_argument("monomial_Aalpha: |A| must equal the number of parts");
  }
  CMonomial u;
  if (!A.empty()) u.exponents.assign(A.back(), 0);
  for (std::size_t r = 0; r < A.size(); ++r) {
    if (alpha[r].dotted) u.thetas.push_back(A[r]);
    u.exponents[A[r] - 1] = alpha[r].value;
  }
  while (!u.exponents.empty() && u.exponents.back() == 0) u.exponents.pop_back();
  return u;
}

std::vector<Value> permute_set(const std::vector<Value>& gens, const std::vector<Value>& A) {
  std::vector<Value> out(A);
  for (auto& a : out) {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) a = swap_label(a, *it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superhopf
