// Structure of the three orders: Boolean intervals, fibers and Moebius values.

#include <algorithm>
#include <set>

#include "superhopf/enumerate.hpp"
#include "superhopf/posets.hpp"
#include "verify_internal.hpp"

namespace superhopf::detail {

namespace {

long long sign_of(std::size_t k) { return k % 2 ? -1 : 1; }

template <class T>
bool is_boolean(const PosetInterval<T>& P, std::size_t rank) {
  return P.size() == (std::size_t{1} << rank) && P.covers.size() == rank * (P.size() / 2);
}

void dotted(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t size = 1; size <= o.max_size; ++size) {
    for (const auto& a : s.compositions(size)) {
      std::size_t rank = 0;
      for (const auto& p : a.parts()) {
        if (!p.dotted) rank += p.value - 1;
      }
      auto P = dotted_downset(a);
      r.record(is_boolean(P, rank), "downset of " + to_string(a) + " is not Boolean of rank " + std::to_string(rank));
      bool below = true;
      for (const auto& b : P.elements) below = below && dotted_leq(b, a);
      r.record(below, "downset of " + to_string(a) + " has an element not below it");
      const auto bottom = std::max_element(P.elements.begin(), P.elements.end(),
                                           [](const auto& x, const auto& y) { return x.length() < y.length(); });
      auto lo = static_cast<std::size_t>(bottom - P.elements.begin());
      auto mu = mobius_row(P, lo);
      bool ok = true;
      for (std::size_t x = 0; x < P.size(); ++x) ok = ok && mu[x] == sign_of(P.elements[x].length() + bottom->length());
      r.record(ok, "Moebius values of the downset of " + to_string(a));
    }
  }
}

// Merge upsets are Boolean; on superpermutations alpha is an order
// isomorphism from I-up onto gamma(I)-down.
void merge(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t size = 1; size <= o.max_size; ++size) {
    for (const auto& I : s.indices(Basis::Mnc, size)) {
      auto P = sc_upset(I);
      std::size_t rank = 0;
      for (std::size_t i = 0; i + 1 < I.length(); ++i) {
        const auto &x = I[i], &y = I[i + 1];
        rank += !x.fermionic() && !y.fermionic() && x.max_nonzero() < y.min_nonzero();
      }
      r.record(is_boolean(P, rank), "upset of " + to_string(I) + " is not Boolean");
      auto mu = mobius_row(P, P.index_of(I));
      bool mu_ok = true;
      for (std::size_t x = 0; x < P.size(); ++x) mu_ok = mu_ok && mu[x] == sign_of(I.length() + P.elements[x].length());
      r.record(mu_ok, "Moebius values of the upset of " + to_string(I));
      if (!is_superpermutation(I)) continue;

      std::set<DottedComposition> images;
      for (const auto& J : P.elements) images.insert(alpha_of(J));
      auto D = dotted_downset_elements(gamma_of(I));
      r.record(images == std::set<DottedComposition>(D.begin(), D.end()) && images.size() == P.size(),
               "alpha is not a bijection from the upset of " + to_string(I) + " onto the downset of gamma");
      bool iso = true;
      for (const auto& X : P.elements) {
        for (const auto& Y : P.elements) iso = iso && sc_leq(X, Y) == dotted_leq(alpha_of(X), alpha_of(Y));
      }
      r.record(iso, "alpha is not order preserving on the upset of " + to_string(I));
    }
  }
}

bool inv_subset(const std::vector<Value>& a, const std::vector<Value>& b) {
  auto x = inversions(a);
  auto y = inversions(b);
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

void weak(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t size = 1; size <= o.max_size; ++size) {
    std::map<DottedComposition, std::vector<SetSupercomposition>> fibers;
    for (const auto& I : s.indices(Basis::MonF, size)) fibers[alpha_of(I)].push_back(I);
    for (auto& [sigma, members] : fibers) {
      std::sort(members.begin(), members.end());
      auto fiber = alpha_fiber(members.front());
      std::sort(fiber.begin(), fiber.end());
      r.record(fiber == members, "alpha_fiber differs from filtering at " + to_string(sigma));
      auto [lo, hi] = fiber_bounds(sigma);
      auto P = weak_interval(lo, hi);
      auto elems = P.elements;
      std::sort(elems.begin(), elems.end());
      r.record(elems == members, "fiber is not the interval [I_min, J_max] at " + to_string(sigma));

      // w_of onto the classical weak interval of S_n.
      auto wl = w_of(lo), wh = w_of(hi);
      std::vector<Value> p(wl.size());
      std::iota(p.begin(), p.end(), Value{1});
      std::set<std::vector<Value>> classical, image;
      do {
        if (inv_subset(wl, p) && inv_subset(p, wh)) classical.insert(p);
      } while (std::next_permutation(p.begin(), p.end()));
      for (const auto& X : members) image.insert(w_of(X));
      r.record(classical == image && image.size() == members.size(),
               "w is not a bijection onto the classical interval at " + to_string(sigma));
      bool iso = true;
      for (const auto& X : members) {
        for (const auto& Y : members) iso = iso && weak_leq(X, Y) == inv_subset(w_of(X), w_of(Y));
      }
      r.record(iso, "w is not order preserving at " + to_string(sigma));

      auto mu = mobius_row(P, P.index_of(lo));
      bool mu_ok = true;
      for (std::size_t x = 0; x < P.size(); ++x) mu_ok = mu_ok && mu[x] == mobius_weak(lo, P.elements[x]);
      for (const auto& [J, m] : weak_mobius_row(lo)) mu_ok = mu_ok && m == mobius_weak(lo, J);
      r.record(mu_ok, "weak Moebius values disagree at " + to_string(sigma));
    }
  }
}

}  // namespace

SuiteReport posets_suite(const VerifyOptions& o) {
  SuiteReport r;
  Sampler s(o.seed);
  dotted(r, o, s);
  merge(r, o, s);
  weak(r, o, s);
  return r;
}

}  // namespace superhopf::detail
