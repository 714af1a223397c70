#pragma once

#include <cassert>
#include <utility>
#include <vector>

namespace qg::poly {

// Subresultant PRS resultant over an integral domain. Ops must provide:
//   Elem zero(), Elem one(), bool is_zero(e),
//   Elem add(a,b), Elem sub(a,b), Elem neg(a), Elem mul(a,b),
//   Elem exact_div(a,b)  (pre: b | a).
// Polynomials are coefficient vectors, lowest degree first; trailing zeros
// allowed on input. Returns res(f,g); res of two nonzero constants is one().
template <class Ops>
typename Ops::Elem subresultant_resultant(const Ops& R, std::vector<typename Ops::Elem> f,
                                          std::vector<typename Ops::Elem> g) {
  using Poly = std::vector<typename Ops::Elem>;
  auto trim = [&](Poly& p) {
    while (!p.empty() && R.is_zero(p.back())) p.pop_back();
  };
  auto deg = [](const Poly& p) { return static_cast<long>(p.size()) - 1; };
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return R.zero();

  bool negate = false;
  if (deg(f) < deg(g)) {
    if ((deg(f) * deg(g)) % 2 == 1) negate = !negate;
    std::swap(f, g);
  }
  if (deg(g) == 0) {
    // res(f, c) = c^{deg f}
    typename Ops::Elem acc = R.one();
    for (long i = 0; i < deg(f); ++i) acc = R.mul(acc, g[0]);
    return acc;
  }

  auto pow_elem = [&](const typename Ops::Elem& e, long k) {
    typename Ops::Elem acc = R.one();
    for (long i = 0; i < k; ++i) acc = R.mul(acc, e);
    return acc;
  };

  // Pseudo-remainder lc(g)^{delta+1} f mod g without any division.
  auto prem = [&](const Poly& a, const Poly& b) {
    Poly rem = a;
    const typename Ops::Elem& d = b.back();
    long scale_left = deg(a) - deg(b) + 1;
    while (true) {
      trim(rem);
      if (deg(rem) < deg(b)) break;
      typename Ops::Elem lead = rem.back();
      long shift = deg(rem) - deg(b);
      for (auto& c : rem) c = R.mul(c, d);
      for (size_t i = 0; i < b.size(); ++i) {
        size_t idx = static_cast<size_t>(shift) + i;
        rem[idx] = R.sub(rem[idx], R.mul(lead, b[i]));
      }
      --scale_left;
    }
    assert(scale_left >= 0);
    if (scale_left > 0) {
      typename Ops::Elem m = pow_elem(d, scale_left);
      for (auto& c : rem) c = R.mul(c, m);
    }
    return rem;
  };

  typename Ops::Elem gg = R.one(), h = R.one();
  while (true) {
    long df = deg(f), dg = deg(g);
    long delta = df - dg;
    if (df % 2 == 1 && dg % 2 == 1) negate = !negate;
    Poly rem = prem(f, g);
    trim(rem);
    if (rem.empty()) return R.zero();  // common factor (dg >= 1 inside the loop)
    typename Ops::Elem divisor = R.mul(gg, pow_elem(h, delta));
    f = std::move(g);
    g = std::move(rem);
    for (auto& c : g) c = R.exact_div(c, divisor);
    trim(g);
    gg = f.back();
    if (delta > 0) h = R.exact_div(pow_elem(gg, delta), pow_elem(h, delta - 1));
    if (deg(g) == 0) {
      long da = deg(f);
      typename Ops::Elem num = pow_elem(g[0], da);
      typename Ops::Elem res = R.exact_div(num, pow_elem(h, da - 1));
      return negate ? R.neg(res) : res;
    }
  }
}

}  // namespace qg::poly
