#include "padiclf/sampling.hpp"

#include <utility>
#include <vector>

namespace padiclf {

CycNum random_cyc(std::mt19937_64& rng, std::uint64_t order, int terms, int range) {
  std::uniform_int_distribution<std::int64_t> k(0, static_cast<std::int64_t>(order) - 1);
  std::uniform_int_distribution<long> c(-range, range);
  std::uniform_int_distribution<long> d(1, 4);
  std::vector<std::pair<std::int64_t, Rational>> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(k(rng), Rational(c(rng), d(rng)));
  return CycNum::from_terms(order, t);
}

PadicNum random_padic(std::mt19937_64& rng, std::uint32_t p, int vlo, int vhi) {
  std::uniform_int_distribution<int> v(vlo, vhi);
  std::uint64_t u;
  do u = 1 + rng() % (p * p * p - 1);
  while (u % p == 0);
  return PadicNum::make(p, v(rng), u);
}

SchwartzFn random_schwartz(std::mt19937_64& rng, std::uint32_t p, int terms, bool modulated) {
  SchwartzFn f(p);
  for (int i = 0; i < terms; ++i) {
    SchwartzTerm t;
    t.coeff = random_cyc(rng, 4 * p, 2, 3);
    if (t.coeff.is_zero()) t.coeff = CycNum(1L);
    if (rng() % 3 == 0) {
      t.center = PadicNum::zero(p);
      t.level = static_cast<int>(rng() % 4) - 1;
    } else {
      t.center = random_padic(rng, p, -1, 1);
      t.level = t.center.valuation() + 1 + static_cast<int>(rng() % 2);
    }
    t.modulation = (modulated && rng() % 2 == 0) ? random_padic(rng, p, -1, 1) : PadicNum::zero(p);
    f.add_term(t);
  }
  return f;
}

SchwartzFn random_unit_cosets(std::mt19937_64& rng, std::uint32_t p, int terms) {
  SchwartzFn f(p);
  for (int i = 0; i < terms; ++i) {
    PadicNum a = random_padic(rng, p, -1, 1);
    int r = 1 + static_cast<int>(rng() % 2);
    f += SchwartzFn::indicator(p, a, a.valuation() + r, random_cyc(rng, 4, 2, 3) + CycNum(7L));
  }
  return f;
}

}  // namespace padiclf
