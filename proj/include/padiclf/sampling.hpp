#pragma once

#include <cstdint>
#include <random>

#include "padiclf/cyclo.hpp"
#include "padiclf/padic.hpp"
#include "padiclf/zeta.hpp"

namespace padiclf {

// sum of `terms` random multiples of zeta_order^k with small rational coefficients
CycNum random_cyc(std::mt19937_64& rng, std::uint64_t order, int terms = 3, int range = 5);
// u p^v with v in [vlo, vhi] and u a unit below p^3
PadicNum random_padic(std::mt19937_64& rng, std::uint32_t p, int vlo, int vhi);
// combination of (possibly modulated) coset indicators supported in P^-1, levels at most 2
SchwartzFn random_schwartz(std::mt19937_64& rng, std::uint32_t p, int terms = 3, bool modulated = true);
// combination of unit coset indicators a(1 + P^r), r in {1, 2}
SchwartzFn random_unit_cosets(std::mt19937_64& rng, std::uint32_t p, int terms = 2);

}  // namespace padiclf
