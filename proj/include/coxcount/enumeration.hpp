#ifndef COXCOUNT_ENUMERATION_HPP
#define COXCOUNT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "coxcount/cox_model.hpp"

namespace coxcount {

enum class CountMethod { fast = 0, oracle = 1 };

const char* method_name(CountMethod m);

struct CountResult {
  DivisorTag divisor = DivisorTag::D1;
  std::int64_t bound = 0;
  std::int64_t count = 0;  // final N_i(B), after the sign-symmetry halving
  CountMethod method = CountMethod::fast;
  double elapsed_seconds = 0.0;
};

// Safety cap for the exact-arithmetic path of the fast counters. Every height
// monomial that the loops touch stays within int64 under this bound.
inline constexpr std::int64_t kMaxEnumerationBound = 1000000000;

// Brute-force verification is kept to small boxes by design.
inline constexpr std::int64_t kMaxOracleBound = 500;

struct CountOptions {
  int shards = 1;  // outer loop is split round-robin over this many threads
};

// N_1(B): half the number of integer tuples (a,x,y,z), a,x,z != 0,
// gcd(x,y) = 1, with the height of (a, 1, yz - a^2, x, y, z) at most B.
// Enumerates x, z, a and walks c = yz - a^2 through its admissible residue
// class mod z; the counted set is exactly the defining one.
CountResult count_n1(std::int64_t bound, const CountOptions& opts = {});

// N_2(B): half the number of integer tuples (b,c,x,y,z), b,c,x,z != 0,
// 1 + bc = yz, gcd(x,y) = 1, height of (1,b,c,x,y,z) at most B. Enumerates
// (b,c), factors m = 1 + bc over divisors by trial division, and counts the
// admissible x per factorization; bc = -1 contributes the y = 0 family.
CountResult count_n2(std::int64_t bound, const CountOptions& opts = {});

CountResult count_points(DivisorTag d, std::int64_t bound, const CountOptions& opts = {});

// Independent brute-force count over the full coordinate box [-B, B]^6,
// filtered through the cox_model predicates and the height. Returns the raw
// box count divided by 4 (the two sign involutions), which is N_i(B).
CountResult oracle_count(DivisorTag d, std::int64_t bound);

// One box scan at max_bound, bucketed by height: entry [B] is the oracle
// count at bound B for every 0 <= B <= max_bound. Valid points of height
// <= B have all coordinates in [-B, B], so the per-B values coincide with
// individual oracle runs.
std::vector<std::int64_t> oracle_counts_upto(DivisorTag d, std::int64_t max_bound);

// One fast CountResult per bound; bounds must be strictly increasing.
std::vector<CountResult> count_grid(DivisorTag d, const std::vector<std::int64_t>& bounds,
                                    const CountOptions& opts = {});

// Visits every tuple of the counted set (both sign classes) as a Cox point
// with b = 1 (D1) resp. a = 1 (D2). Intended for property checks at small
// bounds; visiting order is unspecified.
void for_each_counted_point(DivisorTag d, std::int64_t bound,
                            const std::function<void(const CoxPoint&)>& visit);

}  // namespace coxcount

#endif
