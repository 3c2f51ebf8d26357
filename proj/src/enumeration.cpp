#include "coxcount/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace coxcount {

const char* method_name(CountMethod m) {
  return m == CountMethod::fast ? "fast" : "oracle";
}

namespace {

void validate_bound(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("count: bound must be >= 1");
  if (bound > kMaxEnumerationBound)
    throw std::invalid_argument("count: bound exceeds the exact-arithmetic safety cap");
}

void validate_shards(int shards) {
  if (shards < 1 || shards > 1024)
    throw std::invalid_argument("count: shard count must be in [1, 1024]");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- D1 ----------------------------------------------------------------
//
// Counted set: (a,x,y,z) with a,x,z != 0, gcd(x,y) = 1 and all seven height
// monomials of (a, 1, yz - a^2, x, y, z) at most B. The set is invariant
// under a -> -a, under x -> -x and under (y,z) -> (-y,-z), none of which has
// fixed points here, so it suffices to enumerate a, x, z >= 1 with weight 8.
// N_1(B) is half the set size, i.e. 4 hits per positive representative.
//
// For fixed (x, z, a) the remaining conditions say c = yz - a^2 lies in
// |c| <= sqrt(B/x) and c == -a^2 (mod z); y = (c + a^2)/z is then checked
// against |y| <= B, |ay| <= B, |cy| <= B and gcd(x,y) = 1.

template <typename Sink>
void scan_n1_positive(std::int64_t B, std::int64_t x, Sink&& sink) {
  const std::int64_t x3 = x * x * x;
  if (x3 > B) return;
  const std::int64_t zmax = isqrt64(B / x3);
  const std::int64_t cmax = isqrt64(B / x);
  for (std::int64_t z = 1; z <= zmax; ++z) {
    for (std::int64_t a = 1; a <= cmax; ++a) {
      const std::int64_t a2 = a * a;
      const std::int64_t residue = (z - a2 % z) % z;  // c mod z
      std::int64_t c = -cmax + (residue + cmax) % z;
      for (; c <= cmax; c += z) {
        const std::int64_t y = (c + a2) / z;
        const std::int64_t ya = y < 0 ? -y : y;
        if (ya > B) continue;
        if (a * ya > B) continue;
        const std::int64_t ca = c < 0 ? -c : c;
        if (ca * ya > B) continue;
        if (gcd64(x, y) != 1) continue;
        sink(a, x, y, z);
      }
    }
  }
}

std::int64_t count_n1_shard(std::int64_t B, int shards, int shard) {
  std::int64_t hits = 0;
  const std::int64_t xmax = icbrt64(B);
  for (std::int64_t x = 1 + shard; x <= xmax; x += shards)
    scan_n1_positive(B, x, [&hits](std::int64_t, std::int64_t, std::int64_t, std::int64_t) {
      ++hits;
    });
  return hits;
}

// ---- D2 ----------------------------------------------------------------
//
// Counted set: (b,c,x,y,z) with b,c,x,z != 0, 1 + bc = yz, gcd(x,y) = 1 and
// the height of (1,b,c,x,y,z) at most B. Invariant under (b,c) -> (-b,-c)
// and x -> -x, so enumerate b >= 1, x >= 1 with weight 4; N_2(B) picks up
// 2 per representative. For m = 1 + bc != 0, z runs over the divisors of m
// (trial division up to sqrt|m|; |m| <= B + 1); bc = -1 gives the y = 0
// family with x = +-1 and z^2 <= B.

template <typename Sink>
void scan_n2_for_b(std::int64_t B, std::int64_t b, Sink&& sink) {
  const std::int64_t sqrtB = isqrt64(B);
  const std::int64_t b2 = b * b;

  auto try_factor = [&](std::int64_t c, std::int64_t m, std::int64_t z) {
    if (z == 0) return;
    const std::int64_t za = z < 0 ? -z : z;
    if (za > sqrtB) return;  // z^2 x^3 <= B with |x| >= 1
    const std::int64_t y = m / z;
    const std::int64_t ya = y < 0 ? -y : y;
    if (ya > B) return;
    if (b * ya > B) return;
    const std::int64_t ca = c < 0 ? -c : c;
    if (ca * ya > B) return;
    std::int64_t xmax = std::min(B / b2, B / (ca * ca));
    xmax = std::min(xmax, icbrt64(B / (z * z)));
    for (std::int64_t x = 1; x <= xmax; ++x)
      if (gcd64(x, y) == 1) sink(b, c, x, y, z);
  };

  const std::int64_t cmax = isqrt64(B);
  for (std::int64_t c = -cmax; c <= cmax; ++c) {
    if (c == 0) continue;
    const std::int64_t m = 1 + b * c;
    if (m == 0) {
      // y = 0 forces |x| = 1 via gcd(x,0) = 1; z is free up to z^2 <= B
      for (std::int64_t z = 1; z <= sqrtB; ++z) {
        sink(b, c, std::int64_t{1}, std::int64_t{0}, z);
        sink(b, c, std::int64_t{1}, std::int64_t{0}, -z);
      }
      continue;
    }
    const std::int64_t ma = m < 0 ? -m : m;
    for (std::int64_t div = 1; div * div <= ma; ++div) {
      if (ma % div != 0) continue;
      const std::int64_t other = ma / div;
      try_factor(c, m, div);
      try_factor(c, m, -div);
      if (other != div) {
        try_factor(c, m, other);
        try_factor(c, m, -other);
      }
    }
  }
}

std::int64_t count_n2_shard(std::int64_t B, int shards, int shard) {
  std::int64_t hits = 0;
  const std::int64_t bmax = isqrt64(B);
  for (std::int64_t b = 1 + shard; b <= bmax; b += shards)
    scan_n2_for_b(B, b,
                  [&hits](std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                          std::int64_t) { ++hits; });
  return hits;
}

std::int64_t run_sharded(int shards, const std::function<std::int64_t(int)>& worker) {
  if (shards == 1) return worker(0);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(shards), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(shards));
  for (int s = 0; s < shards; ++s)
    pool.emplace_back([&partial, &worker, s] { partial[static_cast<std::size_t>(s)] = worker(s); });
  for (std::thread& t : pool) t.join();
  std::int64_t total = 0;
  for (std::int64_t v : partial) total += v;  // exact integer sum, order-free
  return total;
}

}  // namespace

CountResult count_n1(std::int64_t bound, const CountOptions& opts) {
  validate_bound(bound);
  validate_shards(opts.shards);
  auto t0 = std::chrono::steady_clock::now();
  std::int64_t hits = run_sharded(
      opts.shards, [bound, &opts](int s) { return count_n1_shard(bound, opts.shards, s); });
  return CountResult{DivisorTag::D1, bound, 4 * hits, CountMethod::fast, seconds_since(t0)};
}

CountResult count_n2(std::int64_t bound, const CountOptions& opts) {
  validate_bound(bound);
  validate_shards(opts.shards);
  auto t0 = std::chrono::steady_clock::now();
  std::int64_t hits = run_sharded(
      opts.shards, [bound, &opts](int s) { return count_n2_shard(bound, opts.shards, s); });
  return CountResult{DivisorTag::D2, bound, 2 * hits, CountMethod::fast, seconds_since(t0)};
}

CountResult count_points(DivisorTag d, std::int64_t bound, const CountOptions& opts) {
  return d == DivisorTag::D1 ? count_n1(bound, opts) : count_n2(bound, opts);
}

std::vector<CountResult> count_grid(DivisorTag d, const std::vector<std::int64_t>& bounds,
                                    const CountOptions& opts) {
  for (std::size_t i = 1; i < bounds.size(); ++i)
    if (bounds[i] <= bounds[i - 1])
      throw std::invalid_argument("count_grid: bounds must be strictly increasing");
  std::vector<CountResult> out;
  out.reserve(bounds.size());
  for (std::int64_t b : bounds) out.push_back(count_points(d, b, opts));
  return out;
}

void for_each_counted_point(DivisorTag d, std::int64_t bound,
                            const std::function<void(const CoxPoint&)>& visit) {
  validate_bound(bound);
  if (d == DivisorTag::D1) {
    const std::int64_t xmax = icbrt64(bound);
    for (std::int64_t x = 1; x <= xmax; ++x)
      scan_n1_positive(bound, x,
                       [&visit](std::int64_t a, std::int64_t xx, std::int64_t y, std::int64_t z) {
                         const std::int64_t c = y * z - a * a;
                         for (int sa : {1, -1})
                           for (int sx : {1, -1})
                             for (int syz : {1, -1})
                               visit(CoxPoint{sa * a, 1, c, sx * xx, syz * y, syz * z});
                       });
  } else {
    const std::int64_t bmax = isqrt64(bound);
    for (std::int64_t b = 1; b <= bmax; ++b)
      scan_n2_for_b(bound, b,
                    [&visit](std::int64_t bb, std::int64_t c, std::int64_t x, std::int64_t y,
                             std::int64_t z) {
                      for (int sbc : {1, -1})
                        for (int sx : {1, -1})
                          visit(CoxPoint{1, sbc * bb, sbc * c, sx * x, y, z});
                    });
  }
}

// ---- oracle -------------------------------------------------------------

namespace {

// Visits every 6-tuple in the [-B, B] box passing the divisor restriction,
// the open-subvariety condition and height <= B. The loop solves the quadric
// for z given the other coordinates and prunes x ranges that provably
// violate a height monomial; the authoritative filter is still the
// cox_model predicate set applied to each candidate.
template <typename Fn>
void oracle_scan(DivisorTag d, std::int64_t B, Fn&& emit) {
  if (B <= 0) return;

  auto try_x = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t y,
                   std::int64_t z) {
    std::int64_t xcap = B;
    if (a != 0) xcap = std::min(xcap, B / (a * a));
    if (b != 0) xcap = std::min(xcap, B / (b * b));
    if (c != 0) xcap = std::min(xcap, B / (c * c));
    if (z * z > B) return;
    xcap = std::min(xcap, icbrt64(B / (z * z)));
    for (std::int64_t xm = 1; xm <= xcap; ++xm) {
      if (gcd64(xm, y) != 1) continue;
      for (std::int64_t x : {xm, -xm}) {
        CoxPoint p{a, b, c, x, y, z};
        if (!satisfies_divisor_restriction(p, d)) continue;
        if (!in_open_subvariety(p, d)) continue;
        if (height(p) > static_cast<int128>(B)) continue;
        emit(p);
      }
    }
  };

  for (std::int64_t unit : {std::int64_t{1}, std::int64_t{-1}}) {
    for (std::int64_t u = -B; u <= B; ++u) {
      if (u == 0) continue;  // a = 0 (D1) resp. b = 0 (D2) is outside the open set
      for (std::int64_t v = -B; v <= B; ++v) {
        if (d == DivisorTag::D2 && v == 0) continue;
        const std::int64_t m =
            d == DivisorTag::D1 ? u * u + unit * v : std::int64_t{1} + u * v;
        for (std::int64_t y = -B; y <= B; ++y) {
          std::int64_t a = d == DivisorTag::D1 ? u : unit;
          std::int64_t b = d == DivisorTag::D1 ? unit : u;
          if (y == 0) {
            if (m != 0) continue;
            for (std::int64_t z = -B; z <= B; ++z) {
              if (z == 0) continue;
              try_x(a, b, v, y, z);
            }
          } else {
            if (m % y != 0) continue;
            const std::int64_t z = m / y;
            if (z == 0 || z > B || z < -B) continue;
            try_x(a, b, v, y, z);
          }
        }
      }
    }
  }
}

}  // namespace

CountResult oracle_count(DivisorTag d, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("oracle_count: bound must be >= 0");
  if (bound > kMaxOracleBound)
    throw std::invalid_argument("oracle_count: bound exceeds the brute-force guard");
  auto t0 = std::chrono::steady_clock::now();
  std::int64_t raw = 0;
  oracle_scan(d, bound, [&raw](const CoxPoint&) { ++raw; });
  if (raw % 4 != 0) throw std::overflow_error("oracle_count: raw count not divisible by 4");
  return CountResult{d, bound, raw / 4, CountMethod::oracle, seconds_since(t0)};
}

std::vector<std::int64_t> oracle_counts_upto(DivisorTag d, std::int64_t max_bound) {
  if (max_bound < 0 || max_bound > kMaxOracleBound)
    throw std::invalid_argument("oracle_counts_upto: bound outside [0, guard]");
  std::vector<std::int64_t> hist(static_cast<std::size_t>(max_bound) + 1, 0);
  oracle_scan(d, max_bound, [&hist](const CoxPoint& p) {
    ++hist[static_cast<std::size_t>(static_cast<std::int64_t>(height(p)))];
  });
  std::vector<std::int64_t> counts(hist.size(), 0);
  std::int64_t cum = 0;
  for (std::size_t b = 0; b < hist.size(); ++b) {
    cum += hist[b];
    if (cum % 4 != 0)
      throw std::overflow_error("oracle_counts_upto: cumulative count not divisible by 4");
    counts[b] = cum / 4;
  }
  return counts;
}

}  // namespace coxcount
