#pragma once

// Integer sequences describing how many full clauses an unsatisfiable
// hitting clause-set of a given deficiency can carry: the 2-adic valuation
// ord2 and the ruler sequence, the staircase sequence s2 (least n such that
// 2^k divides n!), the meta-Fibonacci companion a2, the course-of-values
// recursion s2_prime with its index/slack bookkeeping, and the non-Mersenne
// upper-bound sequences.  All routes are kept independent so they can be
// cross-checked against each other.

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Largest k supported by the 64-bit arithmetic here.  Every sequence value
// below is bounded by k + 1 + floor(log2 k), so overflow cannot occur in
// this range; engines reject anything bigger instead of silently wrapping.
inline constexpr u64 kMaxSequenceIndex = u64{1} << 60;

inline void require_index(u64 k) {
  if (k > kMaxSequenceIndex)
    throw std::invalid_argument("sequence index exceeds supported range");
}

// 2-adic valuation: largest e with 2^e | n.  Undefined at 0.
inline u64 ord2(u64 n) {
  if (n == 0) throw std::invalid_argument("ord2: argument must be positive");
  return static_cast<u64>(std::countr_zero(n));
}

// ruler(n) = ord2(2n), n >= 1: 1,2,1,3,1,2,1,4,...
inline u64 ruler(u64 n) {
  if (n == 0) throw std::invalid_argument("ruler: argument must be positive");
  return ord2(n) + 1;
}

// floor(log2 n) via bit length; exact for all u64, no floating point.
inline u64 floor_log2(u64 n) {
  if (n == 0) throw std::invalid_argument("floor_log2: argument must be positive");
  return static_cast<u64>(std::bit_width(n)) - 1;
}

// --- s2: least n such that 2^k divides n! ----------------------------------
//
// ord2(n!) = sum_{i<=n} ord2(i), so s2(k) is the first n whose cumulative
// ord2 sum reaches k.  The table extends on demand and shares the running
// (n, sum) cursor across queries, making a prefix fill O(k) total.

class S2Table {
 public:
  u64 at(u64 k) {
    extend_to(k);
    return vals_[k];
  }

  void extend_to(u64 k) {
    require_index(k);
    while (vals_.size() <= k) {
      const u64 target = vals_.size();
      while (sum_ < target) {
        ++n_;
        sum_ += ord2(n_);
      }
      // sum over 1..n_ first reached `target` here (or earlier for plateau
      // steps, where the same n_ serves several consecutive k).
      vals_.push_back(n_);
    }
  }

  u64 size() const { return vals_.size(); }

 private:
  std::vector<u64> vals_{0};  // s2(0) = 0
  u64 n_ = 0;                 // last factorial index consumed
  u64 sum_ = 0;               // ord2(n_!)
};

// --- a2: meta-Fibonacci companion, a2(k) = s2(k)/2 -------------------------
//
// a2(0)=0, a2(1)=1, a2(k) = a2(k - a2(k-1)) + a2(k-1 - a2(k-2)).

class A2Table {
 public:
  u64 at(u64 k) {
    extend_to(k);
    return vals_[k];
  }

  void extend_to(u64 k) {
    require_index(k);
    while (vals_.size() <= k) {
      const u64 j = vals_.size();
      const u64 left = vals_[j - vals_[j - 1]];
      const u64 right = vals_[j - 1 - vals_[j - 2]];
      vals_.push_back(left + right);
    }
  }

 private:
  std::vector<u64> vals_{0, 1};
};

// Closed-form descent for a2: with p = floor(log2(k+1)),
// a2(k) = 2^(p-1) + a2(k + 1 - 2^p).  Iterating strips one power of two
// per round, so the whole evaluation is O(log k) and table-free.
inline u64 a2_fast(u64 k) {
  require_index(k);
  u64 acc = 0;
  while (k > 0) {
    const u64 p = floor_log2(k + 1);
    acc += u64{1} << (p - 1);
    k = k + 1 - (u64{1} << p);
  }
  return acc;
}

// --- s2_prime: course-of-values recursion ----------------------------------
//
// s2_prime(0)=0, s2_prime(1)=2, and for k >= 2
//   s2_prime(k) = 2(k - i + 1) for the least i in 1..k-1 with
//                 k - i + 1 <= s2_prime(i).
// The least such i is the index i(k); since i(k) is nondecreasing in k the
// scan cursor never moves backwards and a prefix fill is O(k) total.

class S2PrimeTable {
 public:
  u64 at(u64 k) {
    extend_to(k);
    return vals_[k];
  }

  // Index i(k): least i with i + s2_prime(i) >= k + 1; equivalently
  // k + 1 - s2_prime(k)/2 once s2_prime(k) is known.
  u64 index_at(u64 k) {
    extend_to(k);
    return idx_[k];
  }

  void extend_to(u64 k) {
    require_index(k);
    while (vals_.size() <= k) {
      const u64 j = vals_.size();
      u64 i = idx_.back();
      while (i + vals_[i] < j + 1) ++i;
      if (i >= j) throw std::logic_error("s2_prime: recursion ran off its own prefix");
      idx_.push_back(i);
      vals_.push_back(2 * (j - i + 1));
      // The closed form for the index must agree with the minimal-scan
      // definition; they are kept as two separate computations on purpose.
      assert(idx_[j] == j + 1 - vals_[j] / 2);
      assert(idx_[j] + vals_[idx_[j]] >= j + 1);
      assert(idx_[j] == 1 || (idx_[j] - 1) + vals_[idx_[j] - 1] < j + 1);
    }
  }

 private:
  std::vector<u64> vals_{0, 2};
  std::vector<u64> idx_{1, 1};  // i(0) = i(1) = 1
};

namespace detail {
inline S2Table& s2_table() {
  static S2Table t;
  return t;
}
inline A2Table& a2_table() {
  static A2Table t;
  return t;
}
inline S2PrimeTable& s2_prime_table() {
  static S2PrimeTable t;
  return t;
}
}  // namespace detail

// Shared memoised engines.  Not safe for concurrent extension; every tool
// and test here is single-threaded.
inline u64 s2_direct(u64 k) { return detail::s2_table().at(k); }
inline u64 a2(u64 k) { return detail::a2_table().at(k); }
inline u64 s2_prime(u64 k) { return detail::s2_prime_table().at(k); }

// index i(k), defined for k >= 0 (i(0) = i(1) = 1).
inline u64 index_i(u64 k) { return detail::s2_prime_table().index_at(k); }

// slack sigma(k) = (i(k) + s2_prime(i(k))) - (k + 1); always in {0,1,2}.
inline u64 slack(u64 k) {
  auto& t = detail::s2_prime_table();
  const u64 i = t.index_at(k);
  const u64 reach = i + t.at(i);
  if (reach < k + 1) throw std::logic_error("slack: index fails its defining inequality");
  return reach - (k + 1);
}

// Non-Mersenne upper bound nM(k) = k + floor(log2(k + 1 + floor(log2(k+1)))).
inline u64 non_mersenne(u64 k) {
  if (k == 0) throw std::invalid_argument("non_mersenne: defined for k >= 1");
  require_index(k);
  return k + floor_log2(k + 1 + floor_log2(k + 1));
}

// Refinement nM1: equals nM except at k = 2^n - n + 1 (n >= 3), where it
// dips to 2^n.
inline u64 non_mersenne1(u64 k) {
  if (k == 0) throw std::invalid_argument("non_mersenne1: defined for k >= 1");
  require_index(k);
  for (u64 n = 3;; ++n) {
    const u64 pow = u64{1} << n;
    const u64 dip = pow - n + 1;
    if (dip == k) return pow;
    if (dip > k) return non_mersenne(k);
  }
}

// --- named prefix tables and the difference/plateau calculus ---------------

struct SequenceTable {
  std::string name;
  std::vector<u64> values;  // values[k] for k = 0 .. upto
};

inline SequenceTable make_table(const std::string& name, u64 upto, u64 (*f)(u64)) {
  SequenceTable t{name, {}};
  t.values.reserve(upto + 1);
  for (u64 k = 0; k <= upto; ++k) t.values.push_back(f(k));
  return t;
}

inline SequenceTable s2_table_to(u64 upto) { return make_table("s2", upto, &s2_direct); }
inline SequenceTable a2_table_to(u64 upto) { return make_table("a2", upto, &a2); }
inline SequenceTable s2_prime_table_to(u64 upto) {
  return make_table("s2_prime", upto, &s2_prime);
}

// Successive differences; requires at least two values.
inline std::vector<i64> delta_profile(const SequenceTable& t) {
  if (t.values.size() < 2)
    throw std::invalid_argument("delta_profile: need at least two values");
  std::vector<i64> d;
  d.reserve(t.values.size() - 1);
  for (std::size_t j = 0; j + 1 < t.values.size(); ++j)
    d.push_back(static_cast<i64>(t.values[j + 1]) - static_cast<i64>(t.values[j]));
  return d;
}

struct PlateauProfile {
  i64 first_value = 0;              // value of the first plateau (at index 1)
  std::vector<u64> plateau_sizes;   // closed runs of equal values, from k = 1
};

// Run lengths of constant stretches, starting at index 1 (index 0 is the
// irregular seed of these sequences).  The final run is still open on a
// finite prefix and is dropped; a table with no completed run is an error.
inline PlateauProfile plateau_profile(const SequenceTable& t) {
  if (t.values.size() < 3)
    throw std::invalid_argument("plateau_profile: need values beyond index 1");
  PlateauProfile p;
  p.first_value = static_cast<i64>(t.values[1]);
  u64 run = 1;
  for (std::size_t j = 2; j < t.values.size(); ++j) {
    if (t.values[j] == t.values[j - 1]) {
      ++run;
    } else {
      p.plateau_sizes.push_back(run);
      run = 1;
    }
  }
  if (p.plateau_sizes.empty())
    throw std::invalid_argument("plateau_profile: no completed plateau in range");
  return p;
}

// Rebuild a table from plateau sizes under a constant step d between
// plateaus.  Index 0 repeats the first value as padding, and one sentinel
// value is appended after the last closed plateau so that plateau_profile
// of the result returns exactly `sizes` (the sentinel opens the run that
// plateau_profile drops).
inline SequenceTable reconstruct_d_delta(i64 first_value, i64 d,
                                         const std::vector<u64>& sizes,
                                         const std::string& name = "reconstructed") {
  if (sizes.empty())
    throw std::invalid_argument("reconstruct_d_delta: need at least one plateau");
  SequenceTable t{name, {}};
  i64 value = first_value;
  t.values.push_back(static_cast<u64>(first_value));  // index 0 padding
  for (u64 s : sizes) {
    if (s == 0) throw std::invalid_argument("reconstruct_d_delta: zero plateau size");
    for (u64 r = 0; r < s; ++r) t.values.push_back(static_cast<u64>(value));
    value += d;
  }
  t.values.push_back(static_cast<u64>(value));  // sentinel, opens the final run
  return t;
}

// --- law checker ------------------------------------------------------------
//
// Verifies the identities tying the routes together on a prefix and returns
// human-readable findings (empty means everything holds):
//   * s2 = 2 a2 and the two-sided bounds k+1 <= s2(k) <= nM(k), checked to
//     k_fast;
//   * s2_prime = s2, the nested recursion
//     s2_prime(k) = s2_prime(i(k-1)) + s2_prime(i(k-2)), and the
//     slack/index laws, checked to k_course;
//   * the plateau windows s2(k) = 2^n exactly for 2^n - n <= k <= 2^n - 1.
// Slack outside {0,1,2} is reported as a finding rather than thrown: it
// would falsify the theory this library rests on, not the caller's input.

inline std::vector<std::string> check_sequence_laws(u64 k_fast, u64 k_course) {
  std::vector<std::string> findings;
  auto fail = [&findings](const std::string& msg) { findings.push_back(msg); };

  detail::s2_table().extend_to(k_fast + 1);
  detail::s2_prime_table().extend_to(k_course + 1);

  for (u64 k = 0; k <= k_fast; ++k) {
    const u64 s = s2_direct(k);
    if (s != 2 * a2_fast(k))
      fail("s2(" + std::to_string(k) + ") != 2*a2_fast(" + std::to_string(k) + ")");
    if (k >= 1) {
      const u64 nm = non_mersenne(k);
      if (!(k + 1 <= s && s <= nm && nm <= k + 1 + floor_log2(k)))
        fail("bound chain k+1 <= s2 <= nM <= k+1+log2(k) fails at k=" + std::to_string(k));
      if (non_mersenne1(k) > nm)
        fail("nM1 > nM at k=" + std::to_string(k));
      if (std::has_single_bit(nm + 1))
        fail("nM(" + std::to_string(k) + ") is a Mersenne number");
    }
  }

  // Exact plateau windows: s2(k) = 2^n iff 2^n - n <= k <= 2^n - 1.
  for (u64 n = 1; (u64{1} << n) - n <= k_fast; ++n) {
    const u64 pow = u64{1} << n;
    const u64 lo = pow - n;
    const u64 hi = pow - 1;
    for (u64 k = lo; k <= hi && k <= k_fast; ++k)
      if (s2_direct(k) != pow)
        fail("s2(" + std::to_string(k) + ") != 2^" + std::to_string(n) +
             " inside its plateau window");
    if (lo >= 1 && s2_direct(lo - 1) >= pow)
      fail("plateau window of 2^" + std::to_string(n) + " starts too early");
    if (hi + 1 <= k_fast && s2_direct(hi + 1) <= pow)
      fail("plateau window of 2^" + std::to_string(n) + " ends too late");
  }

  for (u64 k = 0; k <= k_course; ++k) {
    if (s2_prime(k) != s2_direct(k))
      fail("s2_prime(" + std::to_string(k) + ") != s2(" + std::to_string(k) + ")");
    if (k >= 2 && s2_prime(k) != s2_prime(index_i(k - 1)) + s2_prime(index_i(k - 2)))
      fail("nested recursion fails at k=" + std::to_string(k));

    const u64 sg = slack(k);
    if (sg > 2) fail("slack(" + std::to_string(k) + ") outside {0,1,2}");

    // Step laws linking slack, index and value increments.
    const u64 d_val = s2_prime(k + 1) - s2_prime(k);
    const u64 d_idx = index_i(k + 1) - index_i(k);
    if (d_val != 2 * std::min<u64>(sg, 1))
      fail("delta s2_prime law fails at k=" + std::to_string(k));
    const u64 sg_next = slack(k + 1);
    if (sg > 0 && sg_next != sg - 1)
      fail("slack must count down at k=" + std::to_string(k));
    if (sg == 0 && !(sg_next == 0 || sg_next == 2))
      fail("slack restart law fails at k=" + std::to_string(k));
    const bool idx_steps = (d_idx == 1);
    const bool val_flat = (d_val == 0);
    const bool slack_zero = (sg == 0);
    if (idx_steps != slack_zero || val_flat != slack_zero)
      fail("index/value/slack equivalence fails at k=" + std::to_string(k));
  }

  return findings;
}

}  // namespace fc
