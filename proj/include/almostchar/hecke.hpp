#pragma once

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "almostchar/half_laurent.hpp"
#include "almostchar/kind.hpp"
#include "almostchar/shapes.hpp"

namespace almostchar {

struct SignedCycle {
  int length;
  bool barred;
  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// Cycle lengths in order; barred cycles are negative cycles.
using SignedCycleType = std::vector<SignedCycle>;

/// From signed integers, negative meaning barred. Zero is rejected.
SignedCycleType cycles_from_signed(const std::vector<int>& signed_lengths);
std::vector<int> cycles_to_signed(const SignedCycleType& cycles);
int cycles_total(const SignedCycleType& cycles);

struct BrEntry {
  int magnitude;
  bool barred;
  friend bool operator==(const BrEntry&, const BrEntry&) = default;
};

/*
  Cumulative endpoint encoding (r_1, ..., r_k) of w_Br, |r_1| < ... < |r_k|.

  Kind D sequences have either no barred entry or exactly r_1 = -1 and r_2
  barred with everything after unbarred; only those give T_Br = T_{w_Br}.
*/
class BrSequence {
 public:
  BrSequence(Kind kind, std::vector<BrEntry> entries);

  /// r_i are the partial sums of the cycle lengths, barred where the cycle is.
  static BrSequence from_cycles(Kind kind, const SignedCycleType& cycles);
  SignedCycleType cycles() const;

  Kind kind() const { return kind_; }
  const std::vector<BrEntry>& entries() const { return entries_; }
  int n() const { return entries_.empty() ? 0 : entries_.back().magnitude; }
  /// Size of step i (0-based): |r_i| - |r_{i-1}|.
  int step_size(std::size_t i) const;

 private:
  Kind kind_;
  std::vector<BrEntry> entries_;
};

/// Number of letters other than s_0 (or s'_0) in the defining word of T_Br.
int l_prime(const BrSequence& br);

/*
  Memoized Murnaghan-Nakayama evaluation of Tr(T_{w_Br}, E_u^lambda).

  The memo maps (inner bipartition, consumed Br entries) to the chain sum
  from the empty bipartition, which does not depend on the outer lambda, so a
  single evaluator can be shared by every lambda of one sweep. Access is
  guarded by a shared mutex; concurrent writers store identical values.
*/
class TraceEvaluator {
 public:
  /// memo_budget = 0 means unlimited; otherwise exceeding it throws ResourceGuard.
  explicit TraceEvaluator(BrSequence br, std::size_t memo_budget = 0);

  /// Throws InvalidInput on a size mismatch, or for alpha == beta with kind D.
  HalfLaurent trace(const BiPartition& lambda);

  const BrSequence& br() const { return br_; }
  std::size_t memo_entries() const;

 private:
  struct Key {
    BiPartition inner;
    std::size_t steps;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return BiPartitionHash{}(k.inner) * 31 + k.steps;
    }
  };

  HalfLaurent chain_sum(const BiPartition& mu, std::size_t steps);

  BrSequence br_;
  std::size_t memo_budget_;
  HalfLaurent prefactor_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, HalfLaurent, KeyHash> memo_;
};

HalfLaurent mn_trace(Kind kind, const BiPartition& lambda, const BrSequence& br);

/// One representative per conjugacy class of W(B_n): negative cycles
/// (increasing) followed by positive cycles (increasing).
std::vector<SignedCycleType> class_reps_B(int n);

/// prod_i (2i)^{m_i^+} m_i^+! (2i)^{m_i^-} m_i^-!
BigInt centralizer_order_B(const SignedCycleType& cycles);

/// Standard bitableaux, via the single-box removal recursion.
BigInt st_bitableaux(const BiPartition& lambda);

/// Cycle types admissible for kind D at rank n: unbarred partitions, and
/// (1-bar, k-bar, rest) with rest an unbarred partition of n - 1 - k.
std::vector<SignedCycleType> d_cycle_types(int n);

}  // namespace almostchar
