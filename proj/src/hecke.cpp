#include "almostchar/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "almostchar/error.hpp"

namespace almostchar {

SignedCycleType cycles_from_signed(const std::vector<int>& signed_lengths) {
  SignedCycleType out;
  for (int v : signed_lengths) {
    if (v == 0) throw InvalidInput("cycle length 0 is not allowed");
    out.push_back({v < 0 ? -v : v, v < 0});
  }
  return out;
}

std::vector<int> cycles_to_signed(const SignedCycleType& cycles) {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(c.barred ? -c.length : c.length);
  return out;
}

int cycles_total(const SignedCycleType& cycles) {
  int total = 0;
  for (const auto& c : cycles) total += c.length;
  return total;
}

BrSequence::BrSequence(Kind kind, std::vector<BrEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  int prev = 0;
  for (const auto& e : entries_) {
    if (e.magnitude <= prev) throw InvalidInput("Br magnitudes must be positive and strictly increasing");
    prev = e.magnitude;
  }
  if (kind_ == Kind::D) {
    const auto barred = std::count_if(entries_.begin(), entries_.end(), [](const BrEntry& e) { return e.barred; });
    const bool plain = barred == 0;
    const bool pattern_ii = barred == 2 && entries_.size() >= 2 && entries_[0].barred &&
                            entries_[0].magnitude == 1 && entries_[1].barred;
    if (!plain && !pattern_ii) {
      throw InvalidInput("kind D Br sequence must be unbarred or start with (-1, -r2)");
    }
  }
}

BrSequence BrSequence::from_cycles(Kind kind, const SignedCycleType& cycles) {
  std::vector<BrEntry> entries;
  int total = 0;
  for (const auto& c : cycles) {
    if (c.length <= 0) throw InvalidInput("cycle lengths must be positive");
    total += c.length;
    entries.push_back({total, c.barred});
  }
  return BrSequence(kind, std::move(entries));
}

SignedCycleType BrSequence::cycles() const {
  SignedCycleType out;
  int prev = 0;
  for (const auto& e : entries_) {
    out.push_back({e.magnitude - prev, e.barred});
    prev = e.magnitude;
  }
  return out;
}

int BrSequence::step_size(std::size_t i) const {
  return entries_[i].magnitude - (i == 0 ? 0 : entries_[i - 1].magnitude);
}

int l_prime(const BrSequence& br) {
  int total = 0;
  int prev = 0;
  for (const auto& e : br.entries()) {
    const int k = prev + 1;
    const int l = e.magnitude;
    if (!e.barred) {
      total += l - k;
    } else if (br.kind() == Kind::B) {
      total += k + l - 2;  // L_k has 2k-1 letters, one of them s_0
    } else if (k >= 2) {
      total += k + l - 2;  // L'_k has 2k-2 letters, T'_0 counted with the s_i
    }
    prev = l;
  }
  return total;
}

TraceEvaluator::TraceEvaluator(BrSequence br, std::size_t memo_budget)
    : br_(std::move(br)),
      memo_budget_(memo_budget),
      prefactor_(HalfLaurent::monomial(l_prime(br_))) {}

std::size_t TraceEvaluator::memo_entries() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

HalfLaurent TraceEvaluator::trace(const BiPartition& lambda) {
  if (lambda.size() != br_.n()) {
    throw InvalidInput("bipartition " + lambda.to_string() + " has size " + std::to_string(lambda.size()) +
                       " but the Br sequence has n = " + std::to_string(br_.n()));
  }
  if (br_.kind() == Kind::D && lambda.alpha == lambda.beta) {
    throw InvalidInput("kind D trace is undefined for degenerate " + lambda.to_string());
  }
  return prefactor_ * chain_sum(lambda, br_.entries().size());
}

HalfLaurent TraceEvaluator::chain_sum(const BiPartition& mu, std::size_t steps) {
  if (steps == 0) return mu.size() == 0 ? HalfLaurent(1) : HalfLaurent();
  Key key{mu, steps};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const int size = br_.step_size(steps - 1);
  const bool barred = br_.entries()[steps - 1].barred;
  HalfLaurent result;
  const auto beta_removals = rim_removals(mu.beta);
  for (const auto& [alpha_in, alpha_removed] : rim_removals(mu.alpha)) {
    if (alpha_removed > size) continue;
    for (const auto& [beta_in, beta_removed] : beta_removals) {
      if (alpha_removed + beta_removed != size) continue;
      if (barred && alpha_removed > 0 && beta_removed > 0) continue;
      BiPartition inner{alpha_in, beta_in};
      const SkewBiShape shape(mu, inner);
      const HalfLaurent weight = barred ? delta_bar(shape, br_.kind()) : delta(shape);
      if (weight.is_zero()) continue;
      const HalfLaurent sub = chain_sum(inner, steps - 1);
      if (sub.is_zero()) continue;
      result += weight * sub;
    }
  }
  std::unique_lock lock(mutex_);
  if (memo_budget_ != 0 && memo_.size() >= memo_budget_) {
    throw ResourceGuard("memo budget of " + std::to_string(memo_budget_) + " entries exceeded");
  }
  memo_.emplace(std::move(key), result);
  return result;
}

HalfLaurent mn_trace(Kind kind, const BiPartition& lambda, const BrSequence& br) {
  if (br.kind() != kind) throw InvalidInput("Br sequence kind does not match");
  TraceEvaluator eval(br);
  return eval.trace(lambda);
}

std::vector<SignedCycleType> class_reps_B(int n) {
  if (n < 1) throw InvalidInput("class_reps_B needs n >= 1");
  std::vector<SignedCycleType> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& neg : partitions_of(k)) {
      for (const auto& pos : partitions_of(n - k)) {
        SignedCycleType ct;
        for (auto it = neg.parts().rbegin(); it != neg.parts().rend(); ++it) ct.push_back({*it, true});
        for (auto it = pos.parts().rbegin(); it != pos.parts().rend(); ++it) ct.push_back({*it, false});
        out.push_back(std::move(ct));
      }
    }
  }
  return out;
}

BigInt centralizer_order_B(const SignedCycleType& cycles) {
  std::map<std::pair<int, bool>, unsigned long> mult;
  for (const auto& c : cycles) ++mult[{c.length, c.barred}];
  BigInt order = 1;
  for (const auto& [key, m] : mult) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(2 * key.first), m);
    order *= power * fact;
  }
  return order;
}

BigInt st_bitableaux(const BiPartition& lambda) {
  std::map<BiPartition, BigInt> memo;
  auto rec = [&memo](const auto& self, const BiPartition& bp) -> BigInt {
    if (bp.size() == 0) return 1;
    if (auto it = memo.find(bp); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& [inner, shape] : remove_strips(bp, 1)) total += self(self, inner);
    memo.emplace(bp, total);
    return total;
  };
  return rec(rec, lambda);
}

std::vector<SignedCycleType> d_cycle_types(int n) {
  std::vector<SignedCycleType> out;
  auto append_unbarred = [](SignedCycleType ct, const Partition& p) {
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) ct.push_back({*it, false});
    return ct;
  };
  for (const auto& p : partitions_of(n)) out.push_back(append_unbarred({}, p));
  for (int k = 1; k + 1 <= n; ++k) {
    for (const auto& p : partitions_of(n - 1 - k)) {
      out.push_back(append_unbarred({{1, true}, {k, true}}, p));
    }
  }
  return out;
}

}  // namespace almostchar
