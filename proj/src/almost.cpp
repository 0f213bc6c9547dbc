#include "almostchar/almost.hpp"

#include <chrono>

#include "almostchar/error.hpp"
#include "almostchar/parallel.hpp"

namespace almostchar {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Rational power_of_two_inverse(int e) {
  Rational r(1);
  r.get_den() <<= static_cast<mp_bitcnt_t>(e);
  r.canonicalize();
  return r;
}

bool in_P_ab(int a, int b, const BiPartition& bp) {
  const Partition dual = bp.beta.conjugate();
  if (bp.alpha.length() > a || bp.alpha.part(0) > b || dual.length() > a) return false;
  for (int i = 0; i < a; ++i) {
    if (bp.alpha.part(i) + dual.part(a - 1 - i) != b) return false;
  }
  return true;
}

nlohmann::ordered_json cycles_json(const SignedCycleType& cycles) {
  return cycles_to_signed(cycles);
}

HalfLaurent sum_in_order(const std::vector<HalfLaurent>& parts) {
  HalfLaurent total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "fail";
}

bool in_cuspidal_index_set(Kind kind, int d, const BiPartition& bp) {
  if (kind == Kind::B) return in_P_ab(d + 1, d, bp);
  return in_P_ab(2 * d, 2 * d, bp) || in_P_ab(2 * d, 2 * d, bp.swapped());
}

Rational cuspidal_pair_sign(Kind kind, int d, const BiPartition& bp) {
  if (d < 1) throw InvalidInput("cuspidal parameter d must be positive");
  if (!in_cuspidal_index_set(kind, d, bp)) {
    throw InvalidInput(bp.to_string() + " is not in the cuspidal index set for d = " + std::to_string(d));
  }
  const int twist = kind == Kind::B ? d * (d + 1) / 2 : d * (2 * d - 1);
  const Rational mag = power_of_two_inverse(kind == Kind::B ? d : 2 * d - 1);
  return (bp.alpha.size() + twist) % 2 == 0 ? mag : Rational(-mag);
}

Rational delta_const(Kind kind, int d) {
  if (d < 1) throw InvalidInput("cuspidal parameter d must be positive");
  const int twist = kind == Kind::B ? d * (d + 1) / 2 : d * (2 * d - 1);
  const Rational mag = power_of_two_inverse(kind == Kind::B ? d : 2 * d - 1);
  return twist % 2 == 0 ? mag : Rational(-mag);
}

SignedCycleType prop_cycles(Kind kind, int d) {
  if (d < 1) throw InvalidInput("cuspidal parameter d must be positive");
  if (kind == Kind::B) {
    // Each step d -> d-4 strips the pair (4d-8, 4d-4).
    if (d == 1) return {{2, true}};
    if (d == 2) return {{6, false}};
    if (d == 3) return {{4, false}, {8, false}};
    SignedCycleType out = d == 4 ? SignedCycleType{} : prop_cycles(kind, d - 4);
    out.push_back({4 * d - 8, false});
    out.push_back({4 * d - 4, false});
    return out;
  }
  // Each step d -> d-2 strips the pair (8d-10, 8d-6).
  if (d == 1) return {{1, true}, {3, true}};
  SignedCycleType out = d == 2 ? SignedCycleType{} : prop_cycles(kind, d - 2);
  out.push_back({8 * d - 10, false});
  out.push_back({8 * d - 6, false});
  return out;
}

HalfLaurent f_lambda(Kind kind, const Symbol& lambda, const BrSequence& br, const Config& cfg) {
  check_rank_guard(br.n(), cfg);
  if (br.kind() != kind) throw InvalidInput("Br sequence kind does not match");
  if (lambda.rank() != br.n()) {
    throw InvalidInput("symbol " + lambda.to_string() + " has rank " + std::to_string(lambda.rank()) +
                       " but the Br sequence has n = " + std::to_string(br.n()));
  }
  const FamilyDecomposition fd = family_decompose(lambda, kind);
  const int weyl_defect = kind == Kind::B ? 1 : 0;
  std::vector<Symbol> indexed;
  for (auto& s : fd.members()) {
    if (s.defect() == weyl_defect) indexed.push_back(std::move(s));
  }
  TraceEvaluator eval(br, cfg.memo_budget);
  const auto terms = parallel_map(indexed.size(), cfg.workers, [&](std::size_t i) {
    const Rational weight = pairing(lambda, indexed[i], kind);
    return eval.trace(bipartition_from_symbol(kind, indexed[i])) * weight;
  });
  return sum_in_order(terms);
}

HalfLaurent f_ab(int a, int b, Kind kind, const BrSequence& br, const Config& cfg) {
  check_rank_guard(br.n(), cfg);
  if (br.kind() != kind) throw InvalidInput("Br sequence kind does not match");
  if (a < 0 || b < 0 || a * b != br.n()) {
    throw InvalidInput("f_ab needs a*b = n (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                       ", n=" + std::to_string(br.n()) + ")");
  }
  if (kind == Kind::D && a != b) throw InvalidInput("kind D rectangle sums need a == b");
  const auto index = enumerate_P_ab(a, b, kind == Kind::D);
  if (br.n() == 0) return 1;  // the single empty bipartition, empty chain
  TraceEvaluator eval(br, cfg.memo_budget);
  const auto terms = parallel_map(index.size(), cfg.workers, [&](std::size_t i) {
    HalfLaurent t = eval.trace(index[i]);
    return index[i].alpha.size() % 2 == 0 ? t : -t;
  });
  return sum_in_order(terms);
}

HalfLaurent f_cuspidal_by_rectangle(Kind kind, int d, const BrSequence& br, const Config& cfg) {
  const HalfLaurent sum = kind == Kind::B ? f_ab(d + 1, d, kind, br, cfg) : f_ab(2 * d, 2 * d, kind, br, cfg);
  return sum * delta_const(kind, d);
}

VerificationReport verify_nonvanishing(Kind kind, int d, const Config& cfg) {
  const auto start = Clock::now();
  const CuspidalData cusp = special_cuspidal(kind, d);
  check_rank_guard(cusp.rank, cfg);
  const SignedCycleType cycles = prop_cycles(kind, d);
  VerificationReport rep;
  rep.claim = kind == Kind::B ? "cuspidal-nonvanishing-B" : "cuspidal-nonvanishing-D";
  rep.params["kind"] = std::string(kind_name(kind));
  rep.params["d"] = d;
  rep.params["cycles"] = cycles_json(cycles);
  rep.value = f_lambda(kind, cusp.cuspidal, BrSequence::from_cycles(kind, cycles), cfg);
  rep.verdict = rep.value.is_zero() ? Verdict::Fail : Verdict::Pass;
  if (kind == Kind::D && d >= 2) {
    rep.details["note"] = "terminal cycle pair uses lengths 8d-10 and 8d-6 so that the cycles total 4d^2";
  }
  rep.ms = elapsed_ms(start);
  return rep;
}

VerificationReport recursion_check(int a, int b, const SignedCycleType& cycles, const Config& cfg) {
  return recursion_check(a, b, cycles, a == b ? Kind::D : Kind::B, cfg);
}

VerificationReport recursion_check(int a, int b, const SignedCycleType& cycles, Kind kind, const Config& cfg) {
  const auto start = Clock::now();
  if (a < 4 || b < 4) throw InvalidInput("recursion check needs a, b >= 4");
  if (cycles.size() < 2) throw InvalidInput("recursion check needs at least two cycles");
  const SignedCycleType base(cycles.begin(), cycles.end() - 2);
  const SignedCycle& last = cycles.back();
  const SignedCycle& second = cycles[cycles.size() - 2];
  if (last.barred || second.barred || last.length != 2 * a + 2 * b - 6 || second.length != 2 * a + 2 * b - 10) {
    throw InvalidInput("the last two cycles must be unbarred of lengths " + std::to_string(2 * a + 2 * b - 10) +
                       " and " + std::to_string(2 * a + 2 * b - 6));
  }
  if (cycles_total(base) != (a - 4) * (b - 4)) {
    throw InvalidInput("the leading cycles must total " + std::to_string((a - 4) * (b - 4)));
  }
  check_rank_guard(a * b, cfg);

  VerificationReport rep;
  rep.claim = "rectangle-recursion";
  rep.params["kind"] = std::string(kind_name(kind));
  rep.params["a"] = a;
  rep.params["b"] = b;
  rep.params["cycles"] = cycles_json(cycles);

  const HalfLaurent full = f_ab(a, b, kind, BrSequence::from_cycles(kind, cycles), cfg);
  const HalfLaurent reduced = f_ab(a - 4, b - 4, kind, BrSequence::from_cycles(kind, base), cfg);
  rep.details["f_ab"] = full.to_string();
  rep.details["f_base"] = reduced.to_string();
  if (reduced.is_zero()) {
    rep.verdict = Verdict::Inconclusive;
    rep.details["reason"] = "base value is zero";
    rep.ms = elapsed_ms(start);
    return rep;
  }
  auto [h, remainder] = divide(full, reduced);
  rep.value = h;
  if (!remainder.is_zero()) {
    rep.details["remainder"] = remainder.to_string();
    rep.verdict = Verdict::Fail;
  } else {
    rep.details["divisible_by_U"] = divide(h, HalfLaurent::U()).remainder.is_zero() && !h.is_zero();
    rep.verdict = (!h.is_zero() && sgn(h.eval_one()) == 0) ? Verdict::Pass : Verdict::Fail;
  }
  rep.ms = elapsed_ms(start);
  return rep;
}

std::vector<std::vector<Rational>> specialized_trace_table(int n, const Config& cfg) {
  check_rank_guard(n, cfg);
  const auto reps = class_reps_B(n);
  const auto bips = bipartitions_of(n);
  const auto columns = parallel_map(reps.size(), cfg.workers, [&](std::size_t j) {
    TraceEvaluator eval(BrSequence::from_cycles(Kind::B, reps[j]), cfg.memo_budget);
    std::vector<Rational> col;
    for (const auto& bp : bips) col.push_back(eval.trace(bp).eval_one());
    return col;
  });
  std::vector<std::vector<Rational>> table(bips.size(), std::vector<Rational>(reps.size()));
  for (std::size_t j = 0; j < reps.size(); ++j) {
    for (std::size_t i = 0; i < bips.size(); ++i) table[i][j] = columns[j][i];
  }
  return table;
}

VerificationReport orthogonality_from_table(const std::vector<SignedCycleType>& reps,
                                            const std::vector<std::vector<Rational>>& table) {
  VerificationReport rep;
  rep.claim = "orthogonality";
  rep.params["n"] = reps.empty() ? 0 : cycles_total(reps.front());
  long long violations = 0;
  for (std::size_t w = 0; w < reps.size(); ++w) {
    for (std::size_t v = 0; v < reps.size(); ++v) {
      Rational sum = 0;
      for (const auto& row : table) sum += row[w] * row[v];
      const Rational expected = w == v ? Rational(centralizer_order_B(reps[w])) : Rational(0);
      if (sum != expected) ++violations;
    }
  }
  rep.details["classes"] = reps.size();
  rep.details["characters"] = table.size();
  rep.value = HalfLaurent(Rational(static_cast<long>(violations)));
  rep.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  return rep;
}

VerificationReport orthogonality_check(int n, const Config& cfg) {
  const auto start = Clock::now();
  VerificationReport rep = orthogonality_from_table(class_reps_B(n), specialized_trace_table(n, cfg));
  rep.ms = elapsed_ms(start);
  return rep;
}

VerificationReport involution_check(int n, Kind kind, const Config& cfg) {
  const auto start = Clock::now();
  check_rank_guard(n, cfg);
  VerificationReport rep;
  rep.claim = "fourier-involution";
  rep.params["kind"] = std::string(kind_name(kind));
  rep.params["n"] = n;
  long long violations = 0;
  long long families = 0;
  for (const Family& fam : enumerate_families(n, kind)) {
    if (fam.degenerate) continue;
    ++families;
    const auto s = pairing_matrix(fam, kind);
    const std::size_t k = s.size();
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        Rational sum = 0;
        for (std::size_t l = 0; l < k; ++l) sum += s[i][l] * s[l][j];
        ok = sum == (i == j ? 1 : 0);
      }
    }
    if (!ok) ++violations;
  }
  rep.details["families"] = families;
  rep.value = HalfLaurent(Rational(static_cast<long>(violations)));
  rep.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  rep.ms = elapsed_ms(start);
  return rep;
}

VerificationReport m2_check(int n, Kind kind, const Config& cfg) {
  const auto start = Clock::now();
  check_rank_guard(n, cfg);
  VerificationReport rep;
  rep.claim = "m2-sum";
  rep.params["kind"] = std::string(kind_name(kind));
  rep.params["n"] = n;
  long long violations = 0;
  long long symbols = 0;
  for (const Family& fam : enumerate_families(n, kind)) {
    if (fam.degenerate) continue;
    for (const Symbol& x : fam.members) {
      ++symbols;
      Rational sum = 0;
      for (const Symbol& y : fam.members) sum += pairing(x, y, kind) * Rational(static_cast<long>(m2_unipotent(y, kind)));
      if (sum != 1) ++violations;
    }
  }
  rep.details["symbols"] = symbols;
  rep.value = HalfLaurent(Rational(static_cast<long>(violations)));
  rep.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  rep.ms = elapsed_ms(start);
  return rep;
}

VerificationReport cuspidal_sign_check(Kind kind, int d, const Config& cfg) {
  const auto start = Clock::now();
  const CuspidalData cusp = special_cuspidal(kind, d);
  check_rank_guard(cusp.rank, cfg);
  VerificationReport rep;
  rep.claim = "cuspidal-sign";
  rep.params["kind"] = std::string(kind_name(kind));
  rep.params["d"] = d;
  const auto index = kind == Kind::B ? enumerate_P_ab(d + 1, d, false) : enumerate_P_ab(2 * d, 2 * d, true);
  long long violations = 0;
  for (const auto& bp : index) {
    const Rational direct = pairing(cusp.cuspidal, symbol_from_bipartition(kind, bp), kind);
    if (direct != cuspidal_pair_sign(kind, d, bp)) ++violations;
  }
  rep.details["members"] = index.size();
  rep.value = HalfLaurent(Rational(static_cast<long>(violations)));
  rep.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  rep.ms = elapsed_ms(start);
  return rep;
}

std::vector<SwapAsymmetry> d_swap_diagnostic(int n, const Config& cfg) {
  check_rank_guard(n, cfg);
  std::vector<BiPartition> lambdas;
  for (auto& bp : bipartitions_of(n)) {
    if (bp.alpha > bp.beta) lambdas.push_back(std::move(bp));
  }
  std::vector<SwapAsymmetry> out;
  for (const auto& cycles : d_cycle_types(n)) {
    TraceEvaluator eval(BrSequence::from_cycles(Kind::D, cycles), cfg.memo_budget);
    for (const auto& bp : lambdas) {
      HalfLaurent v = eval.trace(bp);
      HalfLaurent w = eval.trace(bp.swapped());
      if (v != w) out.push_back({bp, cycles, std::move(v), std::move(w)});
    }
  }
  return out;
}

}  // namespace almostchar
