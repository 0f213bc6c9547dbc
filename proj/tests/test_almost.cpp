#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "almostchar/almost.hpp"
#include "almostchar/error.hpp"
#include "oracles.hpp"

using namespace almostchar;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
BiPartition BP(std::vector<int> a, std::vector<int> b) { return {P(std::move(a)), P(std::move(b))}; }
BrSequence br_of(Kind kind, std::vector<int> cycles) { return BrSequence::from_cycles(kind, cycles_from_signed(cycles)); }
std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Config cfg_with(int workers) {
  Config c;
  c.workers = workers;
  c.timing = false;
  return c;
}

std::vector<std::vector<int>> signed_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      for (int s : {1, -1}) {
        cur.push_back(s * k);
        rec(left - k);
        cur.pop_back();
      }
    }
  };
  rec(n);
  return out;
}

Rational at_three_halves(const HalfLaurent& x) {
  Rational total = 0;
  for (const auto& [e, c] : x.terms()) {
    Rational p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= Rational(3, 2);
    total += c * (e >= 0 ? p : Rational(1 / p));
  }
  return total;
}

const HalfLaurent u = HalfLaurent::u();

}  // namespace

TEST_CASE("delta constants") {
  CHECK(delta_const(Kind::B, 1) == Rational(-1, 2));
  CHECK(delta_const(Kind::B, 2) == Rational(-1, 4));
  CHECK(delta_const(Kind::B, 3) == Rational(1, 8));
  CHECK(delta_const(Kind::D, 1) == Rational(-1, 2));
  CHECK(delta_const(Kind::D, 2) == Rational(1, 8));
  CHECK_THROWS_AS(delta_const(Kind::B, 0), InvalidInput);
}

TEST_CASE("prop cycles") {
  CHECK(cycles_to_signed(prop_cycles(Kind::B, 1)) == std::vector<int>{-2});
  CHECK(cycles_to_signed(prop_cycles(Kind::B, 2)) == std::vector<int>{6});
  CHECK(cycles_to_signed(prop_cycles(Kind::B, 3)) == std::vector<int>{4, 8});
  CHECK(cycles_to_signed(prop_cycles(Kind::B, 6)) == std::vector<int>{6, 16, 20});
  CHECK(cycles_to_signed(prop_cycles(Kind::D, 2)) == std::vector<int>{6, 10});
  CHECK(cycles_to_signed(prop_cycles(Kind::D, 3)) == std::vector<int>{-1, -3, 14, 18});
  for (int d = 1; d <= 9; ++d) {
    CHECK(cycles_total(prop_cycles(Kind::B, d)) == d * d + d);
    CHECK(cycles_total(prop_cycles(Kind::D, d)) == 4 * d * d);
    CHECK(cycles_total(prop_cycles(Kind::B, d)) == special_cuspidal(Kind::B, d).rank);
    CHECK(cycles_total(prop_cycles(Kind::D, d)) == special_cuspidal(Kind::D, d).rank);
  }
}

TEST_CASE("cuspidal pair signs") {
  CHECK(cuspidal_pair_sign(Kind::B, 1, BP({1}, {1})) == Rational(1, 2));
  CHECK(cuspidal_pair_sign(Kind::B, 1, BP({1, 1}, {})) == Rational(-1, 2));
  CHECK(cuspidal_pair_sign(Kind::B, 1, BP({}, {2})) == Rational(-1, 2));
  CHECK_THROWS_AS(cuspidal_pair_sign(Kind::B, 1, BP({2}, {})), InvalidInput);
  CHECK(in_cuspidal_index_set(Kind::D, 1, BP({1}, {2, 1})));
  const Config cfg = cfg_with(1);
  for (int d = 1; d <= 3; ++d) CHECK(cuspidal_sign_check(Kind::B, d, cfg).passed());
  for (int d = 1; d <= 2; ++d) CHECK(cuspidal_sign_check(Kind::D, d, cfg).passed());
}

TEST_CASE("f_lambda examples in B_2") {
  const Config cfg = cfg_with(1);
  const Symbol cusp = special_cuspidal(Kind::B, 1).cuspidal;
  CHECK(f_lambda(Kind::B, cusp, br_of(Kind::B, {-2}), cfg) == u);
  CHECK(f_lambda(Kind::B, cusp, br_of(Kind::B, {2}), cfg).is_zero());
  // a singleton family gives the trace itself
  const Symbol triv = symbol_from_bipartition(Kind::B, BP({2}, {}));
  const auto br = br_of(Kind::B, {-1, 1});
  CHECK(f_lambda(Kind::B, triv, br, cfg) == mn_trace(Kind::B, BP({2}, {}), br));
  CHECK_THROWS_AS(f_lambda(Kind::B, cusp, br_of(Kind::B, {3}), cfg), InvalidInput);
  CHECK_THROWS_AS(f_lambda(Kind::B, cusp, br_of(Kind::D, {-1, -1}), cfg), InvalidInput);
}

TEST_CASE("f_ab examples") {
  const Config cfg = cfg_with(1);
  CHECK(f_ab(2, 1, Kind::B, br_of(Kind::B, {-2}), cfg) == u * Rational(-2));
  CHECK(f_ab(2, 1, Kind::B, br_of(Kind::B, {2}), cfg).is_zero());
  CHECK(f_ab(0, 0, Kind::B, BrSequence(Kind::B, {}), cfg) == HalfLaurent(1));
  CHECK_THROWS_AS(f_ab(2, 2, Kind::B, br_of(Kind::B, {2}), cfg), InvalidInput);
  CHECK_THROWS_AS(f_ab(4, 1, Kind::D, br_of(Kind::D, {2, 2}), cfg), InvalidInput);
}

TEST_CASE("family sum against seminormal traces") {
  // pairings from the library, traces from the matrix oracle at u = 9/4
  const Config cfg = cfg_with(1);
  const Symbol cusp = special_cuspidal(Kind::B, 2).cuspidal;
  const auto fd = family_decompose(cusp, Kind::B);
  std::vector<std::pair<Rational, oracle::SeminormalRep>> members;
  for (const auto& s : fd.members()) {
    if (s.defect() != 1) continue;
    const auto bp = bipartition_from_symbol(Kind::B, s);
    members.emplace_back(pairing(cusp, s, Kind::B),
                         oracle::SeminormalRep(parts_of(bp.alpha), parts_of(bp.beta), Rational(9, 4), true));
  }
  CHECK(members.size() == 10);
  for (const auto& ct : class_reps_B(6)) {
    const auto cyc = cycles_to_signed(ct);
    Rational expected = 0;
    for (const auto& [w, rep] : members) expected += w * rep.trace(oracle::br_word(cyc, false));
    CHECK(at_three_halves(f_lambda(Kind::B, cusp, BrSequence::from_cycles(Kind::B, ct), cfg)) == expected);
  }
}

TEST_CASE("route agreement for the cuspidal symbol") {
  const Config cfg = cfg_with(2);
  for (int d = 1; d <= 2; ++d) {
    const Symbol cusp = special_cuspidal(Kind::B, d).cuspidal;
    for (const auto& cyc : signed_compositions(d * d + d)) {
      const auto br = br_of(Kind::B, cyc);
      CHECK(f_lambda(Kind::B, cusp, br, cfg) == f_cuspidal_by_rectangle(Kind::B, d, br, cfg));
    }
  }
  const Symbol cusp = special_cuspidal(Kind::D, 1).cuspidal;
  for (const auto& ct : d_cycle_types(4)) {
    const auto br = BrSequence::from_cycles(Kind::D, ct);
    CHECK(f_lambda(Kind::D, cusp, br, cfg) == f_cuspidal_by_rectangle(Kind::D, 1, br, cfg));
  }
}

TEST_CASE("cuspidal f vanishes when the last cycle is positive") {
  // w then lies in a proper standard parabolic subgroup
  const Config cfg = cfg_with(1);
  const Symbol cusp = special_cuspidal(Kind::B, 2).cuspidal;
  int nonzero = 0;
  for (const auto& cyc : signed_compositions(6)) {
    const auto f = f_lambda(Kind::B, cusp, br_of(Kind::B, cyc), cfg);
    if (cyc.back() > 0) CHECK(f.is_zero());
    if (!f.is_zero()) ++nonzero;
  }
  CHECK(nonzero > 0);
  CHECK_FALSE(f_lambda(Kind::B, cusp, br_of(Kind::B, {2, -1, -3}), cfg).is_zero());
  const Symbol dcusp = special_cuspidal(Kind::D, 1).cuspidal;
  for (const auto& ct : d_cycle_types(4)) {
    if (!ct.back().barred) CHECK(f_lambda(Kind::D, dcusp, BrSequence::from_cycles(Kind::D, ct), cfg).is_zero());
  }
}

TEST_CASE("nonvanishing reports") {
  const Config cfg = cfg_with(2);
  const auto b1 = verify_nonvanishing(Kind::B, 1, cfg);
  CHECK(b1.passed());
  CHECK(b1.value == u);
  const auto d1 = verify_nonvanishing(Kind::D, 1, cfg);
  CHECK(d1.passed());
  CHECK_FALSE(d1.value.is_zero());
  // the chosen elements for d >= 2 end in a positive cycle, so the value is zero
  const auto b2 = verify_nonvanishing(Kind::B, 2, cfg);
  CHECK(b2.verdict == Verdict::Fail);
  CHECK(b2.value.is_zero());
  const auto b3 = verify_nonvanishing(Kind::B, 3, cfg);
  CHECK(b3.value.is_zero());
  Config small = cfg;
  small.max_rank = 10;
  CHECK_THROWS_AS(verify_nonvanishing(Kind::B, 3, small), ResourceGuard);
}

TEST_CASE("recursion check preconditions and a small instance") {
  Config cfg = cfg_with(2);
  cfg.max_rank = 40;
  CHECK_THROWS_AS(recursion_check(6, 5, cycles_from_signed({3, 12, 16}), cfg), InvalidInput);
  CHECK_THROWS_AS(recursion_check(3, 5, cycles_from_signed({2, 12}), cfg), InvalidInput);
  CHECK_THROWS_AS(recursion_check(6, 5, cycles_from_signed({-2, 12, 15}), cfg), InvalidInput);
  // a = b = 4: the base is f_{0,0} = 1, so h is f_{4,4} itself
  const auto rep = recursion_check(4, 4, cycles_from_signed({6, 10}), Kind::D, cfg);
  CHECK(rep.details["f_base"] == "1");
  CHECK(rep.value == f_ab(4, 4, Kind::D, br_of(Kind::D, {6, 10}), cfg));
}

TEST_CASE("orthogonality of specialized traces") {
  const Config cfg = cfg_with(2);
  for (int n = 1; n <= 5; ++n) CHECK(orthogonality_check(n, cfg).passed());
  auto table = specialized_trace_table(3, cfg);
  table[1][0] += 1;
  const auto bad = orthogonality_from_table(class_reps_B(3), table);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK_FALSE(bad.value.is_zero());
}

TEST_CASE("involution and m2 checks") {
  const Config cfg = cfg_with(1);
  for (Kind k : {Kind::B, Kind::D}) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(involution_check(n, k, cfg).passed());
      CHECK(m2_check(n, k, cfg).passed());
    }
  }
}

TEST_CASE("type D swap diagnostic is empty") {
  const Config cfg = cfg_with(1);
  for (int n = 2; n <= 6; ++n) CHECK(d_swap_diagnostic(n, cfg).empty());
}

TEST_CASE("results do not depend on the worker count") {
  const Symbol cusp = special_cuspidal(Kind::B, 2).cuspidal;
  const auto br = br_of(Kind::B, {2, -1, -3});
  const auto one = f_lambda(Kind::B, cusp, br, cfg_with(1));
  for (int w : {2, 3, 8}) {
    CHECK(f_lambda(Kind::B, cusp, br, cfg_with(w)) == one);
    CHECK(f_ab(3, 2, Kind::B, br, cfg_with(w)) == f_ab(3, 2, Kind::B, br, cfg_with(1)));
  }
}
