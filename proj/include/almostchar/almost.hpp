#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "almostchar/config.hpp"
#include "almostchar/half_laurent.hpp"
#include "almostchar/hecke.hpp"
#include "almostchar/symbols.hpp"

namespace almostchar {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

/*
  Outcome of one machine-checked claim. `params` and `details` are emitted
  verbatim around the value so that a report alone is enough to re-derive the
  verdict.
*/
struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  HalfLaurent value;
  Verdict verdict = Verdict::Fail;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  long long ms = 0;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Membership in P^{d+1,d} (B) or the unordered P^{2d,2d} (D).
bool in_cuspidal_index_set(Kind kind, int d, const BiPartition& bp);

/// Closed-form pairing of the cuspidal symbol with the member indexed by bp.
Rational cuspidal_pair_sign(Kind kind, int d, const BiPartition& bp);

/// (-1)^{d(d+1)/2} 2^{-d} for B, (-1)^{d(2d-1)} 2^{-(2d-1)} for D.
Rational delta_const(Kind kind, int d);

/// Element whose f for the cuspidal symbol is shown to be nonzero.
SignedCycleType prop_cycles(Kind kind, int d);

/// Coefficient of the almost character R_Lambda in the bitrace: the family
/// sum of pairing(Lambda, Lambda_E) times the Hecke trace on E.
HalfLaurent f_lambda(Kind kind, const Symbol& lambda, const BrSequence& br, const Config& cfg);

/// Signed rectangle sum over P^{a,b}. Kind D requires a == b and sums over the
/// unordered set with type-D traces.
HalfLaurent f_ab(int a, int b, Kind kind, const BrSequence& br, const Config& cfg);

/// delta_const * f_ab over the cuspidal rectangle, the second route to f_lambda(cuspidal).
HalfLaurent f_cuspidal_by_rectangle(Kind kind, int d, const BrSequence& br, const Config& cfg);

VerificationReport verify_nonvanishing(Kind kind, int d, const Config& cfg);

/// f_ab(a,b) = h * f_{a-4,b-4} on the truncated sequence, with h nonzero and h(1) = 0.
/// Kind defaults to D when a == b and B otherwise.
VerificationReport recursion_check(int a, int b, const SignedCycleType& cycles, const Config& cfg);
VerificationReport recursion_check(int a, int b, const SignedCycleType& cycles, Kind kind, const Config& cfg);

/// Character values at u = 1 for bipartitions_of(n) (rows) and class_reps_B(n) (columns).
std::vector<std::vector<Rational>> specialized_trace_table(int n, const Config& cfg);

/// Second orthogonality against centralizer orders. The value is the number
/// of violating class pairs.
VerificationReport orthogonality_from_table(const std::vector<SignedCycleType>& reps,
                                            const std::vector<std::vector<Rational>>& table);
VerificationReport orthogonality_check(int n, const Config& cfg);

/// S * S = I for every non-degenerate family of rank n. Value: violating families.
VerificationReport involution_check(int n, Kind kind, const Config& cfg);

/// sum_{L'} {L, L'} m2(L') = 1 for every L in a non-degenerate family. Value: violations.
VerificationReport m2_check(int n, Kind kind, const Config& cfg);

/// Closed-form cuspidal sign against the direct pairing over the cuspidal index set.
VerificationReport cuspidal_sign_check(Kind kind, int d, const Config& cfg);

struct SwapAsymmetry {
  BiPartition lambda;
  SignedCycleType cycles;
  HalfLaurent value;
  HalfLaurent swapped_value;
};

/// Kind D traces of (alpha,beta) and (beta,alpha) that differ, over all
/// non-degenerate bipartitions of n and d_cycle_types(n).
std::vector<SwapAsymmetry> d_swap_diagnostic(int n, const Config& cfg);

}  // namespace almostchar
