#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "almostchar/half_laurent.hpp"
#include "almostchar/kind.hpp"
#include "almostchar/shapes.hpp"

namespace almostchar {

/*
  Unordered pair of finite sets of nonnegative integers, modulo the shift
  (S, T) ~ ({0} u (S+1), {0} u (T+1)).

  Stored in canonical reduced form: 0 is not in both rows, the longer row is
  row_s(), and for equal lengths row_s() is the lexicographically smaller row.
*/
class Symbol {
 public:
  Symbol() = default;

  /// Rows must be strictly increasing and nonnegative (InvalidInput otherwise).
  static Symbol canonical(std::vector<int> s, std::vector<int> t);

  const std::vector<int>& row_s() const { return s_; }
  const std::vector<int>& row_t() const { return t_; }

  int rank() const;
  int defect() const;
  bool is_degenerate() const { return s_ == t_; }

  /// One application of the shift, unreduced. Used to check shift invariance.
  std::pair<std::vector<int>, std::vector<int>> shifted() const;

  /// "(0,2;1)" style.
  std::string to_string() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::vector<int> s_;
  std::vector<int> t_;
};

struct RankDefect {
  int rank;
  int defect;
  friend bool operator==(const RankDefect&, const RankDefect&) = default;
};

/// Rank and defect of an arbitrary (not necessarily reduced) representative.
RankDefect rank_defect(const std::vector<int>& s, const std::vector<int>& t);
inline RankDefect rank_defect(const Symbol& x) { return {x.rank(), x.defect()}; }

/// Family data of a symbol: Lambda = (Z2 u (Z1 - M); Z2 u M).
struct FamilyDecomposition {
  std::vector<int> z1;  // singles
  std::vector<int> z2;  // doubles
  std::vector<int> m;
  std::vector<int> m0;  // M of the family's special symbol
  int d1 = 0;
  Kind kind = Kind::B;
  int f = 0;  // the pairing carries the factor 2^{-f}

  Symbol member(const std::vector<int>& m_set) const;
  /// All members of the family, in symbol order.
  std::vector<Symbol> members() const;
  Symbol special() const { return member(m0); }
};

/// Throws InvalidInput for a symbol whose defect does not belong to `kind`,
/// or for a degenerate symbol of kind D.
FamilyDecomposition family_decompose(const Symbol& x, Kind kind);

/// The Fourier pairing; 0 across families.
Rational pairing(const Symbol& a, const Symbol& b, Kind kind);

struct Family {
  std::vector<int> z1;
  std::vector<int> z2;
  std::vector<Symbol> members;
  bool degenerate = false;
};

/// Every canonical symbol of rank n and admissible defect, grouped into
/// families ordered by (Z1, Z2). Degenerate D symbols form flagged singletons.
std::vector<Family> enumerate_families(int n, Kind kind);
std::vector<Symbol> enumerate_symbols(int n, Kind kind);

/// Pairing matrix over the family members, in member order.
std::vector<std::vector<Rational>> pairing_matrix(const Family& family, Kind kind);

/// Defect-1 (B) / defect-0 (D) bijection with bipartitions; alpha maps to the S row.
Symbol symbol_from_bipartition(Kind kind, const BiPartition& bp);
/// Inverse. For kind D the representative with alpha >= beta (lexicographic) is returned.
BiPartition bipartition_from_symbol(Kind kind, const Symbol& x);

/// Representative of {(a,b),(b,a)} with alpha lexicographically >= beta.
BiPartition unordered_representative(const BiPartition& bp);

struct CuspidalData {
  Symbol cuspidal;
  Symbol special;
  int rank;
};

/// Cuspidal symbol and the special symbol of its family, for d >= 1.
CuspidalData special_cuspidal(Kind kind, int d);

/// Checks the weak interleaving of the rows directly.
bool is_special(const Symbol& x, Kind kind);

/// Bipartitions (alpha, beta) with alpha in an a x b box and beta* the rotated
/// complement. With unordered, (alpha,beta) ~ (beta,alpha) and the
/// representative with alpha >= beta is kept.
std::vector<BiPartition> enumerate_P_ab(int a, int b, bool unordered);

/// Multiplicity of the unipotent character in the induced module from G^F to G^{F^2}.
std::int64_t m2_unipotent(const Symbol& x, Kind kind, bool split = true);

}  // namespace almostchar
