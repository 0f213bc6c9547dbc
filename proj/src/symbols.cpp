#include "almostchar/symbols.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "almostchar/error.hpp"

namespace almostchar {

namespace {

void check_row(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw InvalidInput("symbol entries must be nonnegative");
    if (i > 0 && row[i] <= row[i - 1]) {
      throw InvalidInput("symbol rows must be strictly increasing");
    }
  }
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Row of a symbol from a partition padded to `len` entries: entry_i = part_i + i
// with parts taken in increasing order.
std::vector<int> row_from_partition(const Partition& p, int len) {
  std::vector<int> row(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int from_top = len - 1 - i;  // increasing order reverses the parts
    row[static_cast<std::size_t>(i)] = p.part(from_top) + i;
  }
  return row;
}

Partition partition_from_row(const std::vector<int>& row) {
  std::vector<int> parts;
  for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i) {
    parts.push_back(row[static_cast<std::size_t>(i)] - i);
  }
  return Partition(std::move(parts));
}

// Symbol of defect d (S longer by d) attached to a bipartition.
Symbol symbol_of_defect(const BiPartition& bp, int d) {
  const int m = std::max({bp.alpha.length() - d, bp.beta.length(), 0});
  return Symbol::canonical(row_from_partition(bp.alpha, m + d), row_from_partition(bp.beta, m));
}

int popcount_parity(const std::vector<int>& a, const std::vector<int>& b) {
  return static_cast<int>(set_intersection(a, b).size()) % 2;
}

}  // namespace

Symbol Symbol::canonical(std::vector<int> s, std::vector<int> t) {
  check_row(s);
  check_row(t);
  while (!s.empty() && !t.empty() && s.front() == 0 && t.front() == 0) {
    s.erase(s.begin());
    t.erase(t.begin());
    for (int& v : s) --v;
    for (int& v : t) --v;
  }
  if (s.size() < t.size() || (s.size() == t.size() && t < s)) std::swap(s, t);
  Symbol out;
  out.s_ = std::move(s);
  out.t_ = std::move(t);
  return out;
}

RankDefect rank_defect(const std::vector<int>& s, const std::vector<int>& t) {
  const long long sum = std::accumulate(s.begin(), s.end(), 0LL) + std::accumulate(t.begin(), t.end(), 0LL);
  const long long len = static_cast<long long>(s.size() + t.size());
  // floor(((len-1)/2)^2) computed in integers: ((len-1)^2) / 4 rounded down.
  const long long shift = len == 0 ? 0 : ((len - 1) * (len - 1)) / 4;
  const int defect = static_cast<int>(s.size() > t.size() ? s.size() - t.size() : t.size() - s.size());
  return {static_cast<int>(sum - shift), defect};
}

int Symbol::rank() const { return rank_defect(s_, t_).rank; }
int Symbol::defect() const { return rank_defect(s_, t_).defect; }

std::pair<std::vector<int>, std::vector<int>> Symbol::shifted() const {
  auto shift = [](const std::vector<int>& row) {
    std::vector<int> out{0};
    for (int v : row) out.push_back(v + 1);
    return out;
  };
  return {shift(s_), shift(t_)};
}

std::string Symbol::to_string() const { return "(" + join(s_) + ";" + join(t_) + ")"; }

Symbol FamilyDecomposition::member(const std::vector<int>& m_set) const {
  return Symbol::canonical(set_union(z2, set_difference(z1, m_set)), set_union(z2, m_set));
}

std::vector<Symbol> FamilyDecomposition::members() const {
  std::vector<Symbol> out;
  const std::size_t k = z1.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> m_set;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) m_set.push_back(z1[i]);
    }
    if (static_cast<int>(m_set.size() % 2) != d1 % 2) continue;
    if (kind == Kind::D && (mask & 1U)) continue;  // min(Z1) stays on the other side
    out.push_back(member(m_set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FamilyDecomposition family_decompose(const Symbol& x, Kind kind) {
  FamilyDecomposition fd;
  fd.kind = kind;
  fd.z2 = set_intersection(x.row_s(), x.row_t());
  fd.z1 = set_symmetric_difference(x.row_s(), x.row_t());
  const int defect = x.defect();
  const std::vector<int> s_singles = set_intersection(x.row_s(), fd.z1);
  const std::vector<int> t_singles = set_intersection(x.row_t(), fd.z1);
  if (kind == Kind::B) {
    if (defect % 2 != 1) {
      throw InvalidInput("symbol " + x.to_string() + " has even defect, not of kind B");
    }
    fd.d1 = static_cast<int>(fd.z1.size() - 1) / 2;
    fd.f = fd.d1;
    // |M| must have the parity of d1; which row that is depends on defect mod 4.
    fd.m = defect % 4 == 1 ? t_singles : s_singles;
  } else {
    if (defect % 4 != 0) {
      throw InvalidInput("symbol " + x.to_string() + " has defect not divisible by 4, not of kind D");
    }
    if (x.is_degenerate()) {
      throw InvalidInput("degenerate symbol " + x.to_string() + " has no Fourier pairing");
    }
    fd.d1 = static_cast<int>(fd.z1.size()) / 2;
    fd.f = fd.d1 - 1;
    const int least = fd.z1.front();
    fd.m = std::binary_search(s_singles.begin(), s_singles.end(), least) ? t_singles : s_singles;
  }
  for (std::size_t i = 1; i < fd.z1.size(); i += 2) fd.m0.push_back(fd.z1[i]);
  return fd;
}

Rational pairing(const Symbol& a, const Symbol& b, Kind kind) {
  const FamilyDecomposition fa = family_decompose(a, kind);
  const FamilyDecomposition fb = family_decompose(b, kind);
  if (fa.z1 != fb.z1 || fa.z2 != fb.z2) return 0;
  const std::vector<int> sharp_a = set_symmetric_difference(fa.m, fa.m0);
  const std::vector<int> sharp_b = set_symmetric_difference(fb.m, fb.m0);
  Rational value(1);
  value.get_den() <<= static_cast<mp_bitcnt_t>(fa.f);
  value.canonicalize();
  return popcount_parity(sharp_a, sharp_b) ? Rational(-value) : value;
}

std::vector<Family> enumerate_families(int n, Kind kind) {
  if (n < 0) throw InvalidInput("rank must be nonnegative");
  std::set<Symbol> symbols;
  if (kind == Kind::B) {
    for (int d = 1; (d * d - 1) / 4 <= n; d += 2) {
      for (const auto& bp : bipartitions_of(n - (d * d - 1) / 4)) symbols.insert(symbol_of_defect(bp, d));
    }
  } else {
    for (int d = 0; d * d / 4 <= n; d += 4) {
      for (const auto& bp : bipartitions_of(n - d * d / 4)) symbols.insert(symbol_of_defect(bp, d));
    }
  }
  std::map<std::pair<std::vector<int>, std::vector<int>>, Family> grouped;
  std::vector<Family> degenerate;
  for (const Symbol& x : symbols) {
    if (kind == Kind::D && x.is_degenerate()) {
      degenerate.push_back({{}, x.row_s(), {x}, true});
      continue;
    }
    auto z2 = set_intersection(x.row_s(), x.row_t());
    auto z1 = set_symmetric_difference(x.row_s(), x.row_t());
    Family& fam = grouped[{z1, z2}];
    fam.z1 = std::move(z1);
    fam.z2 = std::move(z2);
    fam.members.push_back(x);
  }
  std::vector<Family> out;
  for (auto& [key, fam] : grouped) out.push_back(std::move(fam));
  for (auto& fam : degenerate) out.push_back(std::move(fam));
  std::stable_sort(out.begin(), out.end(), [](const Family& a, const Family& b) {
    return std::tie(a.z1, a.z2) < std::tie(b.z1, b.z2);
  });
  return out;
}

std::vector<Symbol> enumerate_symbols(int n, Kind kind) {
  std::vector<Symbol> out;
  for (auto& fam : enumerate_families(n, kind)) {
    out.insert(out.end(), fam.members.begin(), fam.members.end());
  }
  return out;
}

std::vector<std::vector<Rational>> pairing_matrix(const Family& family, Kind kind) {
  if (family.degenerate) throw InvalidInput("degenerate family has no Fourier pairing");
  const std::size_t k = family.members.size();
  std::vector<std::vector<Rational>> mat(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) mat[i][j] = pairing(family.members[i], family.members[j], kind);
  }
  return mat;
}

Symbol symbol_from_bipartition(Kind kind, const BiPartition& bp) {
  return symbol_of_defect(bp, kind == Kind::B ? 1 : 0);
}

BiPartition unordered_representative(const BiPartition& bp) {
  return bp.alpha < bp.beta ? bp.swapped() : bp;
}

BiPartition bipartition_from_symbol(Kind kind, const Symbol& x) {
  if (kind == Kind::B) {
    if (x.defect() != 1) {
      throw InvalidInput("symbol " + x.to_string() + " does not have defect 1");
    }
    return {partition_from_row(x.row_s()), partition_from_row(x.row_t())};
  }
  if (x.defect() != 0) throw InvalidInput("symbol " + x.to_string() + " does not have defect 0");
  if (x.is_degenerate()) throw InvalidInput("degenerate symbol " + x.to_string());
  return unordered_representative({partition_from_row(x.row_s()), partition_from_row(x.row_t())});
}

CuspidalData special_cuspidal(Kind kind, int d) {
  if (d < 1) throw InvalidInput("cuspidal parameter d must be positive");
  const int top = kind == Kind::B ? 2 * d : 4 * d - 1;
  std::vector<int> full(static_cast<std::size_t>(top + 1));
  std::iota(full.begin(), full.end(), 0);
  std::vector<int> evens;
  std::vector<int> odds;
  for (int v : full) (v % 2 == 0 ? evens : odds).push_back(v);
  Symbol cusp = Symbol::canonical(full, {});
  return {cusp, Symbol::canonical(evens, odds), cusp.rank()};
}

bool is_special(const Symbol& x, Kind kind) {
  auto interleaves = [](const std::vector<int>& a, const std::vector<int>& b) {
    // a_0 <= b_0 <= a_1 <= b_1 <= ... alternately, a first.
    std::vector<int> merged;
    for (std::size_t i = 0; i < a.size(); ++i) {
      merged.push_back(a[i]);
      if (i < b.size()) merged.push_back(b[i]);
    }
    return std::is_sorted(merged.begin(), merged.end());
  };
  if (kind == Kind::B) {
    return x.row_s().size() == x.row_t().size() + 1 && interleaves(x.row_s(), x.row_t());
  }
  if (x.defect() != 0) return false;
  return interleaves(x.row_s(), x.row_t()) || interleaves(x.row_t(), x.row_s());
}

std::vector<BiPartition> enumerate_P_ab(int a, int b, bool unordered) {
  if (a < 0 || b < 0) throw InvalidInput("rectangle sides must be nonnegative");
  const Partition box(std::vector<int>(static_cast<std::size_t>(b > 0 ? a : 0), b));
  std::set<BiPartition> out;
  for (const Partition& alpha : subpartitions(box)) {
    std::vector<int> dual(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) dual[static_cast<std::size_t>(i)] = b - alpha.part(a - 1 - i);
    BiPartition bp{alpha, Partition(dual).conjugate()};
    out.insert(unordered ? unordered_representative(bp) : bp);
  }
  return {out.begin(), out.end()};
}

std::int64_t m2_unipotent(const Symbol& x, Kind kind, bool split) {
  if (kind == Kind::D && x.is_degenerate()) return split ? 1 : 0;
  const FamilyDecomposition fd = family_decompose(x, kind);
  if (x != fd.special()) return 0;
  return std::int64_t{1} << (kind == Kind::B ? fd.d1 : fd.d1 - 1);
}

}  // namespace almostchar
