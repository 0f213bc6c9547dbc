#include "almostchar/shapes.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "almostchar/error.hpp"

namespace almostchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string BiPartition::to_string() const {
  return "(" + alpha.to_string() + ";" + beta.to_string() + ")";
}

std::size_t BiPartitionHash::operator()(const BiPartition& b) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int p : b.alpha.parts()) mix(static_cast<std::size_t>(p));
  mix(0xffff);
  for (int p : b.beta.parts()) mix(static_cast<std::size_t>(p));
  return h;
}

SkewBiShape::SkewBiShape(BiPartition outer, BiPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw InvalidInput("skew shape " + outer_.to_string() + "/" + inner_.to_string() +
                       ": inner is not contained in outer");
  }
}

std::vector<Cell> SkewBiShape::cells(Side side) const {
  const Partition& out = side == Side::Alpha ? outer_.alpha : outer_.beta;
  const Partition& in = side == Side::Alpha ? inner_.alpha : inner_.beta;
  std::vector<Cell> cells;
  for (int i = 0; i < out.length(); ++i) {
    for (int j = in.part(i); j < out.part(i); ++j) cells.push_back({i + 1, j + 1});
  }
  return cells;
}

namespace {

std::vector<StripComponent> side_components(const SkewBiShape& x, Side side) {
  const std::vector<Cell> cells = x.cells(side);
  const std::set<Cell> present(cells.begin(), cells.end());
  std::set<Cell> seen;
  std::vector<StripComponent> out;
  for (const Cell& start : cells) {
    if (seen.contains(start)) continue;
    StripComponent comp{side, {}, 0, 0, true};
    std::vector<Cell> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      comp.cells.push_back(c);
      for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                     Cell{c.row, c.col + 1}}) {
        if (present.contains(n) && !seen.contains(n)) {
          seen.insert(n);
          stack.push_back(n);
        }
      }
    }
    std::sort(comp.cells.begin(), comp.cells.end());
    std::set<int> rows;
    std::set<int> cols;
    std::set<Cell> mine(comp.cells.begin(), comp.cells.end());
    for (const Cell& c : comp.cells) {
      rows.insert(c.row);
      cols.insert(c.col);
      if (mine.contains({c.row + 1, c.col}) && mine.contains({c.row, c.col + 1}) &&
          mine.contains({c.row + 1, c.col + 1})) {
        comp.border_strip = false;
      }
    }
    comp.rows = static_cast<int>(rows.size());
    comp.cols = static_cast<int>(cols.size());
    out.push_back(std::move(comp));
  }
  return out;
}

// ct(x) = sign * u^{exponent}
struct Content {
  int sign;
  int exponent;
};

Content content(Side side, Cell c, Kind kind) {
  const int diag = c.col - c.row;
  if (side == Side::Beta) return {-1, diag};
  return {1, kind == Kind::B ? diag + 1 : diag};
}

}  // namespace

StripClassification strip_classify(const SkewBiShape& x) {
  StripClassification out{side_components(x, Side::Alpha), true};
  auto beta = side_components(x, Side::Beta);
  out.components.insert(out.components.end(), std::make_move_iterator(beta.begin()),
                        std::make_move_iterator(beta.end()));
  out.broken_border_strip = std::all_of(out.components.begin(), out.components.end(),
                                        [](const StripComponent& c) { return c.border_strip; });
  return out;
}

HalfLaurent delta(const SkewBiShape& x) {
  const StripClassification cls = strip_classify(x);
  if (!cls.broken_border_strip) return {};
  if (cls.components.empty()) return 1;
  int halfexp = 0;
  int sign = 1;
  for (const auto& comp : cls.components) {
    halfexp += (comp.cols - 1) - (comp.rows - 1);
    if ((comp.rows - 1) % 2 != 0) sign = -sign;
  }
  return HalfLaurent::U().pow(static_cast<unsigned>(cls.components.size() - 1)) *
         HalfLaurent::monomial(halfexp, sign);
}

HalfLaurent delta_bar(const SkewBiShape& x, Kind kind) {
  const StripClassification cls = strip_classify(x);
  if (cls.components.size() != 1 || !cls.components.front().border_strip) return {};
  const StripComponent& strip = cls.components.front();
  const std::set<Cell> mine(strip.cells.begin(), strip.cells.end());
  int halfexp = (strip.cols - 1) - (strip.rows - 1);
  int sign = (strip.rows - 1) % 2 == 0 ? 1 : -1;
  for (const Cell& c : strip.cells) {
    const bool above = mine.contains({c.row - 1, c.col});
    const bool left = mine.contains({c.row, c.col - 1});
    const Content ct = content(strip.side, c, kind);
    if (!above && !left) {  // sharp corner
      halfexp += 2 * ct.exponent;
      sign *= ct.sign;
    } else if (above && left) {  // dull corner
      halfexp -= 2 * ct.exponent;
      sign *= ct.sign;
    }
  }
  return HalfLaurent::monomial(halfexp, sign);
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == p.length() || cap == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(cap, p.part(row)); ++v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(0, p.part(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, int>> rim_removals(const Partition& p) {
  std::vector<std::pair<Partition, int>> out;
  const int len = p.length();
  std::vector<int> q(static_cast<std::size_t>(len), 0);
  // Fill rows bottom-up: q_i >= max(q_{i+1}, p_{i+1} - 1).
  std::function<void(int, int)> rec = [&](int row, int removed) {
    if (row < 0) {
      out.emplace_back(Partition(q), removed);
      return;
    }
    const int below = row + 1 < len ? q[static_cast<std::size_t>(row + 1)] : 0;
    const int lo = std::max({below, p.part(row + 1) - 1, 0});
    for (int v = lo; v <= p.part(row); ++v) {
      q[static_cast<std::size_t>(row)] = v;
      rec(row - 1, removed + p.part(row) - v);
    }
  };
  rec(len - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<BiPartition, SkewBiShape>> remove_strips(const BiPartition& outer, int m) {
  if (m < 0 || m > outer.size()) {
    throw InvalidInput("remove_strips: size " + std::to_string(m) + " out of range for " +
                       outer.to_string());
  }
  const int target = outer.size() - m;
  std::vector<std::pair<BiPartition, SkewBiShape>> out;
  const auto betas = subpartitions(outer.beta);
  for (const Partition& a : subpartitions(outer.alpha)) {
    for (const Partition& b : betas) {
      if (a.size() + b.size() != target) continue;
      BiPartition inner{a, b};
      out.emplace_back(inner, SkewBiShape(outer, inner));
    }
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(rest, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<BiPartition> bipartitions_of(int n) {
  std::vector<BiPartition> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& a : partitions_of(k)) {
      for (const auto& b : partitions_of(n - k)) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace almostchar
