#include "almostchar/half_laurent.hpp"

#include <algorithm>
#include <sstream>

#include "almostchar/error.hpp"

namespace almostchar {

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

HalfLaurent::HalfLaurent(int c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

HalfLaurent::HalfLaurent(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

HalfLaurent HalfLaurent::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  HalfLaurent out;
  for (auto& [e, c] : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == e) {
      out.terms_.back().second += c;
    } else {
      out.terms_.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return sgn(t.second) == 0; });
  for (auto& t : out.terms_) t.second.canonicalize();
  return out;
}

HalfLaurent HalfLaurent::monomial(int halfexp, const Rational& coeff) {
  HalfLaurent out;
  if (sgn(coeff) != 0) out.terms_.emplace_back(halfexp, coeff);
  return out;
}

HalfLaurent HalfLaurent::U() { return from_terms({{1, 1}, {-1, -1}}); }

int HalfLaurent::min_halfexp() const { return terms_.empty() ? 0 : terms_.front().first; }
int HalfLaurent::max_halfexp() const { return terms_.empty() ? 0 : terms_.back().first; }

Rational HalfLaurent::coeff(int halfexp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), halfexp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == halfexp) return it->second;
  return 0;
}

HalfLaurent& HalfLaurent::add_scaled(const HalfLaurent& o, const Rational& c, int shift) {
  if (o.terms_.empty() || sgn(c) == 0) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first + shift < a->first) {
      merged.emplace_back(b->first + shift, b->second * c);
      ++b;
    } else {
      Rational sum = a->second + b->second * c;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) { return add_scaled(o, 1); }
HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) { return add_scaled(o, -1); }

HalfLaurent& HalfLaurent::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) { return *this = *this * o; }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  if (a.is_zero() || b.is_zero()) return out;
  const int lo = a.min_halfexp() + b.min_halfexp();
  const int hi = a.max_halfexp() + b.max_halfexp();
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  }
  return out;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

HalfLaurent HalfLaurent::pow(unsigned e) const {
  HalfLaurent result = 1;
  HalfLaurent base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out.terms_.emplace_back(-it->first, (it->first % 2 != 0) ? Rational(-it->second) : it->second);
  }
  return out;
}

Rational HalfLaurent::eval_one() const {
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.second;
  return sum;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || e == 0) os << mag.get_str();
    if (e == 0) continue;
    if (!unit) os << '*';
    os << 'u';
    if (e == 2) continue;
    os << '^';
    if (e % 2 == 0) {
      os << e / 2;
    } else {
      os << e << "/2";
    }
  }
  return os.str();
}

DivisionResult divide(const HalfLaurent& num, const HalfLaurent& den) {
  if (den.is_zero()) throw DivisionError("division by the zero polynomial");
  if (num.is_zero()) return {};
  // Work with dense polynomials in x whose constant terms are nonzero.
  const int num_shift = num.min_halfexp();
  const int den_shift = den.min_halfexp();
  std::vector<Rational> r(static_cast<std::size_t>(num.max_halfexp() - num_shift + 1));
  for (const auto& [e, c] : num.terms()) r[static_cast<std::size_t>(e - num_shift)] = c;
  std::vector<Rational> d(static_cast<std::size_t>(den.max_halfexp() - den_shift + 1));
  for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e - den_shift)] = c;

  std::vector<HalfLaurent::Term> q;
  const std::size_t dd = d.size() - 1;
  if (r.size() > dd) {
    for (std::size_t top = r.size() - 1;; --top) {
      if (sgn(r[top]) != 0) {
        Rational factor = r[top] / d[dd];
        const std::size_t at = top - dd;
        for (std::size_t i = 0; i <= dd; ++i) r[at + i] -= factor * d[i];
        q.emplace_back(static_cast<int>(at) + num_shift - den_shift, std::move(factor));
      }
      if (top == dd) break;
    }
  }
  std::vector<HalfLaurent::Term> rem;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (sgn(r[i]) != 0) rem.emplace_back(static_cast<int>(i) + num_shift, r[i]);
  }
  return {HalfLaurent::from_terms(std::move(q)), HalfLaurent::from_terms(std::move(rem))};
}

HalfLaurent exact_divide(const HalfLaurent& num, const HalfLaurent& den) {
  auto [quotient, remainder] = divide(num, den);
  if (!remainder.is_zero()) {
    throw DivisionError("inexact division: (" + num.to_string() + ") / (" + den.to_string() +
                        ") leaves remainder " + remainder.to_string());
  }
  return quotient;
}

}  // namespace almostchar
