#include "swd/segments.hpp"

#include <algorithm>

namespace swd {

Segment::Segment(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (b < a - 1) {
    throw DomainError("segment (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has negative length");
  }
}

std::string Segment::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::strong_ordering seg_cmp(const Segment& s1, const Segment& s2) {
  if (s1.a() != s2.a()) return s1.a() <=> s2.a();
  // Same left end: the shorter segment is the larger one.
  return s2.b() <=> s1.b();
}

bool is_ordered(std::span<const Segment> m) {
  for (std::size_t k = 0; k + 1 < m.size(); ++k) {
    if (seg_cmp(m[k], m[k + 1]) < 0) return false;
  }
  return true;
}

Multisegment normal_form(Multisegment m) {
  std::stable_sort(m.begin(), m.end(),
                   [](const Segment& x, const Segment& y) { return seg_cmp(x, y) > 0; });
  return m;
}

std::int64_t RootVector::operator[](std::int64_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? 0 : it->second;
}

void RootVector::add(std::int64_t i, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RootVector weight_of(const Segment& s) {
  RootVector v;
  for (std::int64_t i = s.a(); i <= s.b(); ++i) v.add(i, 1);
  return v;
}

std::int64_t cartan_pair(const RootVector& beta, const RootVector& gamma) {
  std::int64_t total = 0;
  for (const auto& [i, c] : beta.terms()) {
    total += c * (2 * gamma[i] - gamma[i - 1] - gamma[i + 1]);
  }
  return total;
}

std::int64_t euler_pair(const RootVector& beta, const RootVector& gamma) {
  std::int64_t total = 0;
  for (const auto& [i, c] : beta.terms()) total += c * gamma[i];
  return total;
}

namespace {

void require_nonempty(const Segment& s, const char* op) {
  if (s.is_unit()) {
    throw DomainError(std::string(op) + " is undefined on the unit segment " + s.to_string());
  }
}

}  // namespace

std::int64_t lambda(const Segment& s, const Segment& t) {
  require_nonempty(s, "lambda");
  require_nonempty(t, "lambda");
  if (s.a() <= t.a() && t.a() <= s.b() && s.b() <= t.b()) {
    return 2 - (s.a() == t.a() ? 1 : 0) - (s.b() == t.b() ? 1 : 0);
  }
  return -cartan_pair(weight_of(s), weight_of(t));
}

std::int64_t de(const Segment& s, const Segment& t) {
  require_nonempty(s, "de");
  require_nonempty(t, "de");
  const bool s_in_t = t.a() <= s.a() && s.b() <= t.b();
  const bool t_in_s = s.a() <= t.a() && t.b() <= s.b();
  // [a-1, b+1] and [a', b'] are disjoint
  const bool separated = t.b() < s.a() - 1 || s.b() + 1 < t.a();
  return (s_in_t || t_in_s || separated) ? 0 : 1;
}

std::int64_t zero_order_s(const Segment& s, const Segment& t) {
  const RootVector beta = weight_of(s);
  const RootVector gamma = weight_of(t);
  const std::int64_t twice_s =
      -cartan_pair(beta, gamma) + 2 * euler_pair(beta, gamma) - lambda(s, t);
  if (twice_s < 0 || twice_s % 2 != 0) {
    throw DomainError("zero order for " + s.to_string() + "," + t.to_string() +
                      " is not a non-negative integer");
  }
  return twice_s / 2;
}

KRelation k_relation(const Segment& s, const Segment& t) {
  require_nonempty(s, "k_relation");
  require_nonempty(t, "k_relation");
  const std::int64_t a = s.a(), b = s.b(), a2 = t.a(), b2 = t.b();
  if (a2 < a && a <= b2 && b2 < b) {
    // 0 -> q L(a',b) o L(a,b') -> L(a,b) o L(a',b') -> L(a',b') o L(a,b)
    //   -> q^{-1} L(a',b) o L(a,b') -> 0
    const std::vector<Segment> outer{Segment(a2, b), Segment(a, b2)};
    return KRelation{KRelation::Kind::Overlapping,
                     {{+1, 1, outer}, {-1, 0, {s, t}}, {+1, 0, {t, s}}, {-1, -1, outer}}};
  }
  if (a == b2 + 1) {
    // 0 -> q L(a',b) -> L(a,b) o L(a',b') -> q^{-1} L(a',b') o L(a,b)
    //   -> q^{-1} L(a',b) -> 0
    const std::vector<Segment> merged{Segment(a2, b)};
    return KRelation{KRelation::Kind::Adjacent,
                     {{+1, 1, merged}, {-1, 0, {s, t}}, {+1, -1, {t, s}}, {-1, -1, merged}}};
  }
  throw DomainError("no exact sequence for " + s.to_string() + "," + t.to_string() +
                    ": need a' < a <= b' < b or a = b'+1");
}

}  // namespace swd
