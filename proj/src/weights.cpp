#include "casimir/weights.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

Weight::Weight(int m) : m_(m) {
  if (m < 1) throw InternalError("weight signature m must be positive");
}

void Weight::set_entry(int index, long value) {
  if (index < min_index()) {
    throw IndexBelowRange("weight index " + std::to_string(index) + " below " +
                          std::to_string(min_index()));
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    if (value == 0) {
      entries_.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    entries_.insert(it, {index, value});
  }
}

Weight Weight::make(int m, const std::vector<long>& nonpos, const std::vector<long>& pos,
                    bool relaxed) {
  if (m < 1) throw ParseError("m must be a positive integer");
  if (static_cast<int>(nonpos.size()) != m) {
    throw ParseError("non-positive block must list exactly m=" + std::to_string(m) + " entries");
  }
  Weight w(m);
  for (int t = 0; t < m; ++t) {
    long v = nonpos[t];
    if (v < 0) throw NegativeEntry("entry at index " + std::to_string(-m + 1 + t));
    w.set_entry(-m + 1 + t, v);
  }
  for (size_t t = 0; t < pos.size(); ++t) {
    long v = pos[t];
    if (v < 0) throw NegativeEntry("entry at index " + std::to_string(t + 1));
    w.set_entry(static_cast<int>(t) + 1, v);
  }
  if (!relaxed && !w.is_dominant()) {
    throw NotDominant("weight " + w.str() + " violates dominance");
  }
  return w;
}

Weight Weight::unit(int m, int index) {
  Weight w(m);
  w.set_entry(index, 1);
  return w;
}

namespace {

long parse_long(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in weight");
  }
  return v;
}

std::vector<long> parse_block(std::string_view block) {
  std::vector<long> out;
  if (block.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = block.find(',', start);
    std::string_view item = block.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    out.push_back(parse_long(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Weight Weight::parse(std::string_view text, bool relaxed) {
  size_t semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("weight '" + std::string(text) + "' is missing the ';' block separator");
  }
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("weight '" + std::string(text) + "' has more than one ';'");
  }
  std::vector<long> nonpos = parse_block(text.substr(0, semi));
  std::vector<long> pos = parse_block(text.substr(semi + 1));
  if (nonpos.empty()) {
    throw ParseError("weight '" + std::string(text) + "' has an empty non-positive block");
  }
  return make(static_cast<int>(nonpos.size()), nonpos, pos, relaxed);
}

long Weight::entry(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : 0;
}

int Weight::k() const {
  int best = 0;
  for (const auto& [i, v] : entries_) {
    if (i >= 1 && v != 0) best = std::max(best, i);
  }
  return best;
}

int Weight::support_bound() const {
  return entries_.empty() ? min_index() - 1 : entries_.back().first;
}

long Weight::degree() const {
  long d = 0;
  for (const auto& [i, v] : entries_) d += v;
  return d;
}

bool Weight::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second >= 0; });
}

bool Weight::is_dominant() const {
  int hi = std::max(support_bound(), 1);
  for (int i = min_index(); i <= hi; ++i) {
    if (i == 0) continue;
    if (entry(i) - entry(i + 1) < 0) return false;
  }
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (m_ != o.m_) throw MixedSignature("adding weights with m=" + std::to_string(m_) + " and m=" + std::to_string(o.m_));
  Weight r(m_);
  for (const auto& [i, v] : entries_) r.set_entry(i, v);
  for (const auto& [i, v] : o.entries_) r.set_entry(i, r.entry(i) + v);
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (m_ != o.m_) throw MixedSignature("subtracting weights with different m");
  Weight r(m_);
  for (const auto& [i, v] : entries_) r.set_entry(i, v);
  for (const auto& [i, v] : o.entries_) r.set_entry(i, r.entry(i) - v);
  return r;
}

int Weight::compare(const Weight& a, const Weight& b) {
  if (a.m_ != b.m_) throw MixedSignature("comparing weights with different m");
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Merge-scan both supports upward; the larger entry at the first differing
  // index sorts first.
  size_t pa = 0, pb = 0;
  while (pa < a.entries_.size() || pb < b.entries_.size()) {
    int ia = pa < a.entries_.size() ? a.entries_[pa].first : INT32_MAX;
    int ib = pb < b.entries_.size() ? b.entries_[pb].first : INT32_MAX;
    int i = std::min(ia, ib);
    long va = ia == i ? a.entries_[pa].second : 0;
    long vb = ib == i ? b.entries_[pb].second : 0;
    if (va != vb) return va > vb ? -1 : 1;
    if (ia == i) ++pa;
    if (ib == i) ++pb;
  }
  return 0;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (int i = min_index(); i <= 0; ++i) {
    if (i != min_index()) os << ',';
    os << entry(i);
  }
  os << ';';
  int top = k();
  for (int i = 1; i <= top; ++i) {
    if (i != 1) os << ',';
    os << entry(i);
  }
  return os.str();
}

Rational bilinear(const Weight& a, const Weight& b) {
  if (a.m() != b.m()) throw MixedSignature("bilinear form needs equal m");
  Rational sum = 0;
  for (const auto& [i, v] : a.support()) {
    long w = b.entry(i);
    if (w == 0) continue;
    long prod = v * w;
    if (index_grading(i) == 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  }
  return sum;
}

Rational pairing_with_2rho(const Weight& lambda) {
  const long m = lambda.m();
  Rational sum = 0;
  for (const auto& [i, v] : lambda.support()) {
    long diag = v * (v + 1 - 2 * static_cast<long>(i));
    sum += (index_grading(i) == 0 ? diag : -diag);
    sum -= 2 * m * v;
  }
  return sum;
}

}  // namespace casimir
