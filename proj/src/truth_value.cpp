#include "gkml/truth_value.hpp"

#include <algorithm>

namespace gkml {

TruthValue TruthValue::ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  if (v < 0 || v > 1) throw Error("rational " + v.get_str() + " outside [0,1]");
  return TruthValue(std::move(v));
}

TruthValue TruthValue::ratio(long num, long den) {
  return ratio(mpz_class(num), mpz_class(den));
}

TruthValue TruthValue::parse(const std::string& text) {
  auto is_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (text == "0") return zero();
    if (text == "1") return one();
    throw Error("bad rational literal '" + text + "' (expected p/q, 0, or 1)");
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error("bad rational literal '" + text + "' (expected p/q, 0, or 1)");
  if (mpz_class(den) == 0) throw Error("bad rational literal '" + text + "': zero denominator");
  return ratio(mpz_class(num), mpz_class(den));
}

std::string TruthValue::str() const {
  return v_.get_str();
}

std::string TruthValue::decimal(int digits) const {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = (v_.get_num() * scale) / v_.get_den();
  std::string s = scaled.get_str();
  if ((int)s.size() <= digits) s.insert(0, std::string(digits + 1 - s.size(), '0'));
  if (digits > 0) s.insert(s.size() - digits, ".");
  return s;
}

TruthValue tnorm(const TruthValue& a, const TruthValue& b) {
  return a <= b ? a : b;
}

TruthValue residuum(const TruthValue& a, const TruthValue& b) {
  return a <= b ? TruthValue::one() : b;
}

TruthValue join(const TruthValue& a, const TruthValue& b) {
  return a >= b ? a : b;
}

TruthValue neg(const TruthValue& a) {
  return a.is_zero() ? TruthValue::one() : TruthValue::zero();
}

OrderMap::OrderMap(std::vector<std::pair<TruthValue, TruthValue>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  bool has0 = false, has1 = false;
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) {
      if (!(pairs_[i - 1].first < pairs_[i].first))
        throw Error("order map: duplicate input " + pairs_[i].first.str());
      if (!(pairs_[i - 1].second < pairs_[i].second))
        throw Error("order map: not strictly increasing at input " + pairs_[i].first.str());
    }
    if (pairs_[i].first.is_zero() && pairs_[i].second.is_zero()) has0 = true;
    if (pairs_[i].first.is_one() && pairs_[i].second.is_one()) has1 = true;
  }
  if (!has0 || !has1) throw Error("order map must contain (0,0) and (1,1)");
}

TruthValue OrderMap::apply(const TruthValue& v) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v,
                             [](const auto& p, const TruthValue& x) { return p.first < x; });
  if (it == pairs_.end() || it->first != v)
    throw Error("order map: value " + v.str() + " not in domain");
  return it->second;
}

bool OrderMap::contains(const TruthValue& v) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v,
                             [](const auto& p, const TruthValue& x) { return p.first < x; });
  return it != pairs_.end() && it->first == v;
}

OrderMap OrderMap::identity_on(const std::vector<TruthValue>& domain) {
  std::vector<std::pair<TruthValue, TruthValue>> pairs;
  pairs.reserve(domain.size() + 2);
  pairs.emplace_back(TruthValue::zero(), TruthValue::zero());
  pairs.emplace_back(TruthValue::one(), TruthValue::one());
  for (const auto& v : domain) pairs.emplace_back(v, v);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              pairs.end());
  return OrderMap(std::move(pairs));
}

OrderMap build_order_map(const std::vector<TruthValue>& domain, const TruthValue& alpha,
                         const TruthValue& epsilon) {
  if (epsilon.is_zero()) throw Error("build_order_map: empty target interval");
  mpq_class hi = alpha.raw() + epsilon.raw();
  if (hi > 1) throw Error("build_order_map: alpha+epsilon exceeds 1");

  std::vector<TruthValue> interior(domain);
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  std::erase_if(interior, [](const TruthValue& v) { return v.is_zero() || v.is_one(); });

  std::vector<std::pair<TruthValue, TruthValue>> pairs;
  pairs.emplace_back(TruthValue::zero(), TruthValue::zero());
  // Interior points go to alpha + k*epsilon/(m+1), k = 1..m.
  const long m = (long)interior.size();
  for (long k = 0; k < m; ++k) {
    mpq_class out = alpha.raw() + epsilon.raw() * mpq_class(k + 1, m + 1);
    out.canonicalize();
    pairs.emplace_back(interior[k], TruthValue::ratio(out.get_num(), out.get_den()));
  }
  pairs.emplace_back(TruthValue::one(), TruthValue::one());
  return OrderMap(std::move(pairs));
}

}  // namespace gkml
