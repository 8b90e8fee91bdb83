#ifndef GKML_TRUTH_VALUE_HPP
#define GKML_TRUTH_VALUE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkml {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ── TruthValue ──────────────────────────────────────────────────────────────
// An exact rational in [0,1], always in lowest terms.  All semantic
// quantities in the library are TruthValues; there is no floating point
// anywhere on an evaluation path.

class TruthValue {
 public:
  TruthValue() : v_(0) {}

  static TruthValue zero() { return TruthValue(mpq_class(0)); }
  static TruthValue one() { return TruthValue(mpq_class(1)); }

  /// num/den with den > 0; throws if the result is outside [0,1].
  static TruthValue ratio(long num, long den);
  static TruthValue ratio(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" with nonnegative integers, or "0" / "1".
  static TruthValue parse(const std::string& text);

  /// Canonical text: lowest terms, integers rendered as "0" / "1".
  std::string str() const;

  /// Decimal rendering with `digits` fractional digits, truncated toward
  /// zero.  For human consumption only.
  std::string decimal(int digits) const;

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.v_ == b.v_; }
  friend bool operator!=(const TruthValue& a, const TruthValue& b) { return a.v_ != b.v_; }
  friend bool operator<(const TruthValue& a, const TruthValue& b) { return a.v_ < b.v_; }
  friend bool operator<=(const TruthValue& a, const TruthValue& b) { return a.v_ <= b.v_; }
  friend bool operator>(const TruthValue& a, const TruthValue& b) { return a.v_ > b.v_; }
  friend bool operator>=(const TruthValue& a, const TruthValue& b) { return a.v_ >= b.v_; }

 private:
  explicit TruthValue(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// The standard Goedel algebra on [0,1]: meet = min, join = max, residuum,
// and the pseudo-complement (residuation into 0).

/// a . b = min{a,b}
TruthValue tnorm(const TruthValue& a, const TruthValue& b);

/// a => b = 1 if a <= b, else b
TruthValue residuum(const TruthValue& a, const TruthValue& b);

/// max{a,b}
TruthValue join(const TruthValue& a, const TruthValue& b);

/// -a = a => 0, i.e. 1 if a = 0, else 0
TruthValue neg(const TruthValue& a);

// ── OrderMap ────────────────────────────────────────────────────────────────
// A strictly increasing finite map on truth values that fixes 0 and 1.
// Because the Goedel operations depend only on the order of their inputs
// (and coincidence with the endpoints), such a map is a homomorphism for
// tnorm, join, residuum and neg on its domain.

class OrderMap {
 public:
  /// Pairs must be strictly increasing in both coordinates and contain
  /// (0,0) and (1,1); throws otherwise.
  explicit OrderMap(std::vector<std::pair<TruthValue, TruthValue>> pairs);

  /// Applies the map; value not in the domain is an error.
  TruthValue apply(const TruthValue& v) const;

  bool contains(const TruthValue& v) const;

  const std::vector<std::pair<TruthValue, TruthValue>>& pairs() const { return pairs_; }

  static OrderMap identity_on(const std::vector<TruthValue>& domain);

 private:
  std::vector<std::pair<TruthValue, TruthValue>> pairs_;  // sorted by input
};

/// Builds the order map fixing 0 and 1 and sending the interior points of
/// `domain` into the open interval (alpha, alpha+epsilon), equally spaced.
/// Requires 0 <= alpha < alpha+epsilon <= 1 and domain within [0,1].
OrderMap build_order_map(const std::vector<TruthValue>& domain, const TruthValue& alpha,
                         const TruthValue& epsilon);

}  // namespace gkml

#endif  // GKML_TRUTH_VALUE_HPP
