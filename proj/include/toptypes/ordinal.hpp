#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toptypes {

// A countable ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1.
// The empty term list is zero.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  // Throws DomainError unless exponents are strictly decreasing and every
  // coefficient is positive.
  explicit Ordinal(std::vector<Term> terms);

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // True when the value is a finite ordinal (no term with a positive exponent).
  bool is_finite() const noexcept;
  // The value as a natural number; throws DomainError if infinite.
  std::uint64_t as_natural() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class OrdinalKind { Zero, Successor, Limit };

Ordinal parse_ordinal(std::string_view text);
std::string format_ordinal(const Ordinal& a);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
OrdinalKind classify(const Ordinal& a);

// a = b + 1  =>  predecessor(a) = b.  Throws DomainError on zero or limits.
Ordinal predecessor(const Ordinal& a);
// a + 1
Ordinal successor(const Ordinal& a);

// Canonical fundamental sequence of a limit ordinal, indexed from 1.
// With b = g + w^e (last term split off):
//   e = d + 1     ->  g + w^d * i
//   e limit       ->  g + w^(fund_seq(e, i))
Ordinal fund_seq(const Ordinal& limit, std::uint64_t i);

// Smallest i >= 1 with fund_seq(limit, i) >= target. Requires target < limit.
std::uint64_t fund_seq_index_reaching(const Ordinal& limit, const Ordinal& target);

}  // namespace toptypes
