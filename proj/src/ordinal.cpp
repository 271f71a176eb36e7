#include "toptypes/ordinal.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "toptypes/error.hpp"

namespace toptypes {

namespace {

bool is_one(const Ordinal& a) {
  return a.terms().size() == 1 && a.terms()[0].exponent.is_zero() && a.terms()[0].coefficient == 1;
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    skip_space();
    if (at_end()) fail("empty ordinal");
    Ordinal result = expr();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  Ordinal expr() {
    std::vector<Ordinal::Term> terms;
    bool zero_literal = false;
    std::size_t count = 0;
    for (;;) {
      skip_space();
      auto term = this->term();
      ++count;
      if (term.coefficient == 0) {
        zero_literal = true;
      } else {
        if (!terms.empty() && compare(terms.back().exponent, term.exponent) != std::strong_ordering::greater)
          fail("non-canonical order: exponents must strictly decrease");
        terms.push_back(std::move(term));
      }
      skip_space();
      if (at_end() || peek() != '+') break;
      ++pos_;
    }
    if (zero_literal && count > 1) fail("zero coefficient");
    return Ordinal(std::move(terms));
  }

  Ordinal::Term term() {
    if (at_end()) fail("expected term");
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent = Ordinal::natural(1);
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exponent = atom();
      }
      std::uint64_t coefficient = 1;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        coefficient = nat();
        if (coefficient == 0) fail("zero coefficient");
      }
      return {std::move(exponent), coefficient};
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return {Ordinal{}, nat()};
    fail("expected 'w' or a natural number");
  }

  // Exponent position: a natural, a bare w-power, or a parenthesized sum.
  Ordinal atom() {
    skip_space();
    if (at_end()) fail("expected exponent");
    if (peek() == '(') {
      ++pos_;
      Ordinal inner = expr();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent = Ordinal::natural(1);
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exponent = atom();
      }
      return Ordinal::omega_power(exponent);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal::natural(nat());
    fail("expected exponent");
  }

  std::uint64_t nat() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected natural number");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("natural number out of range");
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ordinal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const Ordinal& a, std::string& out);

void format_exponent(const Ordinal& e, std::string& out) {
  const auto& terms = e.terms();
  bool bare = terms.size() == 1 && (terms[0].exponent.is_zero() || terms[0].coefficient == 1);
  if (!bare) out += '(';
  format_into(e, out);
  if (!bare) out += ')';
}

void format_into(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (!is_one(t.exponent)) {
      out += '^';
      format_exponent(t.exponent, out);
    }
    if (t.coefficient != 1) {
      out += '*';
      out += std::to_string(t.coefficient);
    }
  }
}

}  // namespace

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coefficient == 0) throw DomainError("ordinal term with zero coefficient");
    if (k > 0 && compare(terms_[k - 1].exponent, terms_[k].exponent) != std::strong_ordering::greater)
      throw DomainError("ordinal exponents must strictly decrease");
  }
}

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms_.push_back(Term{Ordinal{}, n});
  return a;
}

Ordinal Ordinal::omega() { return omega_power(natural(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal{};
  Ordinal a;
  a.terms_.push_back(Term{exponent, coefficient});
  return a;
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::as_natural() const {
  if (!is_finite()) throw DomainError("ordinal " + format_ordinal(*this) + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (auto c = x[k].exponent <=> y[k].exponent; c != 0) return c;
    if (auto c = x[k].coefficient <=> y[k].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string format_ordinal(const Ordinal& a) {
  std::string out;
  format_into(a, out);
  return out;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

Ordinal predecessor(const Ordinal& a) {
  if (classify(a) != OrdinalKind::Successor)
    throw DomainError("predecessor of non-successor ordinal " + format_ordinal(a));
  auto terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal(std::move(terms));
}

Ordinal successor(const Ordinal& a) {
  auto terms = a.terms();
  if (!terms.empty() && terms.back().exponent.is_zero()) {
    if (terms.back().coefficient == std::numeric_limits<std::uint64_t>::max())
      throw DomainError("successor overflows coefficient");
    ++terms.back().coefficient;
  } else {
    terms.push_back(Ordinal::Term{Ordinal{}, 1});
  }
  return Ordinal(std::move(terms));
}

Ordinal fund_seq(const Ordinal& limit, std::uint64_t i) {
  if (classify(limit) != OrdinalKind::Limit)
    throw DomainError("fundamental sequence of non-limit ordinal " + format_ordinal(limit));
  if (i == 0) throw DomainError("fundamental sequence index must be >= 1");

  auto terms = limit.terms();
  Ordinal e = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();

  if (classify(e) == OrdinalKind::Successor) {
    terms.push_back(Ordinal::Term{predecessor(e), i});
  } else {
    terms.push_back(Ordinal::Term{fund_seq(e, i), 1});
  }
  return Ordinal(std::move(terms));
}

std::uint64_t fund_seq_index_reaching(const Ordinal& limit, const Ordinal& target) {
  if (!(target < limit))
    throw DomainError("target " + format_ordinal(target) + " is not below " + format_ordinal(limit));
  // fund_seq is strictly increasing and cofinal: gallop, then bisect.
  std::uint64_t hi = 1;
  while (fund_seq(limit, hi) < target) {
    if (hi > std::numeric_limits<std::uint64_t>::max() / 2) throw DomainError("fundamental sequence index overflow");
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // fund_seq(limit, lo) < target, or lo == 0
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (fund_seq(limit, mid) < target) lo = mid;
    else hi = mid;
  }
  return hi;
}

}  // namespace toptypes
