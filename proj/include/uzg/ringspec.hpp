#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "uzg/errors.hpp"
#include "uzg/facts.hpp"
#include "uzg/ideals.hpp"
#include "uzg/limits.hpp"
#include "uzg/ring.hpp"

namespace uzg {

// Ring-spec mini-language:
//   zn:<n>                         integers modulo n
//   prod:<factor>,<factor>,...     direct product; factors are zn or polyq
//   polyq:<m>:<poly>               Z_m[x]/(f), f monic; poly either caret
//                                  form (x^2+3x+1) or a little-endian
//                                  coefficient list (1,3,1)
//   quot:<base>/jacobson           quotient by the Jacobson radical
//   quot:<base>/maxideal:<k>       quotient by the k-th maximal ideal
//                                  (ascending size, then member order)
// Inside prod, a coefficient list keeps consuming numbers after commas; the
// first comma followed by a letter starts the next factor.
namespace detail {

class SpecParser {
 public:
  SpecParser(const std::string& s, std::uint32_t limit)
      : s_(s), limit_(limit) {}

  FiniteRing parse() {
    FiniteRing r = parse_spec();
    if (pos_ != s_.size()) fail("unexpected trailing characters");
    if (r.order() > limit_)
      throw LimitError("ring order " + std::to_string(r.order()) +
                       " exceeds the enumeration limit " +
                       std::to_string(limit_));
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string read_word() {
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a keyword");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t read_number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 100000000ull) fail("number out of range");
      ++pos_;
    }
    return v;
  }

  FiniteRing parse_spec() {
    std::size_t save = pos_;
    std::string word = read_word();
    if (word == "quot") {
      expect(':');
      return parse_quotient();
    }
    pos_ = save;
    return parse_base();
  }

  FiniteRing parse_base() {
    std::size_t save = pos_;
    std::string word = read_word();
    if (word == "zn") {
      expect(':');
      return FiniteRing::zn(read_number());
    }
    if (word == "polyq") {
      expect(':');
      return parse_polyq();
    }
    if (word == "prod") {
      expect(':');
      std::vector<FiniteRing> factors;
      factors.push_back(parse_factor());
      while (peek() == ',') {
        ++pos_;
        factors.push_back(parse_factor());
      }
      return FiniteRing::product(std::move(factors));
    }
    pos_ = save;
    fail("expected zn, prod, polyq, or quot");
  }

  FiniteRing parse_factor() {
    std::size_t save = pos_;
    std::string word = read_word();
    pos_ = save;
    if (word == "zn" || word == "polyq") return parse_base();
    fail("product factors must be zn or polyq");
  }

  FiniteRing parse_polyq() {
    std::uint64_t m = read_number();
    expect(':');
    // caret form contains 'x' or '+'; otherwise a coefficient list
    std::size_t probe = pos_;
    while (probe < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[probe])))
      ++probe;
    bool caret = probe < s_.size() && (s_[probe] == 'x' || s_[probe] == '^' ||
                                       s_[probe] == '+');
    std::vector<std::uint32_t> coeffs =
        caret ? parse_poly_caret() : parse_poly_list();
    if (m < 2 || m > 0xffffffffull) fail("modulus out of range");
    return FiniteRing::poly_quotient(static_cast<std::uint32_t>(m), coeffs,
                                     limit_);
  }

  std::vector<std::uint32_t> parse_poly_caret() {
    std::vector<std::uint32_t> coeffs;
    auto bump = [&](std::uint64_t exp, std::uint64_t coeff) {
      if (exp > 64) fail("exponent out of range");
      if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
      std::uint64_t v = coeffs[exp] + coeff;
      if (v > 0xffffffffull) fail("coefficient out of range");
      coeffs[exp] = static_cast<std::uint32_t>(v);
    };
    while (true) {
      std::uint64_t coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_number();
        have_coeff = true;
      }
      std::uint64_t exp = 0;
      if (peek() == 'x') {
        ++pos_;
        exp = 1;
        if (peek() == '^') {
          ++pos_;
          exp = read_number();
        }
      } else if (!have_coeff) {
        fail("expected a term");
      }
      bump(exp, coeff);
      if (peek() != '+') break;
      ++pos_;
    }
    return coeffs;
  }

  std::vector<std::uint32_t> parse_poly_list() {
    std::vector<std::uint32_t> coeffs;
    coeffs.push_back(read_coefficient());
    // keep consuming after commas only while a digit follows
    while (peek() == ',' &&
           std::isdigit(static_cast<unsigned char>(peek2()))) {
      ++pos_;
      coeffs.push_back(read_coefficient());
    }
    return coeffs;
  }

  std::uint32_t read_coefficient() {
    std::uint64_t v = read_number();
    if (v > 0xffffffffull) fail("coefficient out of range");
    return static_cast<std::uint32_t>(v);
  }

  FiniteRing parse_quotient() {
    FiniteRing base = parse_base();
    expect('/');
    std::size_t word_pos = pos_;
    std::string word = read_word();
    RingFacts facts = ring_facts(base, limit_);
    if (word == "jacobson") {
      QuotientRing q = quotient_ring(base, facts.jacobson,
                                     "quot:" + base.label() + "/jacobson");
      return std::move(q.ring);
    }
    if (word == "maxideal") {
      expect(':');
      std::size_t idx_pos = pos_;
      std::uint64_t k = read_number();
      if (k >= facts.maximal_idx.size()) {
        pos_ = idx_pos;
        fail("maximal ideal index out of range, ring has " +
             std::to_string(facts.maximal_idx.size()));
      }
      const Ideal& m = facts.ideals[facts.maximal_idx[k]];
      QuotientRing q =
          quotient_ring(base, m.members, "quot:" + base.label() +
                                             "/maxideal:" + std::to_string(k));
      return std::move(q.ring);
    }
    pos_ = word_pos;
    fail("expected jacobson or maxideal");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::uint32_t limit_;
};

}  // namespace detail

inline FiniteRing parse_ring_spec(const std::string& spec,
                                  std::uint32_t enumeration_limit =
                                      Limits{}.enumeration) {
  return detail::SpecParser(spec, enumeration_limit).parse();
}

}  // namespace uzg
