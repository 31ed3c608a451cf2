#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uzg/errors.hpp"
#include "uzg/limits.hpp"

namespace uzg {

using Elem = std::uint32_t;

enum class RingKind { Modular, Product, PolyQuotient, Table };

// Renders a polynomial over Z_m from little-endian coefficients, e.g.
// {1,1,1} -> "x^2+x+1", {0,0,1} -> "x^2", {2} -> "2".
inline std::string poly_to_string(const std::vector<std::uint32_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    std::uint32_t c = coeffs[j];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (j == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'x';
      if (j > 1) os << '^' << j;
    }
  }
  if (first) os << '0';
  return os.str();
}

// A finite commutative ring with identity. Elements are the indices
// 0..order-1; what an index means is fixed by the kind:
//   Modular       index = residue
//   Product       index = mixed-radix over the factors, first factor least
//                 significant
//   PolyQuotient  index = base-m encoding of the residue polynomial's
//                 little-endian coefficients
//   Table         index = row/column of the supplied Cayley tables
// Values are immutable after construction.
class FiniteRing {
 public:
  static FiniteRing zn(std::uint64_t n) {
    if (n == 0) throw ContractError("zn: modulus must be positive");
    FiniteRing r;
    r.kind_ = RingKind::Modular;
    r.order_ = static_cast<std::uint32_t>(n);
    r.modulus_ = n;
    r.zero_ = 0;
    r.one_ = n == 1 ? 0 : 1;
    r.label_ = "zn:" + std::to_string(n);
    return r;
  }

  static FiniteRing product(std::vector<FiniteRing> factors) {
    if (factors.empty())
      throw ContractError("product: at least one factor required");
    FiniteRing r;
    r.kind_ = RingKind::Product;
    std::uint64_t order = 1;
    std::string label = "prod:";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      order *= factors[i].order();
      if (order > (std::uint64_t{1} << 32))
        throw LimitError("product: ring order overflows the element index");
      if (i) label += ',';
      label += factors[i].label();
    }
    r.order_ = static_cast<std::uint32_t>(order);
    r.strides_.resize(factors.size());
    std::uint32_t stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      r.strides_[i] = stride;
      stride *= factors[i].order();
    }
    r.factors_ = std::move(factors);
    r.zero_ = 0;
    Elem one = 0;
    for (std::size_t i = 0; i < r.factors_.size(); ++i)
      one += r.factors_[i].one() * r.strides_[i];
    r.one_ = one;
    r.label_ = std::move(label);
    return r;
  }

  // Z_m[x]/(f) for monic f given as little-endian coefficients over Z_m.
  static FiniteRing poly_quotient(std::uint32_t m,
                                  std::vector<std::uint32_t> coeffs,
                                  std::uint32_t enumeration_limit =
                                      Limits{}.enumeration) {
    if (m < 2) throw ContractError("poly_quotient: base modulus must be >= 2");
    for (auto& c : coeffs) c %= m;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2)
      throw ContractError("poly_quotient: modulus polynomial must have degree >= 1");
    if (coeffs.back() != 1)
      throw ContractError("poly_quotient: modulus polynomial must be monic");
    std::uint32_t deg = static_cast<std::uint32_t>(coeffs.size()) - 1;
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
      order *= m;
      if (order > enumeration_limit)
        throw LimitError("poly_quotient: ring order " + std::string("m^") +
                         std::to_string(deg) + " exceeds the enumeration limit " +
                         std::to_string(enumeration_limit));
    }
    FiniteRing r;
    r.kind_ = RingKind::PolyQuotient;
    r.order_ = static_cast<std::uint32_t>(order);
    r.poly_m_ = m;
    r.poly_f_ = coeffs;
    r.zero_ = 0;
    r.one_ = 1;
    r.label_ = "polyq:" + std::to_string(m) + ":" + poly_to_string(coeffs);
    r.build_poly_tables();
    return r;
  }

  // Explicit Cayley tables. Ring axioms (commutativity, associativity,
  // distributivity, additive inverses, two-sided identities) are verified
  // unless `verify` is false; zero and one are located from the tables.
  static FiniteRing from_tables(std::string label,
                                const std::vector<std::vector<Elem>>& add,
                                const std::vector<std::vector<Elem>>& mul,
                                bool verify = true,
                                std::uint32_t enumeration_limit =
                                    Limits{}.enumeration) {
    std::size_t n = add.size();
    if (n == 0) throw ContractError("from_tables: empty addition table");
    if (n > enumeration_limit)
      throw LimitError("from_tables: ring order " + std::to_string(n) +
                       " exceeds the enumeration limit " +
                       std::to_string(enumeration_limit));
    if (mul.size() != n)
      throw ContractError("from_tables: table sizes differ");
    FiniteRing r;
    r.kind_ = RingKind::Table;
    r.order_ = static_cast<std::uint32_t>(n);
    r.label_ = std::move(label);
    r.add_table_.resize(n * n);
    r.mul_table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (add[i].size() != n || mul[i].size() != n)
        throw ContractError("from_tables: row " + std::to_string(i) +
                            " has the wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        if (add[i][j] >= n || mul[i][j] >= n)
          throw ContractError("from_tables: entry out of range at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
        r.add_table_[i * n + j] = add[i][j];
        r.mul_table_[i * n + j] = mul[i][j];
      }
    }
    r.finish_table_ring(verify);
    return r;
  }

  RingKind kind() const { return kind_; }
  std::uint32_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Elem add(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    switch (kind_) {
      case RingKind::Modular:
        return static_cast<Elem>((std::uint64_t{a} + b) % modulus_);
      case RingKind::Product: {
        Elem out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          const FiniteRing& f = factors_[i];
          Elem ca = (a / strides_[i]) % f.order();
          Elem cb = (b / strides_[i]) % f.order();
          out += f.add(ca, cb) * strides_[i];
        }
        return out;
      }
      default:
        return add_table_[static_cast<std::size_t>(a) * order_ + b];
    }
  }

  Elem mul(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    switch (kind_) {
      case RingKind::Modular:
        return static_cast<Elem>((std::uint64_t{a} * b) % modulus_);
      case RingKind::Product: {
        Elem out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          const FiniteRing& f = factors_[i];
          Elem ca = (a / strides_[i]) % f.order();
          Elem cb = (b / strides_[i]) % f.order();
          out += f.mul(ca, cb) * strides_[i];
        }
        return out;
      }
      default:
        return mul_table_[static_cast<std::size_t>(a) * order_ + b];
    }
  }

  Elem neg(Elem a) const {
    check_elem(a);
    switch (kind_) {
      case RingKind::Modular:
        return a == 0 ? 0 : static_cast<Elem>(modulus_ - a);
      case RingKind::Product: {
        Elem out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          const FiniteRing& f = factors_[i];
          Elem ca = (a / strides_[i]) % f.order();
          out += f.neg(ca) * strides_[i];
        }
        return out;
      }
      default:
        return neg_table_[a];
    }
  }

  std::string element_name(Elem a) const {
    check_elem(a);
    switch (kind_) {
      case RingKind::Modular:
        return std::to_string(a);
      case RingKind::Product: {
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          const FiniteRing& f = factors_[i];
          if (i) out += ',';
          out += f.element_name((a / strides_[i]) % f.order());
        }
        out += ')';
        return out;
      }
      case RingKind::PolyQuotient: {
        std::vector<std::uint32_t> digits;
        Elem v = a;
        std::uint32_t deg = static_cast<std::uint32_t>(poly_f_.size()) - 1;
        for (std::uint32_t i = 0; i < deg; ++i) {
          digits.push_back(v % poly_m_);
          v /= poly_m_;
        }
        return poly_to_string(digits);
      }
      default:
        return names_.empty() ? std::to_string(a) : names_[a];
    }
  }

  void set_element_names(std::vector<std::string> names) {
    names_ = std::move(names);
  }

  // Modular-only accessor, 0 otherwise.
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<FiniteRing>& factors() const { return factors_; }

 private:
  FiniteRing() = default;

  void check_elem(Elem a) const {
    if (a >= order_)
      throw ContractError("element index " + std::to_string(a) +
                          " out of range for ring " + label_ + " of order " +
                          std::to_string(order_));
  }

  // Residue polynomials are multiplied and reduced mod (m, f) to fill the
  // Cayley tables; f is monic so division is defined.
  void build_poly_tables() {
    std::uint32_t n = order_;
    std::uint32_t m = poly_m_;
    std::uint32_t deg = static_cast<std::uint32_t>(poly_f_.size()) - 1;
    auto decode = [&](Elem v) {
      std::vector<std::uint32_t> d(deg);
      for (std::uint32_t i = 0; i < deg; ++i) {
        d[i] = v % m;
        v /= m;
      }
      return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
      Elem v = 0;
      for (std::uint32_t i = deg; i-- > 0;) v = v * m + d[i];
      return v;
    };
    add_table_.resize(static_cast<std::size_t>(n) * n);
    mul_table_.resize(static_cast<std::size_t>(n) * n);
    neg_table_.resize(n);
    std::vector<std::vector<std::uint32_t>> digits(n);
    for (Elem a = 0; a < n; ++a) digits[a] = decode(a);
    for (Elem a = 0; a < n; ++a) {
      std::vector<std::uint32_t> na(deg);
      for (std::uint32_t i = 0; i < deg; ++i)
        na[i] = (m - digits[a][i]) % m;
      neg_table_[a] = encode(na);
      for (Elem b = 0; b < n; ++b) {
        std::vector<std::uint32_t> s(deg);
        for (std::uint32_t i = 0; i < deg; ++i)
          s[i] = (digits[a][i] + digits[b][i]) % m;
        add_table_[static_cast<std::size_t>(a) * n + b] = encode(s);
        // product then reduction by the monic modulus
        std::vector<std::uint32_t> p(2 * deg - 1, 0);
        for (std::uint32_t i = 0; i < deg; ++i)
          for (std::uint32_t j = 0; j < deg; ++j)
            p[i + j] = (p[i + j] + digits[a][i] * digits[b][j]) % m;
        for (std::uint32_t d = 2 * deg - 1; d-- > deg;) {
          std::uint32_t c = p[d];
          if (c == 0) continue;
          p[d] = 0;
          for (std::uint32_t i = 0; i < deg; ++i) {
            std::uint32_t sub = (c * poly_f_[i]) % m;
            p[d - deg + i] = (p[d - deg + i] + m - sub) % m;
          }
        }
        p.resize(deg);
        mul_table_[static_cast<std::size_t>(a) * n + b] = encode(p);
      }
    }
  }

  // Locates zero and one, fills the negation table, and (optionally) checks
  // every ring axiom, reporting the first violated instance.
  void finish_table_ring(bool verify) {
    std::uint32_t n = order_;
    auto a_ = [&](Elem a, Elem b) {
      return add_table_[static_cast<std::size_t>(a) * n + b];
    };
    auto m_ = [&](Elem a, Elem b) {
      return mul_table_[static_cast<std::size_t>(a) * n + b];
    };
    bool found_zero = false, found_one = false;
    for (Elem e = 0; e < n; ++e) {
      bool is_zero = true, is_one = true;
      for (Elem x = 0; x < n; ++x) {
        if (a_(e, x) != x) is_zero = false;
        if (m_(e, x) != x) is_one = false;
        if (!is_zero && !is_one) break;
      }
      if (is_zero && !found_zero) {
        zero_ = e;
        found_zero = true;
      }
      if (is_one && !found_one) {
        one_ = e;
        found_one = true;
      }
    }
    if (!found_zero)
      throw ContractError("ring axioms: no additive identity in " + label_);
    if (!found_one)
      throw ContractError("ring axioms: no multiplicative identity in " +
                          label_);
    neg_table_.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      bool found = false;
      for (Elem y = 0; y < n; ++y)
        if (a_(x, y) == zero_) {
          neg_table_[x] = y;
          found = true;
          break;
        }
      if (!found)
        throw ContractError("ring axioms: element " + std::to_string(x) +
                            " has no additive inverse in " + label_);
    }
    if (!verify) return;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (a_(x, y) != a_(y, x))
          throw ContractError("ring axioms: addition not commutative at (" +
                              std::to_string(x) + "," + std::to_string(y) +
                              ") in " + label_);
        if (m_(x, y) != m_(y, x))
          throw ContractError(
              "ring axioms: multiplication not commutative at (" +
              std::to_string(x) + "," + std::to_string(y) + ") in " + label_);
      }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          if (a_(a_(x, y), z) != a_(x, a_(y, z)))
            throw ContractError("ring axioms: addition not associative at (" +
                                std::to_string(x) + "," + std::to_string(y) +
                                "," + std::to_string(z) + ") in " + label_);
          if (m_(m_(x, y), z) != m_(x, m_(y, z)))
            throw ContractError(
                "ring axioms: multiplication not associative at (" +
                std::to_string(x) + "," + std::to_string(y) + "," +
                std::to_string(z) + ") in " + label_);
          if (m_(x, a_(y, z)) != a_(m_(x, y), m_(x, z)))
            throw ContractError("ring axioms: distributivity fails at (" +
                                std::to_string(x) + "," + std::to_string(y) +
                                "," + std::to_string(z) + ") in " + label_);
        }
  }

  RingKind kind_ = RingKind::Modular;
  std::uint32_t order_ = 1;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<FiniteRing> factors_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t poly_m_ = 0;
  std::vector<std::uint32_t> poly_f_;
  std::vector<Elem> add_table_, mul_table_, neg_table_;
  std::vector<std::string> names_;
  std::string label_;
};

}  // namespace uzg
