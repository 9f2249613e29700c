#ifndef NONINC_GF_HPP
#define NONINC_GF_HPP

// Table-driven arithmetic in GF(p^k).
//
// Elements are encoded by the integer index sum(c_i * p^i) of their
// polynomial representative c_0 + c_1 x + ... + c_{k-1} x^{k-1}.  Index 0 is
// the zero element and index 1 is the identity.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "noninc/error.hpp"

namespace noninc {

inline constexpr std::uint32_t max_field_order = 1u << 16;

struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), lowest coefficient first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(out), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Monic polynomial of degree k over GF(p), coefficients lowest first.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (k == 2) {
    for (std::uint32_t x = 0; x < p; ++x) {
      const std::uint64_t v = (f[0] + static_cast<std::uint64_t>(f[1]) * x +
                               static_cast<std::uint64_t>(x) * x) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for primes r | k.
  const Poly x{0, 1};
  auto frobenius_iter = [&](std::size_t times) {
    Poly cur = x;
    for (std::size_t i = 0; i < times; ++i) cur = poly_powmod(cur, p, f, p);
    return cur;
  };
  if (poly_sub(frobenius_iter(k), x, p) != Poly{}) return false;
  for (std::uint32_t r : prime_factors(static_cast<std::uint32_t>(k))) {
    Poly g = poly_gcd(f, poly_sub(frobenius_iter(k / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Characteristic, degree and defining polynomial of a finite field.
/// `modulus` lists coefficients from the constant term up to the leading 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const {
    std::uint32_t n = 1;
    for (std::uint32_t i = 0; i < k; ++i) n *= p;
    return n;
  }

  /// Single-token description, e.g. `p=2:k=4:modulus=1,1,0,0,1`.
  std::string describe() const {
    std::ostringstream os;
    os << "p=" << p << ":k=" << k << ":modulus=";
    for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
    return os.str();
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class FieldTable {
 public:
  /// Builds GF(p^k).  Without a modulus the least monic irreducible
  /// polynomial (ordered by its coefficient index) is used.
  static FieldTable build(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (k < 1) throw error(errc::bad_parameters, "extension degree must be at least 1");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      order *= p;
      if (order > max_field_order)
        throw error(errc::order_too_large, "field order exceeds 2^16");
    }

    FieldSpec spec{p, k, {}};
    if (modulus) {
      if (modulus->size() != k + 1 || modulus->back() != 1)
        throw error(errc::bad_parameters, "modulus must be monic of degree " + std::to_string(k));
      for (auto c : *modulus)
        if (c >= p) throw error(errc::bad_parameters, "modulus coefficient out of range");
      if (!detail::is_irreducible(*modulus, p))
        throw error(errc::reducible_modulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
      spec.modulus = *modulus;
    } else {
      spec.modulus = least_irreducible(p, k, static_cast<std::uint32_t>(order));
    }
    return FieldTable(std::move(spec));
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const {
    if (index >= order_) throw error(errc::index_out_of_range, "field element index out of range");
    return {index};
  }
  /// Primitive element used for the log/exp tables.
  FieldElement generator() const { return {exp_[1]}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (spec_.p == 2) return {a.value ^ b.value};
    return {digitwise(a.value, b.value, false)};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    if (spec_.p == 2) return {a.value ^ b.value};
    return {digitwise(a.value, b.value, true)};
  }
  FieldElement neg(FieldElement a) const { return sub(zero(), a); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    return {exp_[log_[a.value] + log_[b.value]]};
  }
  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw error(errc::zero_coefficient, "zero has no inverse");
    return {exp_[(order_ - 1 - log_[a.value]) % (order_ - 1)]};
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.value == 0) return zero();
    return {exp_[(log_[a.value] * (e % (order_ - 1))) % (order_ - 1)]};
  }

  /// Discrete log with respect to generator(); `a` must be nonzero.
  std::uint32_t log(FieldElement a) const { return log_[a.value]; }

  /// Absolute trace GF(2^k) -> GF(2): a + a^2 + ... + a^(2^(k-1)).
  bool trace(FieldElement a) const {
    if (spec_.p != 2) throw error(errc::wrong_characteristic, "trace requires characteristic 2");
    FieldElement sum = zero(), term = a;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
      sum = add(sum, term);
      term = mul(term, term);
    }
    return sum.value == 1;
  }

  /// True iff x^2 + b x + 1 has no root in GF(2^k), i.e. Tr(b^-2) = 1.
  bool quadratic_irreducible(FieldElement b) const {
    if (spec_.p != 2) throw error(errc::wrong_characteristic, "quadratic test requires characteristic 2");
    if (b.value == 0) throw error(errc::zero_coefficient, "linear coefficient must be nonzero");
    const FieldElement binv = inv(b);
    return trace(mul(binv, binv));
  }

 private:
  explicit FieldTable(FieldSpec spec) : spec_(std::move(spec)), order_(spec_.order()) {
    build_tables();
  }

  static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k,
                                                      std::uint32_t order) {
    for (std::uint32_t low = 0; low < order; ++low) {
      std::vector<std::uint32_t> f(k + 1, 0);
      for (std::uint32_t i = 0, v = low; i < k; ++i, v /= p) f[i] = v % p;
      f[k] = 1;
      if (detail::is_irreducible(f, p)) return f;
    }
    throw error(errc::reducible_modulus, "no irreducible polynomial found");
  }

  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const {
    const std::uint32_t p = spec_.p;
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      out += ((subtract ? da + p - db : da + db) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  }

  detail::Poly to_poly(std::uint32_t v) const {
    detail::Poly out;
    for (; v > 0; v /= spec_.p) out.push_back(v % spec_.p);
    return out;
  }
  std::uint32_t from_poly(const detail::Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * spec_.p + a[i];
    return v;
  }

  void build_tables() {
    const std::uint32_t n = order_;
    log_.assign(n, 0);
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    if (n == 2) {
      exp_[0] = exp_[1] = exp_[2] = 1;
      return;
    }
    // Find a primitive element by walking powers in the polynomial basis.
    std::vector<std::uint32_t> powers;
    powers.reserve(n - 1);
    for (std::uint32_t cand = 2; cand < n; ++cand) {
      const detail::Poly g = to_poly(cand);
      powers.assign(1, 1);
      detail::Poly cur{1};
      for (;;) {
        cur = detail::poly_mulmod(cur, g, spec_.modulus, spec_.p);
        const std::uint32_t v = from_poly(cur);
        if (v == 1) break;
        powers.push_back(v);
      }
      if (powers.size() == n - 1) break;
    }
    if (powers.size() != n - 1)
      throw error(errc::construction_check_failed, "no primitive element found");
    for (std::uint32_t i = 0; i < n - 1; ++i) {
      exp_[i] = powers[i];
      exp_[i + n - 1] = powers[i];
      log_[powers[i]] = i;
    }
  }

  FieldSpec spec_;
  std::uint32_t order_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Integer exponent v with 2^v = n, if n is a power of two.
inline std::optional<std::uint32_t> log2_exact(std::uint64_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  std::uint32_t v = 0;
  while ((std::uint64_t{1} << v) != n) ++v;
  return v;
}

/// Decomposes n = p^k for prime p, if possible.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t n) {
  if (n < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t k = 0;
  for (std::uint32_t m = n; m > 1; m /= p) {
    if (m % p != 0) return std::nullopt;
    ++k;
  }
  return std::pair{p, k};
}

}  // namespace noninc

#endif  // NONINC_GF_HPP
