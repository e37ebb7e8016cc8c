#include "ncg/finfield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg::ff {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Dense polynomials over GF(p) used only while building a field.
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                            std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return prime_poly_mod(std::move(r), m, p);
}

PrimePoly monic_from_code(std::uint64_t code, unsigned deg, std::uint64_t p) {
  PrimePoly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[deg] = 1;
  return f;
}

bool prime_poly_irreducible(const PrimePoly& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      if (prime_poly_mod(f, monic_from_code(c, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  auto f = prime_factors(q);
  if (f.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  unsigned k = 0;
  std::uint64_t r = q;
  while (r > 1) {
    r /= f[0];
    ++k;
  }
  return {f[0], k};
}

Field::Field(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  PrimePoly mod;
  if (k == 1) {
    mod = {0, 1};
  } else {
    std::uint64_t count = q;  // p^k candidate monic polynomials
    for (std::uint64_t c = 0; c < count; ++c) {
      PrimePoly f = monic_from_code(c, k, p);
      if (f[0] == 0) continue;
      if (prime_poly_irreducible(f, p)) {
        mod = std::move(f);
        break;
      }
    }
  }
  modulus_.assign(mod.begin(), mod.end());

  auto to_poly = [&](std::uint64_t code) {
    PrimePoly f(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      f[i] = code % p;
      code /= p;
    }
    trim(f);
    return f;
  };
  auto to_code = [&](const PrimePoly& f) {
    std::uint64_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return static_cast<Code>(code);
  };
  auto slow_mul = [&](std::uint64_t a, std::uint64_t b) -> Code {
    if (k == 1) return static_cast<Code>(mulmod(a, b, p));
    return to_code(prime_poly_mulmod(to_poly(a), to_poly(b), mod, p));
  };
  auto slow_pow = [&](std::uint64_t a, std::uint64_t e) -> Code {
    Code r = 1;
    Code base = static_cast<Code>(a);
    while (e) {
      if (e & 1) r = slow_mul(r, base);
      base = slow_mul(base, base);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t m = q - 1;
  const auto ell = prime_factors(m);
  primitive_ = 1;
  if (m > 1) {
    for (std::uint64_t c = 2; c < q; ++c) {
      bool ok = true;
      for (auto l : ell) {
        if (slow_pow(c, m / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = static_cast<Code>(c);
        break;
      }
    }
  }

  exp_.assign(2 * m, 0);
  log_.assign(q, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    exp_[i] = x;
    exp_[i + m] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, primitive_);
  }

  neg_.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    std::uint64_t r = 0, place = 1, t = a;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t d = t % p;
      t /= p;
      r += ((p - d) % p) * place;
      place *= p;
    }
    neg_[a] = static_cast<Code>(r);
  }

  // Zech table: log of 1 + g^i, computed with digit-wise addition.
  zech_.assign(m, -1);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t a = exp_[i], r = 0, place = 1;
    for (unsigned j = 0; j < k; ++j) {
      std::uint64_t d = a % p + (j == 0 ? 1 : 0);
      a /= p;
      r += (d % p) * place;
      place *= p;
    }
    zech_[i] = r == 0 ? -1 : static_cast<std::int32_t>(log_[r]);
  }
}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (u128{1} << 63)) throw std::overflow_error("field order p^k does not fit in 63 bits");
  }
  if (q > kMaxOrder) throw CapExceeded("field order " + std::to_string(static_cast<std::uint64_t>(q)) + " exceeds cap 65536");

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = FieldPtr(new Field(p, k));
  return slot;
}

Code Field::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - static_cast<std::uint32_t>(p_) : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t m = q_ - 1;
  std::uint32_t la = log_[a], lb = log_[b];
  std::uint32_t d = lb >= la ? lb - la : lb + m - la;
  std::int32_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[la + static_cast<std::uint32_t>(z)];
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint32_t l = log_[a];
  return l == 0 ? 1 : exp_[(q_ - 1) - l];
}

Code Field::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t m = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (((e % m) + m) % m)) % m;
  return exp_[static_cast<std::size_t>(r)];
}

Code Field::from_int(std::int64_t v) const {
  std::int64_t p = static_cast<std::int64_t>(p_);
  return static_cast<Code>(((v % p) + p) % p);
}

std::vector<Code> Field::digits(Code a) const {
  std::vector<Code> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<Code>(a % p_);
    a = static_cast<Code>(a / p_);
  }
  return d;
}

Code Field::from_digits(const std::vector<Code>& d) const {
  if (d.size() > k_) throw std::invalid_argument("too many coefficients for field element");
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw std::invalid_argument("coefficient out of range");
    code = code * p_ + d[i];
  }
  return static_cast<Code>(code);
}

std::uint32_t Field::log(Code a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

std::uint32_t Field::order(Code a) const {
  if (a == 0) throw std::domain_error("multiplicative order of zero");
  std::uint32_t m = q_ - 1;
  std::uint32_t l = log_[a];
  std::uint32_t g = m, b = l;
  while (b) {
    std::uint32_t t = g % b;
    g = b;
    b = t;
  }
  return m / g;
}

Code Field::frobenius(Code a, unsigned times) const {
  Code r = a;
  for (unsigned i = 0; i < times; ++i) r = pow(r, static_cast<std::int64_t>(p_));
  return r;
}

std::string Field::to_string(Code a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '(';
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {
void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(f_, o.f_);
  return {f_, f_->add(c_, o.c_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(f_, o.f_);
  return {f_, f_->sub(c_, o.c_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(f_, o.f_);
  return {f_, f_->mul(c_, o.c_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(f_, o.f_);
  return {f_, f_->div(c_, o.c_)};
}

FieldPtr field_make(std::uint64_t p, unsigned k) { return Field::make(p, k); }

FieldElement primitive_element(const FieldPtr& f) { return {f, f->primitive()}; }

std::uint32_t element_order(const FieldElement& x) { return x.field()->order(x.code()); }

}  // namespace ncg::ff
