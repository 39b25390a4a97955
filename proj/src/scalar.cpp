#include "colalg/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "colalg/errors.hpp"

namespace colalg {

namespace {

std::int64_t mod_reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) inverts.
  std::int64_t result = 1, base = a % p, e = static_cast<std::int64_t>(p) - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::residue(std::int64_t value, std::uint32_t prime) {
  Scalar s;
  s.p_ = prime;
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  s.r_ = r < 0 ? r + prime : r;
  return s;
}

Scalar Scalar::reduce_mod(std::uint32_t prime) const {
  if (p_ == prime) return *this;
  if (p_ != 0) throw std::logic_error("cannot reduce a residue into a different prime field");
  std::int64_t den = mod_reduce(q_.get_den(), prime);
  if (den == 0)
    throw std::domain_error("denominator of " + to_string() + " is divisible by " +
                            std::to_string(prime));
  std::int64_t num = mod_reduce(q_.get_num(), prime);
  return residue(num * mod_inverse(den, prime) % prime, prime);
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ += o.q_;
  } else if (p_ == o.p_) {
    r_ = (r_ + o.r_) % p_;
  } else if (p_ == 0) {
    *this = reduce_mod(o.p_) += o;
  } else {
    *this += o.reduce_mod(p_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ *= o.q_;
  } else if (p_ == o.p_) {
    r_ = (r_ * o.r_) % p_;
  } else if (p_ == 0) {
    *this = reduce_mod(o.p_) *= o;
  } else {
    *this *= o.reduce_mod(p_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  if (a.p_ == 0) return a.reduce_mod(b.p_).r_ == b.r_;
  if (b.p_ == 0) return b.reduce_mod(a.p_).r_ == a.r_;
  return false;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(mpq_class(1) / q_);
  return residue(mod_inverse(r_, p_), p_);
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Scalar result = p_ == 0 ? Scalar(1) : residue(1, p_);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Field Field::prime(std::uint32_t p, bool allow_char2) {
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  if (p == 2 && !allow_char2)
    throw InputError("characteristic 2 is not supported (pass the explicit char-2 flag to override)");
  return Field(p);
}

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  return Scalar::residue(v, p_);
}

Scalar Field::coerce(const Scalar& s) const {
  if (s.characteristic() == p_) return s;
  if (p_ == 0) throw std::logic_error("cannot lift a residue to a rational");
  return s.reduce_mod(p_);
}

Scalar Field::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw InputError("malformed scalar '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw InputError("malformed scalar '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw InputError("malformed scalar '" + std::string(text) + "'");
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
      throw InputError("scalar '" + std::string(text) + "' must carry its sign on the numerator");
    den = parse_int(den_text);
    if (den == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw InputError("scalar '" + std::string(text) + "' is not in lowest terms");
  }
  Scalar q(mpq_class(num, den));
  if (p_ == 0) return q;
  try {
    return q.reduce_mod(p_);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

}  // namespace colalg
