#include "lck/scalar.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "lck/errors.hpp"

namespace lck {

namespace {

double tolerance_from_env() {
  if (const char* env = std::getenv("LCK_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e-9;
}

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> slot{tolerance_from_env()};
  return slot;
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

double tolerance() { return tolerance_slot().load(std::memory_order_relaxed); }

void set_tolerance(double eps) {
  if (!(eps > 0)) throw DomainError("tolerance must be positive");
  tolerance_slot().store(eps, std::memory_order_relaxed);
}

Backend backend_from_env() {
  const char* env = std::getenv("LCK_BACKEND");
  if (env == nullptr) return Backend::exact;
  const std::string_view v(env);
  if (v == "float") return Backend::floating;
  if (v == "exact" || v.empty()) return Backend::exact;
  throw ParseError("LCK_BACKEND must be 'exact' or 'float', got '" + std::string(v) + "'");
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  const std::string num_s(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

const mpq_class& Scalar::exact() const {
  if (!is_exact()) throw DomainError("exact value requested from a floating scalar");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == Backend::floating) return floating(to_double());
  if (is_exact()) return *this;
  return Scalar(mpq_class(std::get<double>(value_)));
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::fabs(std::get<double>(value_)) <= tolerance();
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  if (is_zero()) return 0;
  return std::get<double>(value_) > 0 ? 1 : -1;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::sqrt() const {
  if (sign() < 0) throw DomainError("square root of a negative scalar");
  if (is_exact()) {
    const mpq_class& q = std::get<mpq_class>(value_);
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpz_class n = ::sqrt(mpz_class(q.get_num()));
      mpz_class d = ::sqrt(mpz_class(q.get_den()));
      return Scalar(mpq_class(n, d));
    }
  }
  return floating(std::sqrt(std::max(0.0, to_double())));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return floating(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    value_ = to_double() + o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    value_ = to_double() - o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    value_ = to_double() * o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() && sgn(std::get<mpq_class>(o.value_)) == 0) throw DomainError("division by zero");
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    if (o.to_double() == 0.0) throw DomainError("division by zero");
    value_ = to_double() / o.to_double();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return (a - b).is_zero();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Scalar::identical(const Scalar& o) const {
  if (is_exact() != o.is_exact()) return false;
  if (is_exact()) return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
  return std::get<double>(value_) == std::get<double>(o.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace lck
