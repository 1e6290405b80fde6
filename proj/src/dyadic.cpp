#include "dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "error.hpp"

namespace tgf {

namespace {

BigInt pow2(std::int64_t e) {
  BigInt one = 1;
  return one << static_cast<unsigned>(e);
}

// Exponents this large cannot arise from desk-scale inputs; reject early so a
// hostile literal cannot force gigantic shifts.
constexpr std::int64_t kMaxParsedExponent = 1000000;

}  // namespace

Dyadic Dyadic::normalized(BigInt numerator, std::int64_t exponent) {
  if (exponent < 0) {
    throw Error(ErrorCode::kInternal, "dyadic exponent must be non-negative");
  }
  Dyadic d;
  if (numerator == 0) {
    return d;
  }
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  d.num_ = std::move(numerator);
  d.exp_ = exponent;
  return d;
}

Dyadic Dyadic::parse(const std::string& text) {
  auto fail = [&text]() -> void {
    throw Error(ErrorCode::kNonDyadic, "not a dyadic literal: \"" + text + "\"");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == digits_begin) {
    fail();
  }
  BigInt num(text.substr(digits_begin, i - digits_begin));
  if (negative) {
    num = -num;
  }
  std::int64_t expo = 0;
  if (i != text.size()) {
    if (text.compare(i, 3, "/2^") != 0) {
      fail();
    }
    i += 3;
    std::size_t exp_begin = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == exp_begin || i != text.size()) {
      fail();
    }
    const std::string exp_digits = text.substr(exp_begin);
    if (exp_digits.size() > 7) {
      fail();
    }
    expo = std::stoll(exp_digits);
    if (expo > kMaxParsedExponent) {
      fail();
    }
  }
  return normalized(std::move(num), expo);
}

BigInt Dyadic::floor_int() const {
  if (exp_ == 0) {
    return num_;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(num_, pow2(exp_), q, r);
  if (r != 0 && num_ < 0) {
    --q;
  }
  return q;
}

BigInt Dyadic::ceil_int() const {
  return -((-*this).floor_int());
}

Dyadic Dyadic::mul_pow2(std::int64_t e) const {
  if (e >= 0) {
    return normalized(num_ * pow2(e), exp_);
  }
  return normalized(num_, exp_ - e);
}

std::string Dyadic::str() const {
  if (exp_ == 0) {
    return num_.str();
  }
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const std::int64_t k = std::max(a.exp_, b.exp_);
  BigInt n = a.num_ * pow2(k - a.exp_) + b.num_ * pow2(k - b.exp_);
  return Dyadic::normalized(std::move(n), k);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  return a + (-b);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::normalized(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.num_ = -num_;
  d.exp_ = exp_;
  return d;
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exp_ == b.exp_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::int64_t k = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ * pow2(k - a.exp_);
  const BigInt rhs = b.num_ * pow2(k - b.exp_);
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int sign(const Dyadic& a) {
  if (a.numerator() == 0) {
    return 0;
  }
  return a.numerator() < 0 ? -1 : 1;
}

Dyadic abs(const Dyadic& a) {
  return sign(a) < 0 ? -a : a;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& a) {
  return os << a.str();
}

}  // namespace tgf
