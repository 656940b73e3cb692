#include "lnz/rational.hpp"

#include <cctype>
#include <ostream>

#include "lnz/error.hpp"

namespace lnz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NonNilpotent: return "NonNilpotent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ElementInDerivedSubalgebra: return "ElementInDerivedSubalgebra";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::SingularChange: return "SingularChange";
    case ErrorCode::RestrictionViolated: return "RestrictionViolated";
    case ErrorCode::EpsilonMismatch: return "EpsilonMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInCatalogForm: return "NotInCatalogForm";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line, int column)
    : std::runtime_error(message), code_(code), line_(line), column_(column) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::SyntaxError, "malformed fraction \"" + std::string(text) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) throw fail();
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::height() const {
  mpz_class a = ::abs(q_.get_num());
  return a > q_.get_den() ? a : mpz_class(q_.get_den());
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lnz
