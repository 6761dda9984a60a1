#include "lcklab/rational.hpp"

#include <cctype>

#include "lcklab/error.hpp"

namespace lcklab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::LeeFormNotClosed: return "LeeFormNotClosed";
    case ErrorCode::NotTwistedClosed: return "NotTwistedClosed";
    case ErrorCode::NotJInvariant: return "NotJInvariant";
    case ErrorCode::DegenerateOmega: return "DegenerateOmega";
    case ErrorCode::MetricNotPD: return "MetricNotPD";
    case ErrorCode::DecompositionFails: return "DecompositionFails";
    case ErrorCode::BadComplexStructure: return "BadComplexStructure";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace lcklab
