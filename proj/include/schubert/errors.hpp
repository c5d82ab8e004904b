#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

// Root of every failure raised by the library. The CLI maps these onto
// exit codes; everything else is a bug.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAPermutation : public Error { public: using Error::Error; };
class InvalidCode : public Error { public: using Error::Error; };
class TooManyWords : public Error { public: using Error::Error; };
class NotReduced : public Error { public: using Error::Error; };
class AmbientTooSmall : public Error { public: using Error::Error; };
class NotDivisible : public Error { public: using Error::Error; };
class ResidualNonzero : public Error { public: using Error::Error; };
class InternalMismatch : public Error { public: using Error::Error; };
class DenominatorShapeViolation : public Error { public: using Error::Error; };
class NotHomogeneous : public Error { public: using Error::Error; };
class SearchSpaceTooLarge : public Error { public: using Error::Error; };

class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string& what, std::string log)
      : Error(what), log_(std::move(log)) {}
  const std::string& search_log() const { return log_; }

private:
  std::string log_;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace schubert
