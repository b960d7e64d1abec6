#include "arkimex/errors.hpp"

#include <sstream>

namespace arkimex {

ParseError::ParseError(std::string message, std::size_t line, std::string field)
    : Error([&] {
        std::ostringstream os;
        os << message;
        if (line > 0) os << " (line " << line;
        if (!field.empty()) os << (line > 0 ? ", " : " (") << "field " << field;
        if (line > 0 || !field.empty()) os << ")";
        return os.str();
      }()),
      line_(line),
      field_(std::move(field)) {}

InvariantError::InvariantError(const std::string& method, const std::string& check)
    : Error("method " + method + ": " + check), method_(method), check_(check) {}

UnknownMethodError::UnknownMethodError(const std::string& name)
    : Error("unknown method: " + name) {}

SingularMatrixError::SingularMatrixError(std::size_t block, std::size_t pivot)
    : NumericalError("singular tridiagonal factorization in block " + std::to_string(block) +
                     " at pivot " + std::to_string(pivot)),
      block_(block),
      pivot_(pivot) {}

NewtonFailure::NewtonFailure(int iterations, double last_increment_norm)
    : NumericalError("Newton iteration failed after " + std::to_string(iterations) +
                     " iterations (last increment norm " + std::to_string(last_increment_norm) +
                     ")"),
      iterations_(iterations),
      last_increment_norm_(last_increment_norm) {}

}  // namespace arkimex
