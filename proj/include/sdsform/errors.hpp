/* errors.hpp
 *
 * Exception taxonomy for the library.  Two families matter to the CLI:
 * ConfigError maps to exit code 1, NumericalError (and subclasses) to
 * exit code 2.  Everything carries a plain message naming the violated
 * invariant.
 */
#ifndef SDSFORM_ERRORS_HPP
#define SDSFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdsform {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* bad user input: unparsable config, invalid parameter ranges */
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/* a numerical routine could not deliver what its contract promises */
struct NumericalError : Error {
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/* geometry */
struct DegenerateSpacetime : NumericalError {
  explicit DegenerateSpacetime(const std::string& msg) : NumericalError(msg) {}
};
struct RootBracketFailure : NumericalError {
  explicit RootBracketFailure(const std::string& msg) : NumericalError(msg) {}
};

/* block operators */
struct SectorMismatch : NumericalError {
  explicit SectorMismatch(const std::string& msg) : NumericalError(msg) {}
};

/* zero modes */
struct RankDeficiency : NumericalError {
  explicit RankDeficiency(const std::string& msg) : NumericalError(msg) {}
};

/* trapping */
struct HorizonDomain : NumericalError {
  explicit HorizonDomain(const std::string& msg) : NumericalError(msg) {}
};
struct DegenerateTrapping : NumericalError {
  explicit DegenerateTrapping(const std::string& msg) : NumericalError(msg) {}
};

/* Kerr-de Sitter */
struct AxisSingularity : NumericalError {
  explicit AxisSingularity(const std::string& msg) : NumericalError(msg) {}
};

/* evolution */
struct CflViolation : NumericalError {
  explicit CflViolation(const std::string& msg) : NumericalError(msg) {}
};
struct NonfiniteField : NumericalError {
  explicit NonfiniteField(const std::string& msg) : NumericalError(msg) {}
};

/* mode scan */
struct SeriesDivergence : NumericalError {
  explicit SeriesDivergence(const std::string& msg) : NumericalError(msg) {}
};
struct IndicialCollision : NumericalError {
  explicit IndicialCollision(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace sdsform

#endif
