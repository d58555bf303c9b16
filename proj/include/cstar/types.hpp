#ifndef CSTAR_TYPES_HPP
#define CSTAR_TYPES_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace cstar {

namespace bmp = boost::multiprecision;

// Expression templates are switched off: Eigen expects scalar-valued
// arithmetic results.
using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

using Eigen::Dynamic;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Dynamic, Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Dynamic>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using IntRowVector = RowVectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

using RatPoint = Eigen::Matrix<Rational, 2, 1>;
using IntPoint = Eigen::Matrix<Integer, 2, 1>;

/// Every failure the library reports carries one of these codes; the CLI
/// forwards the name into its error payload.
enum class ErrorCode {
  RankDeficient,
  ZeroVector,
  EmptyInput,
  NotPointed,
  DegenerateSection,
  UnboundedSlice,
  EmptySlice,
  InvalidPolygon,
  NonPrimitiveColumn,
  SlopeOrder,
  DuplicateColumn,
  Redundant,
  IncompleteFan,
  ToricInput,
  BadA,
  MalformedInput,
  NotFano,
  AlphaClassMismatch,
  NoUnitRow,
  NotUniqueInteriorPoint,
  NoSignChange,
  Indeterminate,
  NotUniqueCriticalPoint,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// "p/q" (or "p" for integers), the serialized form used everywhere.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace cstar

#endif  // CSTAR_TYPES_HPP
