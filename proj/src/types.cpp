#include "cstar/types.hpp"

namespace cstar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::UnboundedSlice: return "UnboundedSlice";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NonPrimitiveColumn: return "NonPrimitiveColumn";
    case ErrorCode::SlopeOrder: return "SlopeOrder";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::Redundant: return "Redundant";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::ToricInput: return "ToricInput";
    case ErrorCode::BadA: return "BadA";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::AlphaClassMismatch: return "AlphaClassMismatch";
    case ErrorCode::NoUnitRow: return "NoUnitRow";
    case ErrorCode::NotUniqueInteriorPoint: return "NotUniqueInteriorPoint";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::NotUniqueCriticalPoint: return "NotUniqueCriticalPoint";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  return q.str();
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "not a rational number: '" + text + "'");
  }
}

}  // namespace cstar
