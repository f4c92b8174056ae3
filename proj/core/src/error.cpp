#include "cubewalk/error.hpp"

namespace cubewalk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonProlongable: return "NonProlongable";
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::InvalidCF: return "InvalidCF";
    case ErrorKind::NotIrrational: return "NotIrrational";
    case ErrorKind::SlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidDigits: return "InvalidDigits";
    case ErrorKind::AdjacentOnes: return "AdjacentOnes";
    case ErrorKind::LeadingZero: return "LeadingZero";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::InvalidLanguage: return "InvalidLanguage";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "UnknownError";
}

}  // namespace cubewalk
