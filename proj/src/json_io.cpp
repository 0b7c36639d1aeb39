#include "ttk/errors.hpp"
#include "ttk/report.hpp"

#include <sstream>

namespace ttk {

char const* err_name(Err code) {
  switch (code) {
    case Err::UnknownId: return "UnknownId";
    case Err::DuplicateId: return "DuplicateId";
    case Err::NotComposable: return "NotComposable";
    case Err::MissingTableEntry: return "MissingTableEntry";
    case Err::DegreeOverflow: return "DegreeOverflow";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::NotAbelian: return "NotAbelian";
    case Err::NotIsomorphism: return "NotIsomorphism";
    case Err::InvalidMorphism: return "InvalidMorphism";
    case Err::NotPointed: return "NotPointed";
    case Err::NotConnected: return "NotConnected";
    case Err::NotSkeletal: return "NotSkeletal";
    case Err::CompositesNotNull: return "CompositesNotNull";
    case Err::NotDefined: return "NotDefined";
    case Err::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Err::InvalidK: return "InvalidK";
    case Err::InvalidChain: return "InvalidChain";
    case Err::IndexOutOfWindow: return "IndexOutOfWindow";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::SecondaryInvalid: return "SecondaryInvalid";
    case Err::NotAResolution: return "NotAResolution";
    case Err::NotAdditive: return "NotAdditive";
    case Err::NoCorrectionFound: return "NoCorrectionFound";
    case Err::NotACocycle: return "NotACocycle";
    case Err::D2Nonzero: return "D2Nonzero";
    case Err::NoXiExists: return "NoXiExists";
    case Err::WindowExceeded: return "WindowExceeded";
    case Err::BasisMismatch: return "BasisMismatch";
    case Err::IllDefinedComposition: return "IllDefinedComposition";
    case Err::InvalidDouble: return "InvalidDouble";
    case Err::UnknownFormat: return "UnknownFormat";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::string Report::to_string() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "ok\n";
    return os.str();
  }
  for (auto const& v : violations) {
    os << v.clause;
    if (!v.where.empty()) {
      os << " at [";
      for (std::size_t i = 0; i < v.where.size(); ++i) {
        if (i) {
          os << ", ";
        }
        os << v.where[i];
      }
      os << "]";
    }
    if (!v.detail.empty()) {
      os << ": " << v.detail;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ttk
