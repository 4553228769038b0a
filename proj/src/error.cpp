#include "resq/error.hpp"

namespace resq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NonRealSpectrum: return "NonRealSpectrum";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace resq
