#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

std::string compose(ErrorCode code, const std::vector<std::string>& subjects,
                    const std::string& detail) {
  std::string out(to_string(code));
  out += '(';
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (i != 0) out += ',';
    out += subjects[i];
  }
  out += ')';
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kVertexMissing: return "VertexMissing";
    case ErrorCode::kVertexRepeated: return "VertexRepeated";
    case ErrorCode::kNonEdgeStep: return "NonEdgeStep";
    case ErrorCode::kEmptyPath: return "EmptyPath";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kInfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::kInvalidLayout: return "InvalidLayout";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::vector<std::string> subjects, const std::string& detail)
    : std::runtime_error(compose(code, subjects, detail)),
      code_(code),
      subjects_(std::move(subjects)) {}

}  // namespace pathlayout
