#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathlayout {

enum class ErrorCode {
  kCycleDetected,
  kSelfLoop,
  kVertexOutOfRange,
  kUnknownVertex,
  kVertexMissing,
  kVertexRepeated,
  kNonEdgeStep,
  kEmptyPath,
  kMalformedLine,
  kInfeasibleDegree,
  kInvalidLayout,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `subjects` carries the offending
// vertex tokens (or the line number for parse errors) so callers can report
// them without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::vector<std::string> subjects, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& subjects() const noexcept { return subjects_; }

 private:
  ErrorCode code_;
  std::vector<std::string> subjects_;
};

}  // namespace pathlayout
