#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radial {

enum class ErrorCode {
  ParseError,
  NotATree,
  DuplicateId,
  RootHasZeroInjection,
  NegativeCost,
  DanglingEdge,
  MissingCost,
  InvalidParameter,
  UnknownNode,
  UnknownEdge,
  RootHasNoParentEdge,
  EmptyList,
  NodeNotCritical,
  CombinatorialLimit,
  MismatchedMeasuredSets,
  InstanceTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radial
