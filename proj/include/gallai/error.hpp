#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gallai {

enum class ErrorKind {
  // graph-core
  MalformedHeader,
  TruncatedBody,
  InvalidByte,
  TrailingBytes,
  OrderTooLarge,
  InvalidEdge,
  InvalidParams,
  ConnectivityRetriesExhausted,
  InvalidPath,
  // path-engine
  EmptyGraph,
  OrderTooLargeForOracle,
  NodeBudgetExceeded,
  // intersect-lab
  PathsFromDifferentGraphs,
  DisconnectedGraph,
  TruncatedReport,
  // surgery-lab
  NotDisjoint,
  ConnectorTouchesInterior,
  EndpointNotOnPath,
  NotSingleIntersection,
  WrongParity,
  IndexMismatch,
  PremiseViolated,
  // campaign
  InvalidConfig,
  OutputUnwritable,
  ParseError,
  FileUnreadable,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gallai
