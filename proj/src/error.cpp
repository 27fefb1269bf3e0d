#include "gallai/error.hpp"

namespace gallai {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedBody: return "TruncatedBody";
    case ErrorKind::InvalidByte: return "InvalidByte";
    case ErrorKind::TrailingBytes: return "TrailingBytes";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ConnectivityRetriesExhausted: return "ConnectivityRetriesExhausted";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::OrderTooLargeForOracle: return "OrderTooLargeForOracle";
    case ErrorKind::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorKind::PathsFromDifferentGraphs: return "PathsFromDifferentGraphs";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::TruncatedReport: return "TruncatedReport";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::ConnectorTouchesInterior: return "ConnectorTouchesInterior";
    case ErrorKind::EndpointNotOnPath: return "EndpointNotOnPath";
    case ErrorKind::NotSingleIntersection: return "NotSingleIntersection";
    case ErrorKind::WrongParity: return "WrongParity";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::PremiseViolated: return "PremiseViolated";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::OutputUnwritable: return "OutputUnwritable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileUnreadable: return "FileUnreadable";
  }
  return "Unknown";
}

}  // namespace gallai
