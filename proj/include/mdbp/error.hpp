// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <stdexcept>
#include <string>

namespace mdbp {

enum class ErrorCode {
  kTooFewVertices,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kEmptyCommunity,
  kInvalidPartition,
  kNoEdges,
  kGraphTooLarge,
  kUnknownRow,
  kUnknownVariable,
  kInvalidModel,
  kNumericalBreakdown,
  kAllVerticesExcluded,
  kInvalidBranchSet,
  kNoFractionalPair,
  kParseError,
  kInvalidArgument,
  kIoError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Single exception type for the library; the code identifies the failure
/// class and maps one-to-one onto the C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mdbp
