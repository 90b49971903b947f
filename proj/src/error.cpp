//  Copyright 2026 The latgraph Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latgraph/error.hpp"

#include <cstdlib>
#include <string>

namespace latgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotQuasiOrder: return "NotQuasiOrder";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NoZero: return "NoZero";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoCover: return "NoCover";
    case ErrorCode::NotHereditary: return "NotHereditary";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

std::size_t guard_limit(std::size_t default_limit) {
  const char* raw = std::getenv("LATGRAPH_MAX_ELEMS");
  if (raw == nullptr || *raw == '\0') return default_limit;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return default_limit;
  return static_cast<std::size_t>(value);
}

void enforce_guard(std::size_t n, std::size_t default_limit,
                   std::string_view operation) {
  const std::size_t limit = guard_limit(default_limit);
  if (n > limit) {
    throw Error(ErrorCode::CarrierTooLarge,
                std::string(operation) + ": size " + std::to_string(n) +
                    " exceeds the enumeration limit " + std::to_string(limit));
  }
}

void enforce_subset_guard(std::size_t n, std::size_t default_limit,
                          std::string_view operation) {
  constexpr std::size_t kHardCeiling = 30;
  enforce_guard(n, default_limit, operation);
  if (n > kHardCeiling) {
    throw Error(ErrorCode::CarrierTooLarge,
                std::string(operation) + ": subset enumeration over " + std::to_string(n) +
                    " elements is beyond the hard ceiling of 30");
  }
}

}  // namespace latgraph
