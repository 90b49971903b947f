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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latgraph {

enum class ErrorCode {
  DuplicateName,
  UnknownName,
  CycleDetected,
  NotQuasiOrder,
  InvalidOrder,
  DuplicateMember,
  CarrierMismatch,
  EmptyFamily,
  NotSaturated,
  CarrierTooLarge,
  NoZero,
  NoJoin,
  NoMeet,
  NoCover,
  NotHereditary,
  BadPair,
  KindMismatch,
  ParseError,
  UnknownCatalogName,
  SizeOutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Effective limit for an exponential enumeration. The environment variable
/// LATGRAPH_MAX_ELEMS, when set to a positive integer, replaces every default.
std::size_t guard_limit(std::size_t default_limit);

/// Throws CarrierTooLarge when n exceeds guard_limit(default_limit).
void enforce_guard(std::size_t n, std::size_t default_limit,
                   std::string_view operation);

/// enforce_guard for enumerations over all subsets of an n-element set;
/// additionally refuses n > 30 whatever the environment says.
void enforce_subset_guard(std::size_t n, std::size_t default_limit,
                          std::string_view operation);

}  // namespace latgraph
