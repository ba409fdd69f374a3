/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TBELYI_ERROR_HPP
#define TBELYI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tbelyi {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroPolynomial,
  NotOnCurve,
  SingularCurve,
  SingularPoint,
  PrecisionExhausted,
  ParseError,
  ZeroDenominator,
  ConstantFunction,
  UnresolvedFiber,
  CurveMismatch,
  NotAGroup,
  UnsupportedForm,
  FiberSumMismatch,
  FileNotFound,
  SchemaError,
  IoError,
  InvalidArgument,
  Timeout,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tbelyi

#endif
