/*
 * Copyright 2026 The atomwall developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATOMWALL_ERRORS_HPP
#define ATOMWALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atomwall {

enum class ErrorCode {
  Config = 1,
  Domain,
  Hierarchy,
  Parameter,
  Pole,
  CutoffRequired,
  WallContact,
  Quadrature,
  CovarianceNotPSD,
  Discretization,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::Config, w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& w)
      : Error(ErrorCode::Parameter, w) {}
};

struct PoleError : Error {
  explicit PoleError(const std::string& w) : Error(ErrorCode::Pole, w) {}
};

struct CutoffRequired : Error {
  explicit CutoffRequired(const std::string& w)
      : Error(ErrorCode::CutoffRequired, w) {}
};

struct WallContact : Error {
  explicit WallContact(const std::string& w)
      : Error(ErrorCode::WallContact, w) {}
};

struct CovarianceNotPSD : Error {
  explicit CovarianceNotPSD(const std::string& w)
      : Error(ErrorCode::CovarianceNotPSD, w) {}
};

struct DiscretizationError : Error {
  explicit DiscretizationError(const std::string& w)
      : Error(ErrorCode::Discretization, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

class HierarchyViolation : public Error {
 public:
  HierarchyViolation(std::string pair, double ratio)
      : Error(ErrorCode::Hierarchy,
              "length-scale hierarchy violated for " + pair + " (ratio " +
                  std::to_string(ratio) + ")"),
        pair_(std::move(pair)),
        ratio_(ratio) {}
  const std::string& pair() const noexcept { return pair_; }
  double ratio() const noexcept { return ratio_; }

 private:
  std::string pair_;
  double ratio_;
};

class QuadratureFailure : public Error {
 public:
  QuadratureFailure(double x, const std::string& w)
      : Error(ErrorCode::Quadrature, w), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

}  // namespace atomwall

#endif
