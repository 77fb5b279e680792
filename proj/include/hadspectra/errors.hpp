// Copyright 2026 The hadspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADSPECTRA_ERRORS_HPP_
#define HADSPECTRA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hadspectra
{

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

class SingularMatrix : public Error
{
public:
  using Error::Error;
};

/// A size or parameter lies outside the supported range.
class OutOfRange : public Error
{
public:
  using Error::Error;
};

class DivisionByZero : public Error
{
public:
  using Error::Error;
};

class NonExactDivision : public Error
{
public:
  using Error::Error;
};

/// Integer characteristic/minimal polynomials need scalars in {+1, -1}.
class UnsupportedRootOrder : public Error
{
public:
  using Error::Error;
};

class NotScalarAction : public Error
{
public:
  using Error::Error;
};

/// Dense oracle paths refuse matrices above their size cap.
class SizeCap : public Error
{
public:
  using Error::Error;
};

class EvenPower : public Error
{
public:
  using Error::Error;
};

class IrrationalScaling : public Error
{
public:
  using Error::Error;
};

class UnsoundPair : public Error
{
public:
  using Error::Error;
};

class NonOddExponent : public Error
{
public:
  using Error::Error;
};

class BadRootOrder : public Error
{
public:
  using Error::Error;
};

class InvalidInput : public Error
{
public:
  using Error::Error;
};

/// Raised by certify(); check() names the first check that failed.
class CertificateFailure : public Error
{
public:
  CertificateFailure(std::string check, const std::string & detail)
  : Error("certificate check '" + check + "' failed: " + detail), check_(std::move(check))
  {
  }

  const std::string & check() const noexcept { return check_; }

private:
  std::string check_;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace hadspectra

#endif  // HADSPECTRA_ERRORS_HPP_
