#ifndef MINGRP_ERROR_HPP
#define MINGRP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mingrp
{

// Error categories map one-to-one onto CLI exit codes (see tools/cli.cpp).

class DegreeMismatch : public std::invalid_argument
{
public:
  explicit DegreeMismatch(std::string const &what)
  : std::invalid_argument(what)
  {}
};

// An exhaustive computation would exceed its caller-supplied order budget.
class LimitExceeded : public std::runtime_error
{
public:
  explicit LimitExceeded(std::string const &what)
  : std::runtime_error(what)
  {}
};

class ParseError : public std::invalid_argument
{
public:
  explicit ParseError(std::string const &what)
  : std::invalid_argument(what)
  {}
};

// Parsed fine, but outside the domain of nonabelian simple group names
// (or a q that is not a prime power).
class NotSimpleName : public ParseError
{
public:
  explicit NotSimpleName(std::string const &what)
  : ParseError(what)
  {}
};

class OverflowError : public ParseError
{
public:
  explicit OverflowError(std::string const &what)
  : ParseError(what)
  {}
};

class Unsupported : public std::runtime_error
{
public:
  explicit Unsupported(std::string const &what)
  : std::runtime_error(what)
  {}
};

class FieldError : public std::invalid_argument
{
public:
  explicit FieldError(std::string const &what)
  : std::invalid_argument(what)
  {}
};

class NotMember : public std::invalid_argument
{
public:
  explicit NotMember(std::string const &what)
  : std::invalid_argument(what)
  {}
};

class NotNormal : public std::invalid_argument
{
public:
  explicit NotNormal(std::string const &what)
  : std::invalid_argument(what)
  {}
};

class IdentificationError : public std::runtime_error
{
public:
  explicit IdentificationError(std::string const &what)
  : std::runtime_error(what)
  {}
};

} // namespace mingrp

#endif // MINGRP_ERROR_HPP
