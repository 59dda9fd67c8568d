#pragma once

#include <stdexcept>
#include <string>

namespace gfl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A color index outside 1..k, or two palettes that do not agree.
class PaletteError : public Error {
public:
  using Error::Error;
};

class SelfLoopError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

/// Malformed .gcg header or token.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Wrong number of color entries in a .gcg body.
class LengthError : public Error {
public:
  using Error::Error;
};

class ParamError : public Error {
public:
  using Error::Error;
};

class OracleSizeError : public Error {
public:
  using Error::Error;
};

/// Parts overlap, leave a vertex uncovered, or are empty.
class PartitionShapeError : public Error {
public:
  using Error::Error;
};

/// Raised when a structure that must exist was not found. Always a bug.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace gfl
