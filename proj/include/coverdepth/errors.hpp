// Error types shared across the library. Every throwing precondition in the
// public API uses one of these so the CLI can map failures to exit codes.

#ifndef COVERDEPTH_ERRORS_HPP
#define COVERDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coverdepth {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Hypergraph validation failures; each carries the offending edge index (1-based).
class EmptyEdgeError : public Error {
 public:
  int edge_index;
  explicit EmptyEdgeError(int idx)
      : Error("edge " + std::to_string(idx) + " is empty"), edge_index(idx) {}
};

class DuplicateEdgeError : public Error {
 public:
  int edge_index;
  explicit DuplicateEdgeError(int idx)
      : Error("edge " + std::to_string(idx) + " duplicates an earlier edge"),
        edge_index(idx) {}
};

class VertexOutOfRangeError : public Error {
 public:
  int edge_index;
  explicit VertexOutOfRangeError(int idx)
      : Error("edge " + std::to_string(idx) + " contains a vertex outside 1..n"),
        edge_index(idx) {}
};

// Instance exceeds a configured brute-force cap.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error(what) {}
};

class MixedAmbientError : public Error {
 public:
  explicit MixedAmbientError(const std::string& what) : Error(what) {}
};

class NegativeExponentError : public Error {
 public:
  explicit NegativeExponentError(const std::string& what) : Error(what) {}
};

class NotBalancedError : public Error {
 public:
  explicit NotBalancedError(const std::string& what) : Error(what) {}
};

class NoEdgesError : public Error {
 public:
  explicit NoEdgesError(const std::string& what) : Error(what) {}
};

class ZeroOrUnitIdealError : public Error {
 public:
  explicit ZeroOrUnitIdealError(const std::string& what) : Error(what) {}
};

class ZeroIdealError : public Error {
 public:
  explicit ZeroIdealError(const std::string& what) : Error(what) {}
};

class UnknownFamilyError : public Error {
 public:
  explicit UnknownFamilyError(const std::string& family)
      : Error("unknown generator family: " + family) {}
};

class BadParamsError : public Error {
 public:
  explicit BadParamsError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace coverdepth

#endif
