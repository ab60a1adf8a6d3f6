#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace graft {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap (terminal count, edge count, enumeration budget)
// was exceeded. Callers either shrink the instance or raise the cap.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& quantity, long value, long cap)
      : Error("cap exceeded: " + quantity + " = " + std::to_string(value) +
              " > " + std::to_string(cap)),
        quantity(quantity), value(value), cap(cap) {}
  std::string quantity;
  long value;
  long cap;
};

// Some connected component holds an odd number of terminals, so no join
// exists. Carries the offending component's vertices.
class OddComponentError : public Error {
public:
  explicit OddComponentError(std::vector<int> component)
      : Error("odd terminal parity in component of size " +
              std::to_string(component.size())),
        component(std::move(component)) {}
  std::vector<int> component;
};

class DisconnectedError : public Error {
public:
  DisconnectedError(int x, int y)
      : Error("vertices " + std::to_string(x) + " and " + std::to_string(y) +
              " are in different components"),
        x(x), y(y) {}
  int x, y;
};

class NotBipartiteError : public Error {
public:
  NotBipartiteError() : Error("graph is not bipartite") {}
};

class NotFactorizableError : public Error {
public:
  NotFactorizableError() : Error("graph has no perfect matching") {}
};

class NotCombError : public Error {
public:
  explicit NotCombError(const std::string& why)
      : Error("not a comb designation: " + why) {}
};

class NotRelatedError : public Error {
public:
  NotRelatedError(int c1, int c2)
      : Error("components " + std::to_string(c1) + " and " +
              std::to_string(c2) + " are not strictly related"),
        c1(c1), c2(c2) {}
  int c1, c2;
};

// The order closure produced a 2-cycle between distinct components. Never a
// valid outcome on comb inputs; indicates a bug or a precondition breach.
class AntisymmetryViolationError : public Error {
public:
  AntisymmetryViolationError(int c1, int c2)
      : Error("order relation has a 2-cycle between components " +
              std::to_string(c1) + " and " + std::to_string(c2)),
        c1(c1), c2(c2) {}
  int c1, c2;
};

// Two seeds of one propagation block disagree while labeling upper bounds.
class InconsistentLabelingError : public Error {
public:
  explicit InconsistentLabelingError(const std::string& why)
      : Error("inconsistent attribute labeling: " + why) {}
};

// Rejection sampling gave up.
class ExhaustedError : public Error {
public:
  explicit ExhaustedError(int tries)
      : Error("sampler exhausted after " + std::to_string(tries) + " tries"),
        tries(tries) {}
  int tries;
};

// Malformed input document. line/col are 1-based; 0 means "not positional"
// (semantic errors carry the offending element in the message instead).
class InputError : public Error {
public:
  InputError(const std::string& what, int line = 0, int col = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + what
                       : what),
        line(line), col(col) {}
  int line, col;
};

}  // namespace graft
