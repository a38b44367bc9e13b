// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace polyreg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An integration engine ran out of budget before reaching the tolerance.
struct NonConvergent : Error {
  double requested;
  double achieved;
  NonConvergent(double req, double ach)
      : Error("integral did not converge: requested " + std::to_string(req) +
              ", achieved " + std::to_string(ach)),
        requested(req), achieved(ach) {}
};

struct InvalidChart : Error {
  explicit InvalidChart(const std::string& m) : Error(m) {}
};

struct OnBranchPoint : Error {
  explicit OnBranchPoint(const std::string& m) : Error(m) {}
};

struct DegenerateTuple : Error {
  explicit DegenerateTuple(const std::string& m) : Error(m) {}
};

struct DegenerateConfiguration : Error {
  explicit DegenerateConfiguration(const std::string& m) : Error(m) {}
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& m) : Error(m) {}
};

struct NotGeneric : Error {
  explicit NotGeneric(const std::string& m) : Error(m) {}
};

struct NonTransverse : Error {
  explicit NonTransverse(const std::string& m) : Error(m) {}
};

struct CoincidentPoints : Error {
  explicit CoincidentPoints(const std::string& m) : Error(m) {}
};

struct OnDivisor : Error {
  explicit OnDivisor(const std::string& m) : Error(m) {}
};

struct ImproperIntersection : Error {
  explicit ImproperIntersection(const std::string& m) : Error(m) {}
};

struct OnKernel : Error {
  explicit OnKernel(const std::string& m) : Error(m) {}
};

struct AllProportional : Error {
  explicit AllProportional(const std::string& m) : Error(m) {}
};

struct NotPrincipal : Error {
  explicit NotPrincipal(const std::string& m) : Error(m) {}
};

struct IrrationalIntersection : Error {
  explicit IrrationalIntersection(const std::string& m) : Error(m) {}
};

struct DegenerateBracket : Error {
  explicit DegenerateBracket(const std::string& m) : Error(m) {}
};

struct NotComputable : Error {
  explicit NotComputable(const std::string& m) : Error(m) {}
};

}  // namespace polyreg
