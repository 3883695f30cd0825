#pragma once

#include <stdexcept>
#include <string>

namespace lamina {

struct NonHyperbolicSurface : std::invalid_argument {
  explicit NonHyperbolicSurface(const std::string& what) : std::invalid_argument(what) {}
};

struct NoPantsCurve : std::invalid_argument {
  explicit NoPantsCurve(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidVector : std::invalid_argument {
  explicit InvalidVector(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct ModelOverflow : std::runtime_error {
  explicit ModelOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnimodular : std::invalid_argument {
  explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

struct Degenerate : std::invalid_argument {
  explicit Degenerate(const std::string& what) : std::invalid_argument(what) {}
};

struct WitnessNotFound : std::runtime_error {
  explicit WitnessNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct CalibrationFailure : std::runtime_error {
  explicit CalibrationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct LiftTableMiss : std::runtime_error {
  explicit LiftTableMiss(const std::string& what) : std::runtime_error(what) {}
};

struct PoolTooSmall : std::runtime_error {
  explicit PoolTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct IOFailure : std::runtime_error {
  explicit IOFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lamina
