#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frp {

enum class Err {
    Parse,
    NegativeCycle,
    Unreachable,
    RangeOutOfBounds,
    DimensionMismatch,
    UnknownEdgeId,
    E2OnPath,
    WrongCase,
    BadParams,
    WeightOutOfRange,
    NoFiniteEntry,
    Io,
    VerifyMismatch,
};

const char* err_name(Err e);

class FrpError : public std::runtime_error {
  public:
    FrpError(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

// Carries one witness cycle (vertex ids, first != last) whose total weight is negative.
class NegativeCycleError : public FrpError {
  public:
    NegativeCycleError(std::vector<std::int32_t> cycle, std::int64_t weight)
        : FrpError(Err::NegativeCycle,
                   "cycle of weight " + std::to_string(weight) + " through " +
                       std::to_string(cycle.empty() ? -1 : cycle.front())),
          cycle_(std::move(cycle)), weight_(weight) {}
    const std::vector<std::int32_t>& cycle() const { return cycle_; }
    std::int64_t weight() const { return weight_; }

  private:
    std::vector<std::int32_t> cycle_;
    std::int64_t weight_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw FrpError(kind, what); }

}  // namespace frp
