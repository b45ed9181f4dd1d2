#pragma once

#include <stdexcept>
#include <string>

namespace quotcoh {

// Mathematical refusals. The CLI maps these to exit code 2.
class MathRefusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAnIdeal : public MathRefusal {
public:
  explicit NotAnIdeal(const std::string &what) : MathRefusal("NotAnIdeal: " + what) {}
};

class NotALieAlgebra : public MathRefusal {
public:
  explicit NotALieAlgebra(const std::string &what) : MathRefusal("NotALieAlgebra: " + what) {}
};

class InvalidSpec : public MathRefusal {
public:
  explicit InvalidSpec(const std::string &what) : MathRefusal("InvalidSpec: " + what) {}
};

// Raised when a mode complex is requested for a mode the basic/invariance
// constraints remove.
class ModeKilled : public std::logic_error {
public:
  explicit ModeKilled(const std::string &what) : std::logic_error("ModeKilled: " + what) {}
};

// A derivative bound that the chain rule makes an identity failed on the grid.
class BoundViolated : public std::logic_error {
public:
  BoundViolated(int k, int order, double t, const std::string &what)
      : std::logic_error("BoundViolated: " + what), k_(k), order_(order), t_(t) {}

  int k() const noexcept { return k_; }
  int order() const noexcept { return order_; }
  double t() const noexcept { return t_; }

private:
  int k_;
  int order_;
  double t_;
};

} // namespace quotcoh
