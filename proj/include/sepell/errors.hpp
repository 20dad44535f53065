#pragma once

#include <stdexcept>
#include <string>

namespace sepell {

// Point set does not affinely span the ambient dimension.
class DegenerateInputError : public std::runtime_error {
  public:
    DegenerateInputError(const std::string &what, int achieved_rank)
        : std::runtime_error(what), achieved_rank_(achieved_rank)
    {
    }
    int achieved_rank() const { return achieved_rank_; }

  private:
    int achieved_rank_;
};

// An iterative routine failed to reach its tolerance within the iteration cap.
class NumericalFailureError : public std::runtime_error {
  public:
    NumericalFailureError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual)
    {
    }
    double residual() const { return residual_; }

  private:
    double residual_;
};

} // namespace sepell
