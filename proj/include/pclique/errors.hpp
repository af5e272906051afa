#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pclique {

// Error families map onto the CLI exit codes: invalid parameters (1),
// infeasible scale (2), I/O or format (3).

struct invalid_parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct infeasible_scale_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries which feasibility guard rejected the halving schedule.
struct schedule_infeasible_error : infeasible_scale_error {
  schedule_infeasible_error(std::string guard_name, const std::string& what)
      : infeasible_scale_error(what), guard(std::move(guard_name)) {}
  std::string guard;
};

struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ledger_misuse_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pclique
