#pragma once

#include <iosfwd>

namespace burau4::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  /// certify found a zero polynomial, periodicity found an exception,
  /// min2k saw a zero value, derive-table disagreed.
  kFound = 1,
  kMulticurve = 2,
  kNotAdmissible = 3,
  kUsage = 64,
  kCheckpointMismatch = 65,
  kNoInput = 66,
  kInternal = 70,
  kIo = 74,
  kInterrupted = 75,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burau4::cli
