#pragma once

#include <stdexcept>
#include <string>

namespace twotower {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TWOTOWER_DEFINE_ERROR(NAME)        \
  struct NAME : Error {                    \
    using Error::Error;                    \
  }

TWOTOWER_DEFINE_ERROR(ShapeError);          // incompatible matrix/batch dimensions
TWOTOWER_DEFINE_ERROR(ConfigError);         // invalid hyperparameter or config value
TWOTOWER_DEFINE_ERROR(DegenerateRowError);  // row norm at or below eps (collapsed embedding)
TWOTOWER_DEFINE_ERROR(ModelError);          // parameter structure mismatch
TWOTOWER_DEFINE_ERROR(ScheduleError);       // step outside [0, total_steps]
TWOTOWER_DEFINE_ERROR(OptimizerError);      // gradient/buffer shape mismatch
TWOTOWER_DEFINE_ERROR(ShardError);          // worker shard dimension mismatch
TWOTOWER_DEFINE_ERROR(CheckpointError);     // unreadable, truncated, or wrong-version checkpoint
TWOTOWER_DEFINE_ERROR(FormatError);         // bad magic/version/dtype in a tensor blob
TWOTOWER_DEFINE_ERROR(TruncationError);     // blob payload shorter than its header promises
TWOTOWER_DEFINE_ERROR(GenerationError);     // invalid synthetic-data request
TWOTOWER_DEFINE_ERROR(LabelIndexError);     // duplicate labels in an index
TWOTOWER_DEFINE_ERROR(QueryError);          // k outside [1, C]
TWOTOWER_DEFINE_ERROR(MetricError);         // empty truth set (hit@k undefined)
TWOTOWER_DEFINE_ERROR(InputError);          // empty or malformed user input
TWOTOWER_DEFINE_ERROR(InternalError);       // broken internal invariant (missing cache, ...)

#undef TWOTOWER_DEFINE_ERROR

}  // namespace twotower
