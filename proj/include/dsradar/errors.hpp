#pragma once

#include <stdexcept>
#include <string>

namespace dsradar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ds_codes
struct NotADifferenceSet : Error { using Error::Error; };
struct DuplicateElements : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct WrongResidueClass : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };

// dictionaries
struct NonPositiveParameter : Error { using Error::Error; };
struct TooManyIndices : Error { using Error::Error; };
struct DSOutOfRange : Error { using Error::Error; };
struct ZeroColumn : Error { using Error::Error; };
struct DimensionOverflow : Error { using Error::Error; };

// waveforms
struct WrongKind : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };

// scene / measurement
struct DelayOverrun : Error { using Error::Error; };
struct NumericallyUnsampledBin : Error { using Error::Error; };

// recovery
struct RankDeficientSupport : Error { using Error::Error; };

// metrics
struct EmptyTrialSet : Error { using Error::Error; };
struct NoDetections : Error { using Error::Error; };

// harness
struct ConfigError : Error { using Error::Error; };
struct KindMismatch : Error { using Error::Error; };

}  // namespace dsradar
