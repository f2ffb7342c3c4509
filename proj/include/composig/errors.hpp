#pragma once

#include <stdexcept>
#include <string>

namespace composig {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-formed inputs or violated preconditions. The CLI maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

/// Failures of the numerical machinery itself. The CLI maps these to exit code 3.
struct NumericalError : Error {
  using Error::Error;
};

// material_models
struct PoleHit : NumericalError { using NumericalError::NumericalError; };

// curves
struct TrajectoryThroughPole : NumericalError { using NumericalError::NumericalError; };
struct InvalidTrajectory : ValidationError { using ValidationError::ValidationError; };
struct PointOnCurve : ValidationError { using ValidationError::ValidationError; };
struct NonIntegerWinding : NumericalError { using NumericalError::NumericalError; };
struct AmbiguousMembership : ValidationError { using ValidationError::ValidationError; };
struct NotEncircling : ValidationError { using ValidationError::ValidationError; };

// measures
struct EvalAtMass : ValidationError { using ValidationError::ValidationError; };
struct Infeasible : ValidationError { using ValidationError::ValidationError; };
struct DegeneratePair : ValidationError { using ValidationError::ValidationError; };

// spectral_analysis
struct DegenerateTarget : ValidationError { using ValidationError::ValidationError; };
struct RootSolveFailure : NumericalError { using NumericalError::NumericalError; };

// signal_design
struct ProbePole : ValidationError { using ValidationError::ValidationError; };
struct CouplingZero : NumericalError { using NumericalError::NumericalError; };
struct QuadratureNotConverged : NumericalError { using NumericalError::NumericalError; };

// response
struct NonSimplePole : ValidationError { using ValidationError::ValidationError; };
struct MissingMeasure : ValidationError { using ValidationError::ValidationError; };
struct ProbeInsideCurve : ValidationError { using ValidationError::ValidationError; };
struct OverflowGuard : NumericalError { using NumericalError::NumericalError; };

// bounds_recovery
struct NoFeasibleMeasure : ValidationError { using ValidationError::ValidationError; };
struct NotMeasureIndependent : ValidationError { using ValidationError::ValidationError; };
struct ZeroDenominator : NumericalError { using NumericalError::NumericalError; };
struct ZeroCoefficient : NumericalError { using NumericalError::NumericalError; };
struct SingularSystem : NumericalError { using NumericalError::NumericalError; };
struct PreconditionM : ValidationError { using ValidationError::ValidationError; };

// cli / scenario files
struct InvalidScenario : ValidationError { using ValidationError::ValidationError; };

}  // namespace composig
