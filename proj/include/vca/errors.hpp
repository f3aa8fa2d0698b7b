// errors.hpp — typed error taxonomy for the whole library.
//
// Every failure mode is a distinct exception type deriving from vca::Error,
// so callers (and the CLI exit-code mapping) can tell input-format problems,
// validation failures, and exceeded resource caps apart without string
// matching.
#pragma once

#include <stdexcept>
#include <string>

namespace vca {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Chord construction: the two endpoints coincide.
class LoopError : public Error {
 public:
  using Error::Error;
};

// Chord construction: the endpoints are cyclically consecutive, so the edge
// would duplicate a cycle edge instead of being a chord.
class CycleEdgeError : public Error {
 public:
  using Error::Error;
};

// Malformed input (JSON/text instance files, rational literals, CLI values).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Instance load: the candidate link set S does not 3-connect the cycle.
// Every algorithm assumes a feasible S, so this is a hard load-time error.
class InfeasibleCandidateSetError : public Error {
 public:
  using Error::Error;
};

// component_profile: the given link set is not a circle component (circle
// graph disconnected, or fewer than two links).
class NotAComponentError : public Error {
 public:
  using Error::Error;
};

// zone_instance: the given chord is not a border chord of the component.
class NotABorderChordError : public Error {
 public:
  using Error::Error;
};

// zone_instance: the contracted cycle would have fewer than 4 vertices.
// Unreachable for border chords of real components (the zone always holds at
// least one vertex, giving a cycle of size >= 4); kept as a defensive check.
class DegenerateZoneError : public Error {
 public:
  using Error::Error;
};

// utility/utility_gain: the link family has a circle-graph singleton, so the
// utility function is undefined for it.
class SingletonError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a feasible input link set received an
// infeasible one (e.g. pruning a set that never 3-connected the cycle).
class InfeasibleInputError : public Error {
 public:
  using Error::Error;
};

// alpha outside (1/2, 1], a non-ascending alpha schedule, or an invalid
// schedule parameter.
class AlphaRangeError : public Error {
 public:
  using Error::Error;
};

// LP certificate request with |V(F)| outside [0, n].
class IntervalError : public Error {
 public:
  using Error::Error;
};

// classify_vertices: the matching M shares a vertex with V(F) or is not a
// matching (two of its links share an endpoint).
class OverlapError : public Error {
 public:
  using Error::Error;
};

// An LP certificate failed verification; the message names the violated
// constraint. Surfaced as a first-class diagnostic because a reproducible
// failure indicates a transcription problem worth reporting, not hiding.
class CertificateInfeasibleError : public Error {
 public:
  using Error::Error;
};

// A configured guardrail (candidate count per search iteration, wall-clock
// budget, or a structural desk-scale limit) was exceeded. The search aborts
// loudly instead of silently degrading, because the approximation guarantees
// require true criticality.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// The exact solver exhausted its node or time budget before proving
// optimality; the instance is beyond desk scale for the configured budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Random instance generation failed to produce a feasible candidate set
// within the attempt bound.
class GenerationFailedError : public Error {
 public:
  using Error::Error;
};

}  // namespace vca
