#pragma once

#include <stdexcept>
#include <string>

namespace stablesde {

struct NonIntegrableKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SymmetryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadratureNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergentTail : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularityNotResolved : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvaluationAtOrigin : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EnvelopeViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StateOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisjointnessViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationDominant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateHarmonic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoStabilization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TailDivergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChainNotRegenerating : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BinningTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResidualTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComparisonViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stablesde
