#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "minbound/graph.hpp"
#include "minbound/min_greedy.hpp"

namespace minbound {

using Rational = boost::rational<std::int64_t>;

// Normalized text form: "3/7", integers without the denominator.
std::string rational_to_string(const Rational& r);

// The three closed-form lower bounds on the independence number share one
// shape: (s - sqrt(s^2 - c*n^2)) / d with
//   harant    s = 2m+n+1, c = 4,  d = 2   (Harant/Schiermeyer, order+size)
//   claimed   s = 2m+n+2, c = 16, d = 8   (the sharper candidate under test)
//   repaired  s = 2m+n+2, c = 8,  d = 4   (sign-corrected derivation chain)
enum class BoundKind { harant, claimed, repaired };

enum class BoundStatus { real, not_real };

struct BoundValue {
    BoundKind kind = BoundKind::harant;
    std::int64_t s = 0;             // linear term
    std::int64_t discriminant = 0;  // s^2 - c*n^2
    BoundStatus status = BoundStatus::real;
    double value = 0.0;             // meaningful iff status == real
    std::int64_t ceil_value = 0;    // exact integer ceil, iff status == real
};

// All evaluators require inputs consistent with a connected graph:
// n >= 1 and m >= n-1, else NotConnectedError.
BoundValue evaluate_bound(BoundKind kind, std::int64_t n, std::int64_t m);
BoundValue harant_bound(std::int64_t n, std::int64_t m);
BoundValue claimed_bound(std::int64_t n, std::int64_t m);
BoundValue repaired_bound(std::int64_t n, std::int64_t m);

enum class BoundCheck { holds, violated, not_real };

// Decides bound <= alpha in pure integer arithmetic:
//   bound <= alpha  <=>  s - d*alpha <= 0  or  (s - d*alpha)^2 <= s^2 - c*n^2
// immune to floating-point rounding.
BoundCheck bound_holds_exact(BoundKind kind, std::int64_t n, std::int64_t m,
                             std::int64_t alpha);

const char* bound_kind_name(BoundKind kind);
const char* bound_status_name(BoundStatus status);
const char* bound_check_name(BoundCheck check);

// Right-hand side of the per-run iteration inequality
//   k >= n^2 / (2m + n - sum_i (d_G(i) - delta(G_{j(i)})))
// where j(i) is the iteration that removed vertex i and delta(G_j) equals
// that iteration's chosen degree. Exact rational; throws
// NonpositiveDenominatorError instead of clamping (unreachable for traces
// produced by run_min, since the denominator equals n + sum (1+d_j)d_j).
Rational inequality1_rhs(const MinTrace& trace, const Graph& g);

}  // namespace minbound
