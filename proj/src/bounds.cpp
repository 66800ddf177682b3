#include "minbound/bounds.hpp"

#include <cmath>

namespace minbound {
namespace {

struct BoundShape {
    std::int64_t s_offset;  // s = 2m + n + s_offset
    std::int64_t c;
    std::int64_t d;
};

BoundShape shape_of(BoundKind kind) {
    switch (kind) {
        case BoundKind::harant:
            return {1, 4, 2};
        case BoundKind::claimed:
            return {2, 16, 8};
        case BoundKind::repaired:
            return {2, 8, 4};
    }
    throw BadParamsError("unknown bound kind");
}

void check_connected_shape(std::int64_t n, std::int64_t m) {
    if (n < 1 || m < n - 1)
        throw NotConnectedError("bounds need connected input: n >= 1, m >= n-1");
}

// bound <= t, decided without floating point
bool bound_at_most(std::int64_t s, std::int64_t disc, std::int64_t d,
                   std::int64_t t) {
    std::int64_t lhs = s - d * t;
    return lhs <= 0 || lhs * lhs <= disc;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BoundValue evaluate_bound(BoundKind kind, std::int64_t n, std::int64_t m) {
    check_connected_shape(n, m);
    auto [s_offset, c, d] = shape_of(kind);

    BoundValue out;
    out.kind = kind;
    out.s = 2 * m + n + s_offset;
    out.discriminant = out.s * out.s - c * n * n;
    if (out.discriminant < 0) {
        out.status = BoundStatus::not_real;
        return out;
    }
    out.status = BoundStatus::real;
    out.value = (static_cast<double>(out.s) -
                 std::sqrt(static_cast<double>(out.discriminant))) /
                static_cast<double>(d);

    // ceil from the float estimate, then pinned by the integer predicate
    std::int64_t t = static_cast<std::int64_t>(std::ceil(out.value)) - 2;
    while (!bound_at_most(out.s, out.discriminant, d, t)) ++t;
    out.ceil_value = t;
    return out;
}

BoundValue harant_bound(std::int64_t n, std::int64_t m) {
    return evaluate_bound(BoundKind::harant, n, m);
}

BoundValue claimed_bound(std::int64_t n, std::int64_t m) {
    return evaluate_bound(BoundKind::claimed, n, m);
}

BoundValue repaired_bound(std::int64_t n, std::int64_t m) {
    return evaluate_bound(BoundKind::repaired, n, m);
}

BoundCheck bound_holds_exact(BoundKind kind, std::int64_t n, std::int64_t m,
                             std::int64_t alpha) {
    check_connected_shape(n, m);
    auto [s_offset, c, d] = shape_of(kind);
    std::int64_t s = 2 * m + n + s_offset;
    std::int64_t disc = s * s - c * n * n;
    if (disc < 0) return BoundCheck::not_real;
    return bound_at_most(s, disc, d, alpha) ? BoundCheck::holds
                                            : BoundCheck::violated;
}

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::harant:
            return "harant";
        case BoundKind::claimed:
            return "claimed";
        case BoundKind::repaired:
            return "repaired";
    }
    return "?";
}

const char* bound_status_name(BoundStatus status) {
    return status == BoundStatus::real ? "real" : "not_real";
}

const char* bound_check_name(BoundCheck check) {
    switch (check) {
        case BoundCheck::holds:
            return "holds";
        case BoundCheck::violated:
            return "violated";
        case BoundCheck::not_real:
            return "not_real";
    }
    return "?";
}

Rational inequality1_rhs(const MinTrace& trace, const Graph& g) {
    if (!g.is_connected() || g.vertex_count() < 1)
        throw NotConnectedError("inequality (1) needs a connected graph");

    std::int64_t covered = 0;
    std::int64_t sum = 0;  // sum over vertices of d_G(i) - delta at removal
    for (const auto& it : trace.iterations) {
        for (int i : it.deleted_vertices) {
            sum += g.degree(i) - it.chosen_degree;
            ++covered;
        }
    }
    if (covered != g.vertex_count())
        throw BadParamsError("trace does not cover this graph's vertices");

    std::int64_t n = g.vertex_count();
    std::int64_t den = 2 * g.edge_count() + n - sum;
    if (den <= 0)
        throw NonpositiveDenominatorError(
            "inequality (1) denominator is " + std::to_string(den));
    return Rational(n * n, den);
}

}  // namespace minbound
