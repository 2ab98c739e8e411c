#include "predsched/bounds.hpp"

#include <array>
#include <functional>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "predsched/error.hpp"

namespace predsched {

namespace {

// Piece formulas, generic over the number type so the continuity checks can
// evaluate them at irrational breakpoints.
namespace piece {

template <class T> T half_one_plus(const T& x) { return (T(1) + x) / T(2); }
template <class T> T two_minus_inv(const T& x) { return T(2) - T(1) / x; }
template <class T> T two_minus_inv_m(int m) { return T(2) - T(1) / T(m); }
template <class T> T lppt_linear(int m, const T& x) { return T(1) + T(m - 1) * x / T(3 * m); }
template <class T> T f2_first(const T& x) { return (T(4) + T(3) * x) / (T(4) + T(2) * x); }
template <class T> T f3_first(const T& x) { return (T(6) + T(5) * x) / (T(6) + T(3) * x); }
template <class T> T f3_second(const T& x) { return (T(5) + T(2) * x) / T(6); }
template <class T> T f3_third(const T& x) { return (T(3) + T(2) * x) / (T(3) + x); }

}  // namespace piece

constexpr const char* kHalfOnePlus = "(1+x)/2";
constexpr const char* kTwoMinusInv = "2-1/x";
constexpr const char* kTwoMinusInvM = "2-1/m";
constexpr const char* kLpptLinear = "1+(m-1)x/(3m)";
constexpr const char* kF2First = "(4+3x)/(4+2x)";
constexpr const char* kF3First = "(6+5x)/(6+3x)";
constexpr const char* kF3Second = "(5+2x)/6";
constexpr const char* kF3Third = "(3+2x)/(3+x)";
constexpr const char* kFiveThirds = "5/3";
constexpr const char* kThreeHalves = "3/2";

void require_machines(int m) {
    if (m < 2) throw InvalidInput("bounds: need m >= 2, got " + std::to_string(m));
}

BoundEvaluation make(Formula f, Rational value, std::string piece) {
    return BoundEvaluation{std::move(value), std::move(piece), f};
}

// x < (1 + sqrt 17) / 4, decided exactly (x >= 1 keeps 4x - 1 positive).
bool below_sqrt17_threshold(const Rational& x) {
    const Rational t = Rational(4) * x - Rational(1);
    return t * t < Rational(17);
}

struct FormulaName {
    Formula formula;
    std::string_view id;
    std::string_view alias;
};

constexpr std::array<FormulaName, 10> kNames{{
    {Formula::LowerNonpreemptive, "lb_nonpreemptive", "thm1"},
    {Formula::LpptGeneral, "ub_lppt_general", "thm2"},
    {Formula::LpptTwoMachines, "ratio_lppt_m2", "thm3"},
    {Formula::LpptThreeMachines, "ratio_lppt_m3", "thm4"},
    {Formula::LowerPreemptive, "lb_preemptive", "thm5"},
    {Formula::PprrUpper, "ub_pprr", "thm6"},
    {Formula::PriorLowerNonpreemptive, "prior_lb_nonpre", "prior_lb_nonpreemptive"},
    {Formula::PriorLpptUpper, "prior_ub_lppt", "prior_ub_lppt_general"},
    {Formula::PriorLowerPreemptive, "prior_lb_pre", "prior_lb_preemptive"},
    {Formula::PriorPprrUpper, "prior_ub_pprr", "prior_ub_pprr_printed"},
}};

}  // namespace

AlphaSquared::AlphaSquared(Rational x) : x_(std::move(x)) {
    if (x_ < Rational(1)) throw InvalidInput("alpha^2 must be >= 1, got " + x_.str());
}

std::string_view formula_id(Formula f) {
    for (const auto& n : kNames) {
        if (n.formula == f) return n.id;
    }
    return "unknown";
}

std::optional<Formula> formula_from_id(std::string_view id) {
    for (const auto& n : kNames) {
        if (n.id == id || n.alias == id) return n.formula;
    }
    return std::nullopt;
}

BoundEvaluation lb_nonpreemptive(int m, const AlphaSquared& alpha2) {
    require_machines(m);
    const Rational& x = alpha2.value();
    const auto f = Formula::LowerNonpreemptive;
    if (x <= Rational(2)) return make(f, piece::half_one_plus(x), kHalfOnePlus);
    if (x < Rational(m)) return make(f, piece::two_minus_inv(x), kTwoMinusInv);
    return make(f, piece::two_minus_inv_m<Rational>(m), kTwoMinusInvM);
}

BoundEvaluation ub_lppt_general(int m, const AlphaSquared& alpha2) {
    require_machines(m);
    const Rational& x = alpha2.value();
    const auto f = Formula::LpptGeneral;
    if (x <= Rational(3 * m, m + 2)) return make(f, piece::lppt_linear(m, x), kLpptLinear);
    if (x <= Rational(3 * m - 2, m)) return make(f, piece::half_one_plus(x), kHalfOnePlus);
    return make(f, piece::two_minus_inv_m<Rational>(m), kTwoMinusInvM);
}

BoundEvaluation ratio_lppt_m2(const AlphaSquared& alpha2) {
    const Rational& x = alpha2.value();
    const auto f = Formula::LpptTwoMachines;
    if (x * x < Rational(2)) return make(f, piece::f2_first(x), kF2First);
    if (x < Rational(2)) return make(f, piece::half_one_plus(x), kHalfOnePlus);
    return make(f, Rational(3, 2), kThreeHalves);
}

BoundEvaluation ratio_lppt_m3(const AlphaSquared& alpha2) {
    const Rational& x = alpha2.value();
    const auto f = Formula::LpptThreeMachines;
    if (below_sqrt17_threshold(x)) return make(f, piece::f3_first(x), kF3First);
    if (x < Rational(3, 2)) return make(f, piece::f3_second(x), kF3Second);
    if (x * x < Rational(3)) return make(f, piece::f3_third(x), kF3Third);
    if (x < Rational(2)) return make(f, piece::half_one_plus(x), kHalfOnePlus);
    if (x < Rational(3)) return make(f, piece::two_minus_inv(x), kTwoMinusInv);
    return make(f, Rational(5, 3), kFiveThirds);
}

BoundEvaluation lb_preemptive(int m, const AlphaSquared& alpha2) {
    require_machines(m);
    const Rational& x = alpha2.value();
    const Rational mm(m);
    const Rational spread = Rational(m - 1) * x;  // (m-1) x >= 1
    const Rational lo(spread.floor());
    const Rational hi(spread.ceil());
    const Rational floor_term =
        Rational(2) - Rational(1) / mm + (Rational(1) / mm - Rational(1)) * Rational(m - 1) / lo;
    const Rational ceil_term = (hi + mm * x - mm + Rational(1)) / (x + hi);
    const auto f = Formula::LowerPreemptive;
    if (floor_term == ceil_term) return make(f, floor_term, "both");
    if (floor_term > ceil_term) return make(f, floor_term, "floor-term");
    return make(f, ceil_term, "ceil-term");
}

BoundEvaluation ub_pprr(int m, const AlphaSquared& alpha2) {
    require_machines(m);
    const Rational& x = alpha2.value();
    const Rational mm(m);
    return make(Formula::PprrUpper, Rational(2) - Rational(1) / mm - Rational(m - 1) / (mm * x),
                "2-1/m-(m-1)/(m x)");
}

BoundEvaluation prior_bounds(PriorKind kind, int m, const AlphaSquared& alpha2) {
    require_machines(m);
    const Rational& x = alpha2.value();
    const Rational mm(m);
    switch (kind) {
        case PriorKind::LowerNonpreemptive: {
            const auto f = Formula::PriorLowerNonpreemptive;
            if (x <= Rational(2)) return make(f, piece::half_one_plus(x), kHalfOnePlus);
            const mpz_class k = x.floor();
            const Rational inner(Rational(k * (m - 1)) / mm);
            return make(f, Rational(1) + Rational(inner.floor()) / Rational(k), "1+floor(floor(x)(m-1)/m)/floor(x)");
        }
        case PriorKind::LpptUpper: {
            const auto f = Formula::PriorLpptUpper;
            const Rational a = (Rational(2) + Rational(2) * x) / Rational(2);
            const Rational b = Rational(1) + x / Rational(2) * (Rational(1) - Rational(1) / mm);
            const Rational c = piece::two_minus_inv_m<Rational>(m);
            if (a <= b && a <= c) return make(f, a, "(2+2x)/2");
            if (b <= c) return make(f, b, "1+(x/2)(1-1/m)");
            return make(f, c, kTwoMinusInvM);
        }
        case PriorKind::LowerPreemptive: {
            const auto f = Formula::PriorLowerPreemptive;
            const Rational first = Rational(2) - Rational(1) / x - Rational(1) / mm;
            Rational second;
            std::string second_label;
            if (x <= Rational(2)) {
                second = (x * mm + mm - Rational(1)) / (x + Rational(2 * (m - 1)));
                second_label = "(xm+m-1)/(x+2(m-1))";
            } else {
                second = Rational(2) - Rational(1) / mm - Rational(m - 1) / (mm * Rational(x.floor()));
                second_label = "2-1/m-(m-1)/(m floor(x))";
            }
            if (first > second) return make(f, first, "2-1/x-1/m");
            return make(f, second, second_label);
        }
        case PriorKind::PprrUpper: {
            const Rational value = Rational(2) - (x * mm + mm - Rational(2)) / (x * mm - Rational(1));
            return make(Formula::PriorPprrUpper, value, "as-printed, anomalous");
        }
    }
    throw InvalidInput("bounds: unknown prior kind");
}

BoundEvaluation evaluate(Formula f, int m, const AlphaSquared& x) {
    require_machines(m);
    switch (f) {
        case Formula::LowerNonpreemptive: return lb_nonpreemptive(m, x);
        case Formula::LpptGeneral: return ub_lppt_general(m, x);
        case Formula::LpptTwoMachines: return ratio_lppt_m2(x);
        case Formula::LpptThreeMachines: return ratio_lppt_m3(x);
        case Formula::LowerPreemptive: return lb_preemptive(m, x);
        case Formula::PprrUpper: return ub_pprr(m, x);
        case Formula::PriorLowerNonpreemptive: return prior_bounds(PriorKind::LowerNonpreemptive, m, x);
        case Formula::PriorLpptUpper: return prior_bounds(PriorKind::LpptUpper, m, x);
        case Formula::PriorLowerPreemptive: return prior_bounds(PriorKind::LowerPreemptive, m, x);
        case Formula::PriorPprrUpper: return prior_bounds(PriorKind::PprrUpper, m, x);
    }
    throw InvalidInput("bounds: unknown formula");
}

BoundEvaluation lppt_bound(int m, const AlphaSquared& x) {
    if (m == 2) return ratio_lppt_m2(x);
    if (m == 3) return ratio_lppt_m3(x);
    return ub_lppt_general(m, x);
}

BoundEvaluation pprr_bound(int m, const AlphaSquared& x) { return ub_pprr(m, x); }

namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

ContinuityCheck exact_check(Formula f, int m, const Rational& at, const Rational& left, const Rational& right) {
    return ContinuityCheck{f, m, "x=" + at.str(), true, left.str(), right.str(), left == right};
}

ContinuityCheck decimal_check(Formula f, int m, std::string where, const Decimal50& left, const Decimal50& right) {
    const Decimal50 diff = boost::multiprecision::abs(left - right);
    return ContinuityCheck{f,
                           m,
                           std::move(where),
                           false,
                           left.str(50),
                           right.str(50),
                           diff <= Decimal50("1e-9")};
}

}  // namespace

std::vector<ContinuityCheck> check_continuity(Formula f, int m) {
    require_machines(m);
    std::vector<ContinuityCheck> out;
    switch (f) {
        case Formula::LowerNonpreemptive: {
            const Rational two(2);
            if (m == 2) {
                out.push_back(exact_check(f, m, two, piece::half_one_plus(two), piece::two_minus_inv_m<Rational>(m)));
            } else {
                out.push_back(exact_check(f, m, two, piece::half_one_plus(two), piece::two_minus_inv(two)));
                const Rational at(m);
                out.push_back(exact_check(f, m, at, piece::two_minus_inv(at), piece::two_minus_inv_m<Rational>(m)));
            }
            break;
        }
        case Formula::LpptGeneral: {
            const Rational first(3 * m, m + 2);
            const Rational second(3 * m - 2, m);
            out.push_back(exact_check(f, m, first, piece::lppt_linear(m, first), piece::half_one_plus(first)));
            out.push_back(exact_check(f, m, second, piece::half_one_plus(second), piece::two_minus_inv_m<Rational>(m)));
            break;
        }
        case Formula::LpptTwoMachines: {
            const Decimal50 root2 = boost::multiprecision::sqrt(Decimal50(2));
            out.push_back(decimal_check(f, 2, "x=sqrt(2)", piece::f2_first(root2), piece::half_one_plus(root2)));
            const Rational two(2);
            out.push_back(exact_check(f, 2, two, piece::half_one_plus(two), Rational(3, 2)));
            break;
        }
        case Formula::LpptThreeMachines: {
            const Decimal50 t17 = (Decimal50(1) + boost::multiprecision::sqrt(Decimal50(17))) / Decimal50(4);
            out.push_back(decimal_check(f, 3, "x=(1+sqrt(17))/4", piece::f3_first(t17), piece::f3_second(t17)));
            const Rational threehalves(3, 2);
            out.push_back(exact_check(f, 3, threehalves, piece::f3_second(threehalves), piece::f3_third(threehalves)));
            const Decimal50 root3 = boost::multiprecision::sqrt(Decimal50(3));
            out.push_back(decimal_check(f, 3, "x=sqrt(3)", piece::f3_third(root3), piece::half_one_plus(root3)));
            const Rational two(2);
            out.push_back(exact_check(f, 3, two, piece::half_one_plus(two), piece::two_minus_inv(two)));
            const Rational three(3);
            out.push_back(exact_check(f, 3, three, piece::two_minus_inv(three), Rational(5, 3)));
            break;
        }
        default:
            throw InvalidInput("continuity: formula " + std::string(formula_id(f)) + " is not piecewise-checked");
    }
    return out;
}

}  // namespace predsched
