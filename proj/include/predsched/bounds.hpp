#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "predsched/rational.hpp"

namespace predsched {

/// x = alpha^2, the squared prediction error. Always >= 1.
class AlphaSquared {
public:
    explicit AlphaSquared(Rational x);
    [[nodiscard]] const Rational& value() const { return x_; }

private:
    Rational x_;
};

enum class Formula {
    LowerNonpreemptive,      // any algorithm, non-preemptive
    LpptGeneral,             // LPPT upper bound f_n, any m
    LpptTwoMachines,         // LPPT exact ratio f_2
    LpptThreeMachines,       // LPPT exact ratio f_3
    LowerPreemptive,         // any algorithm, preemptive
    PprrUpper,               // PPRR upper bound
    PriorLowerNonpreemptive, // earlier published formulas, as printed
    PriorLpptUpper,
    PriorLowerPreemptive,
    PriorPprrUpper,
};

inline constexpr Formula kAllFormulas[] = {
    Formula::LowerNonpreemptive, Formula::LpptGeneral,     Formula::LpptTwoMachines,
    Formula::LpptThreeMachines,  Formula::LowerPreemptive, Formula::PprrUpper,
    Formula::PriorLowerNonpreemptive, Formula::PriorLpptUpper, Formula::PriorLowerPreemptive,
    Formula::PriorPprrUpper,
};

/// Canonical id, e.g. "lb_nonpreemptive". Also accepted by formula_from_id
/// are the short aliases thm1..thm6 and prior_lb_nonpre / prior_ub_lppt /
/// prior_lb_pre / prior_ub_pprr.
std::string_view formula_id(Formula f);
std::optional<Formula> formula_from_id(std::string_view id);

struct BoundEvaluation {
    Rational value;
    std::string piece;
    Formula formula = Formula::LowerNonpreemptive;
};

BoundEvaluation lb_nonpreemptive(int m, const AlphaSquared& x);
BoundEvaluation ub_lppt_general(int m, const AlphaSquared& x);
BoundEvaluation ratio_lppt_m2(const AlphaSquared& x);
BoundEvaluation ratio_lppt_m3(const AlphaSquared& x);
/// Piece is "floor-term", "ceil-term" or "both" depending on which term
/// attains the max.
BoundEvaluation lb_preemptive(int m, const AlphaSquared& x);
BoundEvaluation ub_pprr(int m, const AlphaSquared& x);

enum class PriorKind { LowerNonpreemptive, LpptUpper, LowerPreemptive, PprrUpper };
/// The PprrUpper kind is reproduced exactly as published and is tagged
/// "as-printed, anomalous": it drops below 1 for every x > 1.
BoundEvaluation prior_bounds(PriorKind kind, int m, const AlphaSquared& x);

/// Dispatch on the formula id. m is ignored by the fixed-m formulas.
/// Throws InvalidInput for m < 2.
BoundEvaluation evaluate(Formula f, int m, const AlphaSquared& x);

/// The guarantee an LPPT run is checked against: f_2 for m = 2, f_3 for
/// m = 3, f_n otherwise.
BoundEvaluation lppt_bound(int m, const AlphaSquared& x);
/// The PPRR guarantee 2 - 1/m - (m-1)/(m x).
BoundEvaluation pprr_bound(int m, const AlphaSquared& x);

/// Agreement of the two adjacent pieces at one breakpoint. Rational
/// breakpoints are compared exactly; algebraic ones (sqrt 2, sqrt 3,
/// (1+sqrt 17)/4 on x) with 50-digit decimal arithmetic and |diff| <= 1e-9.
struct ContinuityCheck {
    Formula formula = Formula::LowerNonpreemptive;
    int m = 0;
    std::string breakpoint;
    bool exact = false;
    std::string left;
    std::string right;
    bool passed = false;
};

/// Breakpoints of the piecewise formulas (lb_nonpreemptive, f_n, f_2, f_3).
std::vector<ContinuityCheck> check_continuity(Formula f, int m);

}  // namespace predsched
