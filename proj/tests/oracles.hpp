#pragma once

// Reference values computed independently with mpmath at 30 significant
// digits (arbitrary-precision erfc/log/exp/sqrt), except where a value is
// exact by construction. Tests compare library output against these.

namespace oracles {

// Standard normal quantiles.
inline constexpr double kZ75 = 0.674489750196081743202227014541;
inline constexpr double kZ95 = 1.64485362695147271486384890799;
inline constexpr double kZ975 = 1.95996398454005423552459443052;
inline constexpr double kZ995 = 2.5758293035489007609785767486;
inline constexpr double kZ9995 = 3.29052673149189479322162703535;
inline constexpr double kZ1em6 = -4.75342430882289894819398818985;

// Chi-square(1) upper quantiles (squares of two-sided normal critical values).
inline constexpr double kChi2_90 = 2.70554345409541456707303227238;
inline constexpr double kChi2_95 = 3.84145882069412595836137543736;

// Standard normal density values.
inline constexpr double kPhi0 = 0.398942280401432677939946059934;
inline constexpr double kPhiAtZ95 = 0.103135640375371300963460285721;

// log(2), log(10), sqrt(3).
inline constexpr double kLog2 = 0.693147180559945309417232121458;
inline constexpr double kLog10 = 2.30258509299404568401799145468;
inline constexpr double kSqrt3 = 1.73205080756887729352744634151;

// Family quantiles: frechet(1) at p = 0.01 is 1/(-log(0.99)); burr(2,3) at
// p = 0.01 is exactly 9.
inline constexpr double kFrechet1Q001 = 99.4991624734221727313660462462;
inline constexpr double kBurr23Q001 = 9.0;

// First-order coverage prediction of the log-scale normal interval at
// level 0.9, p = 0.01, n = 1000, for k in {50, 100, 150}.
inline constexpr double kPredCovK50 = 0.834508102823668702463170290731;
inline constexpr double kPredCovK100 = 0.868003339821993468173328391988;
inline constexpr double kPredCovK150 = 0.87686749821029310139418726211;

// hi/x_hat ratio of the level-0.9 normal interval when gamma_hat = 1, k = 100,
// log(k/(np)) = log 10: exp(z90 * log(10) / 10).
inline constexpr double kNormalRatio90 = 1.46044552628194473742360249119;

// CDF expansion with k=50, n=1000, p=0.01, gamma=1, rho=-1, A(n/k)=1/20.
inline constexpr double kExpansionXm1 = 0.196807555129425938778552820616;
inline constexpr double kExpansionX0 = 0.44828262150812234036309271694;
inline constexpr double kExpansionXp1 = 0.78608253085496323456248462021;

// Divergence from uniform weights, hand cases.
//   n=2, q=(1,0):    rho0=1/2 -> 4 - 2 sqrt(2); rho0=1 -> log 2.
inline constexpr double kTiltHalfDegenerate = 1.17157287525380990239662255158;
//   n=4, q=(0.4, 0.3, 0.15, 0.15):
inline constexpr double kTiltRho1N4 = 0.0894502316066834043622359911146;
inline constexpr double kTiltRho0N4 = 0.0923315153730727966370932840761;
inline constexpr double kTiltRho05N4 = 0.0904504824393492862147968567119;
inline constexpr double kTiltRho2N4 = 0.09;  // exact: (1 - 4.72/4) / (2 * (1 - 2)) = 9/100

// Censored log likelihood of the four-point sample {e^3, e^2, e, 1} with k=3
// (threshold 1, spacings 3,2,1) evaluated at its own maximizer
// (gamma, c) = (1/2, 3/4): 3 log(3/8) - 9 + log(1/4).
inline constexpr double kLoglikTrivialAtMle = -13.3287821201550693294038176253;

}  // namespace oracles
