#pragma once
// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.
#include <complex>
namespace oracle {
struct BesselCase { double g, z, value; };
inline constexpr BesselCase kBessel[] = {
    {0.0, 0.5, 9.3846980724081290423e-1},
    {0.5, 3.0, 4.7040002686622407367e-2},
    {1.2, 7.9, 3.3734378921181445587e-2},
    {1.2, 8.1, 4.1152085614906553054e-2},
    {1.2, 25.0, -7.9403891596672621563e-3},
    {2.5, 40.0, -1.6258493406551493039e-4},
    {0.0, 100.0, 1.9985850304223122424e-2},
    {0.3, 0.001, 9.9999980769231814381e-1},
    {3.7, 12.5, 3.9927088893468388153e-3},
    {0.0, 8.0, 1.7165080713755390609e-1},
};
struct KernelCase { double g, lambda, x; double re, im; };
inline constexpr KernelCase kKernel[] = {
    {0.7, 1.3, -2.1, 2.2457539291166352713e-1, -3.7134933947382416674e-1},
    {0.0, 2.0, 3.0, 1.5064525725099693166e-1, -2.7668385812756560817e-1},
    {1.2, 0.5, 9.0, -6.0187570916307981097e-2, 1.1979837476133815014e-1},
    {0.5, -1.1, 4.4, -2.0493156142787444436e-1, 6.8635643483663522458e-2},
};
// f(x) = e^{-x^2/2}(1 + x)
struct PointCase { double a, b, x; double value; };
inline constexpr PointCase kSonine[] = {
    {0.5, 1.5, 1.7, 8.3465677704161475515e-1},
    {0.5, 1.5, -12.0, 1.6319194496295576188e-3},
    {0.5, 1.0, 2.3, 4.0052047368578719909e-1},
    {0.0, 2.2, -0.9, 6.5191953235990106646e-1},
};
inline constexpr PointCase kDualSonine[] = {
    {0.5, 1.5, 0.8, 3.9212048001979309517},
    {0.5, 1.5, -2.5, -1.9771620130533337797e-1},
    {0.5, 1.0, 1.1, 1.8299582870734243622},
    {0.0, 2.2, 0.0, 1.113762063748542615e+1},
};
// a unused, b = gamma
inline constexpr PointCase kDualV[] = {
    {0.0, 0.5, 0.8, 1.3070682667326436506},
    {0.0, 1.2, -1.4, -3.0320140204782928492e-1},
    {0.0, 0.1, 2.0, 3.3030566780007632742e-1},
};
struct TransformCase { double g, lambda; double re, im; };
inline constexpr TransformCase kTransform[] = {
    {0.5, 0.7, 1.9619493262390680176, -1.3733645283673475252},
    {0.0, 2.0, 2.7067056647322538379e-1, -5.4134113294645076758e-1},
    {1.2, -1.5, 1.6435709183913265167, 2.465356377586989775},
};
}  // namespace oracle
