#ifndef EULERPOLY_TESTS_GOLDEN_PANELS_HPP
#define EULERPOLY_TESTS_GOLDEN_PANELS_HPP

// Frozen golden coordinates of the three standard panels. Ordinates are
// rounded to two decimals for h = 0.1 and four decimals for the finer
// panels; the last pair of each list is the crossing of the clip level
// y = 1, rounded the same way.

namespace golden {

struct Pair {
    double x;
    double y;
};

// h = 0.1: rounded to 2 decimals.
inline constexpr Pair kGoldenPanelH01[] = {
    {0.0, 0.0}, {0.1, 0.1}, {0.2, 0.16}, {0.3, 0.25}, {0.4, 0.37},
    {0.5, 0.52}, {0.6, 0.7}, {0.7, 0.91}, {0.74, 1},
};

// h = 0.05: rounded to 4 decimals.
inline constexpr Pair kGoldenPanelH005[] = {
    {0, 0}, {0.05, 0.0500}, {0.1, 0.0650}, {0.15, 0.0875}, {0.2, 0.1175},
    {0.25, 0.1550}, {0.3, 0.2000}, {0.35, 0.2525}, {0.4, 0.3125},
    {0.45, 0.3800}, {0.5, 0.4550}, {0.55, 0.5375}, {0.6, 0.6275},
    {0.65, 0.7250}, {0.7, 0.8300}, {0.75, 0.9425}, {0.774, 1},
};

// h = 0.01: rounded to 4 decimals.
inline constexpr Pair kGoldenPanelH001[] = {
    {0, 0}, {0.01, 0.0100}, {0.02, 0.0106}, {0.03, 0.0115}, {0.04, 0.0127},
    {0.05, 0.0142}, {0.06, 0.0160}, {0.07, 0.0181}, {0.08, 0.0205},
    {0.09, 0.0232}, {0.1, 0.0262}, {0.11, 0.0295}, {0.12, 0.0331},
    {0.13, 0.0370}, {0.14, 0.0412}, {0.15, 0.0457}, {0.16, 0.0505},
    {0.17, 0.0556}, {0.18, 0.0610}, {0.19, 0.0667}, {0.2, 0.0727},
    {0.21, 0.0790}, {0.22, 0.0856}, {0.23, 0.0925}, {0.24, 0.0997},
    {0.25, 0.1072}, {0.26, 0.1150}, {0.27, 0.1231}, {0.28, 0.1315},
    {0.29, 0.1402}, {0.3, 0.1492}, {0.31, 0.1585}, {0.32, 0.1681},
    {0.33, 0.1780}, {0.34, 0.1882}, {0.35, 0.1987}, {0.36, 0.2095},
    {0.37, 0.2206}, {0.38, 0.2320}, {0.39, 0.2437}, {0.4, 0.2557},
    {0.41, 0.2680}, {0.42, 0.2806}, {0.43, 0.2935}, {0.44, 0.3067},
    {0.45, 0.3202}, {0.46, 0.3340}, {0.47, 0.3481}, {0.48, 0.3625},
    {0.49, 0.3772}, {0.50, 0.3922}, {0.51, 0.4075}, {0.52, 0.4231},
    {0.53, 0.4390}, {0.54, 0.4552}, {0.55, 0.4717}, {0.56, 0.4885},
    {0.57, 0.5056}, {0.58, 0.5230}, {0.59, 0.5407}, {0.60, 0.5587},
    {0.61, 0.5770}, {0.62, 0.5956}, {0.63, 0.6145}, {0.64, 0.6337},
    {0.65, 0.6532}, {0.66, 0.6730}, {0.67, 0.6931}, {0.68, 0.7135},
    {0.69, 0.7342}, {0.70, 0.7552}, {0.71, 0.7765}, {0.72, 0.7981},
    {0.73, 0.8200}, {0.74, 0.8422}, {0.75, 0.8647}, {0.76, 0.8875},
    {0.77, 0.9106}, {0.78, 0.9340}, {0.79, 0.9577}, {0.8, 0.9817},
    {0.8075, 1},
};

}  // namespace golden

#endif
