#pragma once

// Published reference values for the three standard experiments, used by the
// `table` subcommand to print computed results side by side with them.

namespace reference {

struct PulseErrorRow {
    int n;
    double linf25_classic;  // lambda = 0, t = 2.5
    double lambda_opt;
    double linf25_opt;
    double linf5_classic;   // lambda = 0, t = 5
    double linf5_opt;
};

inline constexpr PulseErrorRow kPulseErrors[] = {
    {100, 3.2726e-5, -0.00840, 1.2330e-5, 5.22606e-5, 2.2789e-5},
    {200, 2.0537e-5, -0.00280, 1.4819e-5, 1.91604e-5, 1.9119e-5},
    {300, 1.4428e-5, -0.00094, 1.2509e-5, 1.70403e-5, 1.6944e-5},
    {400, 1.4452e-5, -0.00178, 1.4440e-5, 1.61150e-5, 1.5872e-5},
};

struct ConservationRow {
    int n;
    double m0, e0, h0;
    double c_m, c_e, c_h;
};

inline constexpr ConservationRow kPulseConservation[] = {
    {100, 1.0445, 0.0601, 0.0040, 5.4748e-6, 3.8176e-8, 1.5233e-6},
    {200, 1.0445, 0.0601, 0.0040, 3.2669e-6, 5.1126e-8, 1.7003e-6},
    {300, 1.0445, 0.0601, 0.0040, 2.4190e-7, 2.1767e-8, 2.8351e-6},
    {400, 1.0445, 0.0601, 0.0040, 1.3753e-6, 2.0910e-10, 3.3939e-6},
};

struct KinkErrorRow {
    int n;
    double linf4_classic;
    double lambda_opt;
    double linf4_opt;
    double linf12_classic;
    double linf12_opt;
};

inline constexpr KinkErrorRow kKinkErrors[] = {
    {100, 8.4150e-6, -0.01850, 3.8974e-6, 2.3158e-5, 1.2330e-5},
    {200, 2.1207e-6, -0.00574, 1.0194e-6, 5.9956e-6, 2.9662e-6},
    {400, 5.3296e-7, -0.00115, 2.5440e-7, 1.5016e-6, 7.7413e-7},
    {600, 2.2377e-7, -0.00057, 1.1335e-7, 6.6655e-7, 3.3921e-7},
    {800, 1.4601e-7, -0.00024, 6.3749e-8, 5.2835e-6, 5.2779e-6},
};

inline constexpr ConservationRow kKinkConservation[] = {
    {100, 16.1599, 3.0129, 0.0979, 4.9504e-3, 5.3104e-3, 5.4423e-3},
    {200, 16.0799, 2.9969, 0.0974, 4.9751e-3, 5.3388e-3, 5.4721e-3},
    {400, 16.0399, 2.9889, 0.0972, 4.9875e-3, 5.3531e-3, 5.4871e-3},
    {600, 16.0266, 2.9862, 0.0971, 4.9916e-3, 5.3578e-3, 5.4922e-3},
    {800, 16.0199, 2.9849, 0.0970, 4.9938e-3, 5.3603e-3, 4.9481e-3},
};

struct GenerationRow {
    double t;
    double m0, e0, h0;
    double c_m, c_e, c_h;
};

inline constexpr GenerationRow kGenerationConservation[] = {
    {5.0, 5.2255, 1.5033, 1.5994, 8.0719e-7, 3.0588e-5, 1.2886e-3},
    {10.0, 5.2255, 1.5033, 1.5994, 2.7652e-6, 4.1342e-5, 1.8485e-3},
    {15.0, 5.2255, 1.5033, 1.5994, 7.0380e-6, 6.1132e-4, 2.1571e-3},
};

}  // namespace reference
