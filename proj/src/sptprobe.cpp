#include "negaspec/sptprobe.hpp"

#include <cmath>
#include <stdexcept>

namespace negaspec {

StringOrderResult string_order_sa(double beta, int length, int i, int j) {
    if (length < 3 || i == j) throw std::invalid_argument("string_order: L >= 3, i != j");
    return {beta, length, i, j, 1.0, 0.0, Method::closed_form};
}

StringOrderResult string_order_sb(double beta, int length, int i, int j) {
    if (length < 3 || i == j) throw std::invalid_argument("string_order: L >= 3, i != j");
    if (beta < 0.0) throw std::invalid_argument("string_order: beta >= 0");
    StringOrderResult r{beta, length, i, j, 1.0, 0.0, Method::transfer};

    // cyclic transfer-matrix product at coupling 2 beta, with the two bonds
    // entering i and j replaced by zero-coupling (all-ones) matrices
    const double k = 2.0 * beta;
    auto wrap = [length](int v) { return (v % length + length) % length; };
    const int cut1 = wrap(i), cut2 = wrap(j); // bond (n-1, n) removed for n = i, j
    double t[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    double tp[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    double log_scale_num = 0.0, log_scale_den = 0.0;
    for (int n = 0; n < length; ++n) {
        bool removed = (n == cut1 || n == cut2);
        double bond[2][2];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double sa = a ? -1.0 : 1.0, sb = b ? -1.0 : 1.0;
                bond[a][b] = std::exp(k * (sa * sb - 1.0)); // scaled by e^{-k}
            }
        auto mul = [](double m[2][2], const double s[2][2], double &log_scale) {
            double nx[2][2];
            double mx = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    nx[a][b] = m[a][0] * s[0][b] + m[a][1] * s[1][b];
                    mx = std::max(mx, std::fabs(nx[a][b]));
                }
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) m[a][b] = nx[a][b] / mx;
            log_scale += std::log(mx);
        };
        static const double ones[2][2] = {{1.0, 1.0}, {1.0, 1.0}};
        mul(t, removed ? ones : bond, log_scale_num);
        mul(tp, bond, log_scale_den);
        log_scale_num += removed ? 0.0 : k;
        log_scale_den += k;
    }
    double num = (t[0][0] + t[1][1]) * std::exp(log_scale_num - log_scale_den);
    double den = tp[0][0] + tp[1][1];
    r.s_b = num / den;
    return r;
}

PartitionResult overlap_logZ(OverlapKind kind, double beta, int length) {
    switch (kind) {
        case OverlapKind::z_2d: return logZ_ising1d(2.0 * beta, length);
        case OverlapKind::z_3d: return logZ_gauge2d(2.0 * beta, length);
        case OverlapKind::x_3d: return logZ_ising2d(2.0 * beta, length);
    }
    throw std::invalid_argument("overlap_logZ: unsupported kind");
}

} // namespace negaspec
