#include "rgg/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rgg {

namespace {

// Lentz's algorithm for the continued fraction of I_x(a,b).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 10.0 * kEps) return h;
    }
    throw std::runtime_error("reg_incomplete_beta: continued fraction did not converge");
}

// K15 nodes/weights on [-1,1]; G7 weights sit at the odd-index nodes.
constexpr double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0;
    double resg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(c + h * kKronrodNodes[i]);
        resk += kKronrodWeights[i] * fx;
        if (i % 2 == 1) resg += kGaussWeights[i / 2] * fx;
    }
    resk *= h;
    resg *= h;
    return {resk, std::fabs(resk - resg)};
}

void adapt(const std::function<double(double)>& f, double a, double b, const GkResult& whole,
           double rel_tol, double abs_floor, int depth, double& acc) {
    if (whole.error <= std::max(rel_tol * std::fabs(whole.value), abs_floor) || depth >= 50) {
        acc += whole.value;
        return;
    }
    const double m = 0.5 * (a + b);
    const GkResult left = gk15(f, a, m);
    const GkResult right = gk15(f, m, b);
    adapt(f, a, m, left, rel_tol, abs_floor, depth + 1, acc);
    adapt(f, m, b, right, rel_tol, abs_floor, depth + 1, acc);
}

}  // namespace

double reg_incomplete_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("reg_incomplete_beta: x must be in [0,1]");
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("reg_incomplete_beta: a,b must be > 0");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betacf(a, b, x) / a;
    }
    return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          b * std::log1p(-x) + a * std::log(x)) *
                     betacf(b, a, 1.0 - x) / b;
}

double elliptic_E(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("elliptic_E: k must be in [0,1]");
    if (k == 0.0) return M_PI / 2.0;
    if (k == 1.0) return 1.0;
    // AGM: E = K(k) * (1 - sum 2^{n-1} c_n^2), K = pi / (2 agm(1, k'))
    double an = 1.0;
    double bn = std::sqrt(1.0 - k * k);
    double cn = k;
    double sum = 0.5 * cn * cn;
    double pow2 = 0.5;
    for (int n = 0; n < 64 && std::fabs(cn) > 1e-17; ++n) {
        const double an1 = 0.5 * (an + bn);
        const double bn1 = std::sqrt(an * bn);
        cn = 0.5 * (an - bn);
        an = an1;
        bn = bn1;
        pow2 *= 2.0;
        sum += pow2 * cn * cn;
    }
    const double big_k = M_PI / (2.0 * an);
    return big_k * (1.0 - sum);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_floor) {
    if (a == b) return 0.0;
    double acc = 0.0;
    adapt(f, a, b, gk15(f, a, b), rel_tol, abs_floor, 0, acc);
    return acc;
}

}  // namespace rgg
