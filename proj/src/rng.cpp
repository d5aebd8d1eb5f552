#include "entdyn/rng.hpp"

#include <cmath>

namespace entdyn {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

cxd Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cxd(re, im);
}

PureState Rng::haar_state() {
    const cxd a0 = complex_normal();
    const cxd a1 = complex_normal();
    const cxd a2 = complex_normal();
    const cxd a3 = complex_normal();
    return PureState::normalized(a0, a1, a2, a3);
}

DensityMatrix Rng::random_x_state(Family family) {
    double p[4];
    double sum = 0.0;
    for (double &x : p) {
        double u = uniform();
        while (u >= 1.0) u = uniform();
        x = -std::log(1.0 - u);
        sum += x;
    }
    for (double &x : p) x /= sum;

    const int lo = family == Family::noon ? 1 : 0;
    const int hi = family == Family::noon ? 2 : 3;
    const double bound = std::sqrt(p[lo] * p[hi]);
    const double mag = uniform() * bound;
    const double phase = 2.0 * M_PI * uniform();
    const cxd z = mag * cxd(std::cos(phase), std::sin(phase));

    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = p[i];
    m(lo, hi) = z;
    m(hi, lo) = std::conj(z);
    return DensityMatrix(m);
}

DensityMatrix Rng::random_density(int rank) {
    if (rank < 1 || rank > 16) throw Error("random_density: rank out of range");
    double w[16];
    double sum = 0.0;
    for (int k = 0; k < rank; ++k) {
        double u = uniform();
        while (u >= 1.0) u = uniform();
        w[k] = -std::log(1.0 - u);
        sum += w[k];
    }
    Mat4 m;
    for (int k = 0; k < rank; ++k) {
        const PureState psi = haar_state();
        const std::array<cxd, 4> &a = psi.amplitudes();
        const double weight = w[k] / sum;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) += weight * a[i] * std::conj(a[j]);
    }
    return DensityMatrix(hermitize(m));
}

} // namespace entdyn
