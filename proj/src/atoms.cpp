#include "emw/atoms.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "emw/summation.h"
#include "emw/threading.h"

namespace emw {

namespace {

// Offsets of a label node inside the flat sample array.
struct GridShape {
    int nx;
    std::size_t per_s;  // nx^3
    explicit GridShape(const EuclideanGrid& g)
        : nx(g.nx),
          per_s(static_cast<std::size_t>(g.nx) * g.nx * g.nx) {}
};

}  // namespace

EuclideanSamples restrict_R_E(const ConeCoefficients& f,
                              std::shared_ptr<const EuclideanGrid> grid) {
    if (!f.quadrature) throw std::invalid_argument("restrict_R_E: null quadrature");
    if (!grid) throw std::invalid_argument("restrict_R_E: null grid");
    const ConeQuadrature& q = *f.quadrature;
    const EuclideanGrid& g = *grid;
    const int nx = g.nx;
    const int nth = q.angular_count;
    const int nph = q.phi_count;
    const Eigen::Index nA = static_cast<Eigen::Index>(nth) * nph;
    const double h = g.x_axis[1] - g.x_axis[0];
    const int ns = g.s_count_per_sign;

    EuclideanSamples out = zero_samples(grid);

    // Spatial phases factorize: e^{-i p.x} = E1(A,a) E2(A,b) E3(A,c) per
    // radial shell, turning the angular sum into one GEMM per x1-slab.
    Eigen::MatrixXcd E1(nA, nx), E2(nA, nx), E3(nA, nx), F(nA, 3), H(nA, 3 * nx);
    std::vector<complexd> block(3 * static_cast<std::size_t>(nx) * nx * nx);

    for (int b = 0; b < 2; ++b) {
        const int k_lo = b == 0 ? 0 : ns;  // s>0 pairs with p0>0
        for (int r = 0; r < q.radial_count; ++r) {
            const std::size_t base =
                (static_cast<std::size_t>(b) * q.radial_count + r) * nA;
            const double omega = q.nodes[base].omega();

            for (Eigen::Index A = 0; A < nA; ++A) {
                const LightConeMomentum& p = q.nodes[base + A];
                const complexd s1 = std::exp(complexd(0.0, -p.p1 * h));
                const complexd s2 = std::exp(complexd(0.0, -p.p2 * h));
                const complexd s3 = std::exp(complexd(0.0, -p.p3 * h));
                complexd e1 = std::exp(complexd(0.0, -p.p1 * g.x_axis[0]));
                complexd e2 = std::exp(complexd(0.0, -p.p2 * g.x_axis[0]));
                complexd e3 = std::exp(complexd(0.0, -p.p3 * g.x_axis[0]));
                for (int a = 0; a < nx; ++a) {
                    E1(A, a) = e1;
                    E2(A, a) = e2;
                    E3(A, a) = e3;
                    e1 *= s1;
                    e2 *= s2;
                    e3 *= s3;
                }
                const Vector3c v = f.projected
                                       ? f.values[base + A]
                                       : pi_apply(p, f.values[base + A]);
                F.row(A) = q.weights[base + A] * v.transpose();
            }

            for (int bc = 0; bc < nx; ++bc)
                for (int m = 0; m < 3; ++m)
                    H.col(3 * bc + m) = E2.col(bc).cwiseProduct(F.col(m));

            parallel_for(static_cast<std::size_t>(nx), [&](std::size_t a) {
                const Eigen::MatrixXcd T =
                    E3.array().colwise() * E1.col(static_cast<Eigen::Index>(a)).array();
                const Eigen::MatrixXcd slab = T.transpose() * H;  // (c, 3b+m)
                for (int bc = 0; bc < nx; ++bc)
                    for (int c = 0; c < nx; ++c) {
                        const std::size_t sp =
                            ((a * nx + bc) * static_cast<std::size_t>(nx) + c) * 3;
                        for (int m = 0; m < 3; ++m)
                            block[sp + m] = slab(c, 3 * bc + m);
                    }
            });

            for (int k = k_lo; k < k_lo + ns; ++k) {
                const double fac = 2.0 * std::exp(-omega * std::abs(g.s_nodes[k]));
                const std::size_t off =
                    static_cast<std::size_t>(k) * nx * nx * nx;
                for (std::size_t sp = 0; sp < block.size() / 3; ++sp)
                    for (int m = 0; m < 3; ++m)
                        out.values[off + sp](m) += fac * block[3 * sp + m];
            }
        }
    }
    return out;
}

Vector3c construct_R_E_star(const EuclideanSamples& phi, const FourVector& xp) {
    if (phi.values.empty()) return Vector3c::Zero();
    const EuclideanGrid& g = *phi.grid;
    const GridShape shape(g);
    return pairwise_sum<Vector3c>(phi.values.size(), [&](std::size_t i) -> Vector3c {
        const std::size_t k = i / shape.per_s;
        std::size_t rem = i % shape.per_s;
        const int a = static_cast<int>(rem / (shape.nx * static_cast<std::size_t>(shape.nx)));
        rem %= shape.nx * static_cast<std::size_t>(shape.nx);
        const int b = static_cast<int>(rem / shape.nx);
        const int c = static_cast<int>(rem % shape.nx);
        // Psi_(x,is)(x') = (1/2) L((x'-x) + i s e0); never singular for real x'.
        const CFourVector w(
            FourVector{xp.x1 - g.x_axis[a], xp.x2 - g.x_axis[b],
                       xp.x3 - g.x_axis[c], xp.x0},
            FourVector{0.0, 0.0, 0.0, g.s_nodes[k]});
        return (0.5 * g.weight(k, a, b, c)) * (detail::l_entries(w) * phi.values[i]);
    });
}

namespace {

struct FftwBuffer {
    fftw_complex* p = nullptr;
    explicit FftwBuffer(std::size_t n) {
        p = fftw_alloc_complex(n);
        if (!p) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(p); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    complexd* c() { return reinterpret_cast<complexd*>(p); }
};

}  // namespace

EuclideanSamples project_P(const EuclideanSamples& phi) {
    if (!phi.grid) throw std::invalid_argument("project_P: null grid");
    const EuclideanGrid& g = *phi.grid;
    const int nx = g.nx;
    const int ns = g.s_count_per_sign;
    const int pad = 2 * nx;
    const std::size_t pn = static_cast<std::size_t>(pad) * pad * pad;
    const std::size_t per_s = static_cast<std::size_t>(nx) * nx * nx;
    const double h = g.x_axis[1] - g.x_axis[0];

    EuclideanSamples out = zero_samples(phi.grid);

    std::vector<std::unique_ptr<FftwBuffer>> src(3), ker(9), acc(3);
    for (auto& b : src) b = std::make_unique<FftwBuffer>(pn);
    for (auto& b : ker) b = std::make_unique<FftwBuffer>(pn);
    for (auto& b : acc) b = std::make_unique<FftwBuffer>(pn);

    fftw_plan fwd = fftw_plan_dft_3d(pad, pad, pad, src[0]->p, src[0]->p,
                                     FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_3d(pad, pad, pad, acc[0]->p, acc[0]->p,
                                     FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd || !bwd) throw std::runtime_error("project_P: FFT planning failed");

    const double inv_pn = 1.0 / static_cast<double>(pn);

    for (int sgn = 0; sgn < 2; ++sgn) {
        const int k_lo = sgn == 0 ? 0 : ns;
        for (int k = k_lo; k < k_lo + ns; ++k) {
            // Source spectrum: node weights ride with the source samples, so
            // the kernel passes stay pure convolutions.
            for (int m = 0; m < 3; ++m) {
                complexd* s = src[m]->c();
                std::fill(s, s + pn, complexd(0.0, 0.0));
                for (int a = 0; a < nx; ++a)
                    for (int b = 0; b < nx; ++b) {
                        const std::size_t row =
                            (static_cast<std::size_t>(a) * pad + b) * pad;
                        const std::size_t node =
                            static_cast<std::size_t>(k) * per_s +
                            (static_cast<std::size_t>(a) * nx + b) * nx;
                        const double wab = g.s_weight[k] * g.x_weight[a] * g.x_weight[b];
                        for (int c = 0; c < nx; ++c)
                            s[row + c] = wab * g.x_weight[c] * phi.values[node + c](m);
                    }
                fftw_execute_dft(fwd, src[m]->p, src[m]->p);
            }

            for (int j = k_lo; j < k_lo + ns; ++j) {
                const double sigma = g.s_nodes[j] + g.s_nodes[k];
                // K on the offset lattice, wrapped into the padded box. The
                // offset-nx planes must be zero so circular equals linear;
                // the in-place FFT overwrote them, so clear before refilling.
                for (int mn = 0; mn < 9; ++mn) {
                    complexd* kc = ker[mn]->c();
                    std::fill(kc, kc + pn, complexd(0.0, 0.0));
                }
                parallel_for(static_cast<std::size_t>(2 * nx - 1), [&](std::size_t ida) {
                    const int da = static_cast<int>(ida) - (nx - 1);
                    const std::size_t ia = static_cast<std::size_t>(da < 0 ? da + pad : da);
                    for (int db = -(nx - 1); db <= nx - 1; ++db) {
                        const std::size_t ib = static_cast<std::size_t>(db < 0 ? db + pad : db);
                        const std::size_t row = (ia * pad + ib) * pad;
                        for (int dc = -(nx - 1); dc <= nx - 1; ++dc) {
                            const std::size_t ic = static_cast<std::size_t>(dc < 0 ? dc + pad : dc);
                            const CFourVector w(
                                FourVector{da * h, db * h, dc * h, 0.0},
                                FourVector{0.0, 0.0, 0.0, sigma});
                            const Matrix3c L = detail::l_entries(w);
                            for (int m = 0; m < 3; ++m)
                                for (int n = 0; n < 3; ++n)
                                    ker[3 * m + n]->c()[row + ic] = L(m, n);
                        }
                    }
                });
                for (int mn = 0; mn < 9; ++mn)
                    fftw_execute_dft(fwd, ker[mn]->p, ker[mn]->p);
                for (int m = 0; m < 3; ++m) {
                    complexd* am = acc[m]->c();
                    std::fill(am, am + pn, complexd(0.0, 0.0));
                    for (int n = 0; n < 3; ++n) {
                        const complexd* kh = ker[3 * m + n]->c();
                        const complexd* sh = src[n]->c();
                        for (std::size_t t = 0; t < pn; ++t) am[t] += kh[t] * sh[t];
                    }
                    fftw_execute_dft(bwd, acc[m]->p, acc[m]->p);
                }
                for (int a = 0; a < nx; ++a)
                    for (int b = 0; b < nx; ++b) {
                        const std::size_t row =
                            (static_cast<std::size_t>(a) * pad + b) * pad;
                        const std::size_t node =
                            static_cast<std::size_t>(j) * per_s +
                            (static_cast<std::size_t>(a) * nx + b) * nx;
                        for (int c = 0; c < nx; ++c)
                            for (int m = 0; m < 3; ++m)
                                out.values[node + c](m) +=
                                    inv_pn * acc[m]->c()[row + c];
                    }
            }
        }
    }

    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    return out;
}

EuclideanSamples project_P_reference(const EuclideanSamples& phi) {
    if (!phi.grid) throw std::invalid_argument("project_P_reference: null grid");
    const EuclideanGrid& g = *phi.grid;
    const int nx = g.nx;
    const int ns = g.s_count_per_sign;
    const std::size_t per_s = static_cast<std::size_t>(nx) * nx * nx;

    EuclideanSamples out = zero_samples(phi.grid);
    parallel_for(out.values.size(), [&](std::size_t i) {
        const std::size_t j = i / per_s;
        std::size_t rem = i % per_s;
        const int ap = static_cast<int>(rem / (nx * static_cast<std::size_t>(nx)));
        rem %= nx * static_cast<std::size_t>(nx);
        const int bp = static_cast<int>(rem / nx);
        const int cp = static_cast<int>(rem % nx);
        const double sj = g.s_nodes[j];
        const int k_lo = sj > 0.0 ? 0 : ns;

        Vector3c accv = Vector3c::Zero();
        for (int k = k_lo; k < k_lo + ns; ++k) {
            const double sigma = sj + g.s_nodes[k];
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < nx; ++b)
                    for (int c = 0; c < nx; ++c) {
                        const CFourVector w(
                            FourVector{g.x_axis[ap] - g.x_axis[a],
                                       g.x_axis[bp] - g.x_axis[b],
                                       g.x_axis[cp] - g.x_axis[c], 0.0},
                            FourVector{0.0, 0.0, 0.0, sigma});
                        accv += g.weight(k, a, b, c) *
                                (detail::l_entries(w) *
                                 phi.values[g.node_index(k, a, b, c)]);
                    }
        }
        out.values[i] = accv;
    });
    return out;
}

Vector3c reproduce_at(const EuclideanSamples& phi, const TubePoint& zp) {
    if (phi.values.empty()) return Vector3c::Zero();
    const EuclideanGrid& g = *phi.grid;
    const GridShape shape(g);
    const int branch = zp.branch();
    return pairwise_sum<Vector3c>(phi.values.size(), [&](std::size_t i) -> Vector3c {
        const std::size_t k = i / shape.per_s;
        if ((g.s_nodes[k] > 0.0 ? +1 : -1) != branch) return Vector3c::Zero();
        std::size_t rem = i % shape.per_s;
        const int a = static_cast<int>(rem / (shape.nx * static_cast<std::size_t>(shape.nx)));
        rem %= shape.nx * static_cast<std::size_t>(shape.nx);
        const int b = static_cast<int>(rem / shape.nx);
        const int c = static_cast<int>(rem % shape.nx);
        const CFourVector w(
            FourVector{zp.x.x1 - g.x_axis[a], zp.x.x2 - g.x_axis[b],
                       zp.x.x3 - g.x_axis[c], zp.x.x0},
            FourVector{zp.y.y.x1, zp.y.y.x2, zp.y.y.x3,
                       zp.y.y.x0 + g.s_nodes[k]});
        return g.weight(k, a, b, c) * (detail::l_entries(w) * phi.values[i]);
    });
}

Vector3c scalar_reconstruct(const EuclideanSamples& phi, const FourVector& xp) {
    if (phi.values.empty()) return Vector3c::Zero();
    const EuclideanGrid& g = *phi.grid;
    const GridShape shape(g);
    return pairwise_sum<Vector3c>(phi.values.size(), [&](std::size_t i) -> Vector3c {
        const std::size_t k = i / shape.per_s;
        std::size_t rem = i % shape.per_s;
        const int a = static_cast<int>(rem / (shape.nx * static_cast<std::size_t>(shape.nx)));
        rem %= shape.nx * static_cast<std::size_t>(shape.nx);
        const int b = static_cast<int>(rem / shape.nx);
        const int c = static_cast<int>(rem % shape.nx);
        const complexd psi = scalar_wavelet(g.label(k, a, b, c), xp);
        return (g.weight(k, a, b, c) * psi) * phi.values[i];
    });
}

}  // namespace emw
