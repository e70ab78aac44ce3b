// FFT-backed resolvent of the discrete Laplacian. Plans are cached per thread
// and keyed by (dim, n); FFTW planner calls are serialized behind a mutex
// (fftw_execute on distinct plans is thread-safe, planning is not).

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "l1pde/errors.hpp"
#include "l1pde/operators.hpp"

namespace l1pde {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real = nullptr;
    fftw_complex* spec = nullptr;
    std::size_t nreal = 0, nspec = 0;

    PlanPair(int dim, int n) {
        nreal = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
        nspec = dim == 1 ? std::size_t(n / 2 + 1) : std::size_t(n) * (n / 2 + 1);
        std::lock_guard<std::mutex> lock(planner_mutex());
        real = fftw_alloc_real(nreal);
        spec = fftw_alloc_complex(nspec);
        if (dim == 1) {
            fwd = fftw_plan_dft_r2c_1d(n, real, spec, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_1d(n, spec, real, FFTW_ESTIMATE);
        } else {
            fwd = fftw_plan_dft_r2c_2d(n, n, real, spec, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_2d(n, n, spec, real, FFTW_ESTIMATE);
        }
        if (!fwd || !bwd) throw ConfigError("fftw plan creation failed");
    }

    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;

    ~PlanPair() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        fftw_free(real);
        fftw_free(spec);
    }
};

PlanPair& thread_plan(int dim, int n) {
    thread_local std::unordered_map<long, std::unique_ptr<PlanPair>> cache;
    const long key = long(dim) * (1L << 32) + n;
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<PlanPair>(dim, n)).first;
    return *it->second;
}

} // namespace

void resolvent_inverse_into(const Field& z, double tau, Field& out) {
    if (!(tau > 0.0)) throw ConfigError("resolvent requires tau > 0");
    const int n = z.grid.n;
    PlanPair& p = thread_plan(z.grid.dim, n);

    std::copy(z.values.begin(), z.values.end(), p.real);
    fftw_execute(p.fwd);

    const LaplacianSymbol sym(z.grid);
    const double scale = 1.0 / double(z.grid.size());
    if (z.grid.dim == 1) {
        for (int k = 0; k <= n / 2; ++k) {
            const double factor = scale / (1.0 + tau * sym.axis_eigenvalue(k));
            p.spec[k][0] *= factor;
            p.spec[k][1] *= factor;
        }
    } else {
        const int ncols = n / 2 + 1;
        for (int k0 = 0; k0 < n; ++k0) {
            const double l0 = sym.axis_eigenvalue(k0);
            for (int k1 = 0; k1 < ncols; ++k1) {
                const double factor = scale / (1.0 + tau * (l0 + sym.axis_eigenvalue(k1)));
                auto& c = p.spec[std::size_t(k0) * ncols + k1];
                c[0] *= factor;
                c[1] *= factor;
            }
        }
    }

    fftw_execute(p.bwd);
    out.grid = z.grid;
    out.values.assign(p.real, p.real + p.nreal);
}

} // namespace l1pde
