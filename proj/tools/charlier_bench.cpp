// Benchmark comparing the OpenMP sweep kernels against the serial reference.

#include <omp.h>

#include <cstdio>
#include <string>

#include "charlier/sweep.hpp"

using namespace charlier;

namespace {

double time_regionmap(ExecMode mode, int workers, long nx, long ny) {
    RegionMapSpec spec;
    spec.nx = nx;
    spec.ny = ny;
    spec.n = 512;
    spec.mode = mode;
    spec.workers = workers;
    double t0 = omp_get_wtime();
    auto rows = run_regionmap(spec);
    double dt = omp_get_wtime() - t0;
    if (rows.size() != static_cast<std::size_t>(nx * ny)) std::abort();
    return dt;
}

double time_compare(ExecMode mode, int workers) {
    SweepSpec spec;
    spec.n_list = {128, 256, 512};
    spec.kind = PointKind::y;
    for (int i = 0; i < 12; ++i) spec.points.push_back({1.5 + 0.25 * i, 0.0});
    spec.formulas = {"outer", "origin"};
    spec.mode = mode;
    spec.workers = workers;
    double t0 = omp_get_wtime();
    auto rows = run_compare(spec);
    double dt = omp_get_wtime() - t0;
    if (rows.empty()) std::abort();
    return dt;
}

}  // namespace

int main(int argc, char** argv) {
    long nx = 40, ny = 40;
    int workers = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--cells" && i + 1 < argc) nx = ny = std::stol(argv[++i]);
        if (a == "--workers" && i + 1 < argc) workers = std::stoi(argv[++i]);
    }
    std::printf("threads available: %d\n", omp_get_max_threads());

    double rs = time_regionmap(ExecMode::serial, workers, nx, ny);
    double rp = time_regionmap(ExecMode::parallel, workers, nx, ny);
    std::printf("regionmap %ldx%ld   serial %.3fs   openmp %.3fs   speedup %.2fx\n", nx, ny,
                rs, rp, rs / rp);

    double cs = time_compare(ExecMode::serial, workers);
    double cp = time_compare(ExecMode::parallel, workers);
    std::printf("compare sweep      serial %.3fs   openmp %.3fs   speedup %.2fx\n", cs, cp,
                cs / cp);
    return 0;
}
