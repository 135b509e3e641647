// Compares the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>

#include "matkit/cofactor.hpp"
#include "matkit/count_matroid.hpp"
#include "matkit/graph.hpp"
#include "matkit/matroid.hpp"

using namespace matkit;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F> double time_of(F&& f, int reps = 1) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial,
                parallel, serial / parallel);
}

} // namespace

int main() {
    {
        MultiGraph g = make_lovasz_yemini(3, 5); // 108 vertices, 482 edges
        int ks = 0, kp = 0;
        double s = time_of([&] { ks = vertex_connectivity_serial(g); });
        double p = time_of([&] { kp = vertex_connectivity(g); });
        row("vertex_connectivity LY(3,5)", s, p);
        if (ks != kp) std::printf("  MISMATCH serial=%d parallel=%d\n", ks, kp);
    }
    {
        MultiGraph g = make_lovasz_yemini(2, 3);
        RankOracle o = count_oracle(g, CountParams(2, 3));
        // vconn scans bipartitions; restrict to the first 20 edges to stay in cap
        Bitset sub(g.num_edges());
        for (int e = 0; e < 20; ++e) sub.set(e);
        RankOracle r = restrict_oracle(o, sub);
        int vs = 0, vp = 0;
        double s = time_of([&] { vs = vertical_connectivity_serial(r).value; });
        double p = time_of([&] { vp = vertical_connectivity(r).value; });
        row("vertical_connectivity m=20", s, p);
        if (vs != vp) std::printf("  MISMATCH serial=%d parallel=%d\n", vs, vp);
    }
    {
        MultiGraph g = make_complete(8);
        Bitset full = Bitset::full(g.num_edges());
        CofactorOptions ser, par;
        ser.parallel = false;
        int rs = 0, rp = 0;
        double s = time_of([&] { rs = cofactor_rank(g, full, 1, ser); }, 5);
        double p = time_of([&] { rp = cofactor_rank(g, full, 1, par); }, 5);
        row("cofactor rank r1(K_8)", s, p);
        if (rs != rp) std::printf("  MISMATCH serial=%d parallel=%d\n", rs, rp);
    }
    return 0;
}
