// Rips graphs of sampled circles and spheres: Euler characteristic and Betti
// numbers of the Whitney complex as eps varies.
//
//   rips_demo [points] [seed]

#include <cstdio>
#include <cstdlib>

#include "dircomplex.hpp"

using namespace dircomplex;

namespace {

void report(const char* name, const PointCloud& pc, double eps) {
    RipsGraph r = rips_graph(pc, eps);
    Complex c = whitney_complex(r.graph);
    BettiVector b = betti(c, 2);
    std::printf("%-8s n=%-4zu eps=%.2f edges=%-6zu dim=%d chi=%-4lld betti=", name, pc.size(), eps,
                r.graph.edge_count(), c.dimension(), static_cast<long long>(euler_characteristic(c)));
    for (std::size_t k = 0; k < b.b.size(); ++k) std::printf("%s%lld", k ? "," : "(", static_cast<long long>(b.b[k]));
    std::printf(")\n");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 150;
    std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

    PointCloud circle = gen::circle_points(60);
    for (double eps : {0.12, 0.22, 0.35}) report("circle", circle, eps);

    PointCloud sphere = gen::sphere_points(n, seed);
    for (double eps : {0.45, 0.55, 0.65}) report("sphere", sphere, eps);
    return 0;
}
