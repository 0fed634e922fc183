#include "qpaths/qsystem/hard_particle.hpp"

namespace qp {

HardParticleGraph HardParticleGraph::make(int r) {
    if (r < 0) throw std::invalid_argument("G_r needs r >= 0");
    HardParticleGraph g{r, Matrix<int>(static_cast<std::size_t>(2 * r + 1), static_cast<std::size_t>(2 * r + 1))};
    auto link = [&](int a, int b) {
        g.adjacency(a - 1, b - 1) = 1;
        g.adjacency(b - 1, a - 1) = 1;
    };
    if (r >= 1) {
        link(1, 2);
        link(2 * r, 2 * r + 1);
    }
    for (int i = 1; i <= r - 1; ++i) {
        link(2 * i, 2 * i + 1);
        link(2 * i, 2 * i + 2);
        link(2 * i + 1, 2 * i + 2);
    }
    return g;
}

}  // namespace qp
