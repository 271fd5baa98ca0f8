#include "horopack/tetrahedron.hpp"

#include <cmath>

#include "horopack/volumes.hpp"

namespace horo {

std::array<int, 3> SymmetricTetrahedron::others(int i) const {
    std::array<int, 3> out{};
    int k = 0;
    for (int j = 0; j < 4; ++j)
        if (j != i)
            out[k++] = j;
    return out;
}

SymmetricTetrahedron build_tetrahedron(double z) {
    if (!(z > -1.0 && z < 1.0))
        throw DomainError("build_tetrahedron: z must lie in (-1, 1)");
    SymmetricTetrahedron t;
    t.z = z;
    t.alpha = alpha_from_z(z);
    t.volume = symmetric_tet_volume(t.alpha);

    const double w = std::sqrt((1.0 - z) * (1.0 + z));
    const double h = std::sqrt(3.0) / 2.0;
    t.vertex[0] = ProjectivePoint(1.0, 0.0, w, z);
    t.vertex[1] = ProjectivePoint(1.0, h, 0.0, -0.5);
    t.vertex[2] = ProjectivePoint(1.0, -h, 0.0, -0.5);
    t.vertex[3] = ProjectivePoint(1.0, 0.0, 0.0, 1.0);

    for (int i = 0; i < 4; ++i) {
        const auto o = t.others(i);
        PlaneCovector u = plane_from_points(t.vertex[o[0]], t.vertex[o[1]], t.vertex[o[2]]);
        if (u.value(t.vertex[i]) < 0.0)
            u = PlaneCovector(-u.u[0], -u.u[1], -u.u[2], -u.u[3]);
        t.face[i] = u;
    }
    return t;
}

double dihedral_angle(const SymmetricTetrahedron& t, int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
        throw InvalidInput("dihedral_angle: need two distinct vertex indices");
    // The faces meeting at edge (i, j) are the ones opposite the other two
    // vertices; both are oriented inward, so cos(angle) = -<u, v> normalized
    // by the dual Lorentz form.
    const auto o = [&] {
        std::array<int, 2> out{};
        int k = 0;
        for (int m = 0; m < 4; ++m)
            if (m != i && m != j)
                out[k++] = m;
        return out;
    }();
    const PlaneCovector& u = t.face[o[0]];
    const PlaneCovector& v = t.face[o[1]];
    const double uu = lorentz_product(pole(u), pole(u));
    const double vv = lorentz_product(pole(v), pole(v));
    const double uv = lorentz_product(pole(u), pole(v));
    double c = -uv / std::sqrt(uu * vv);
    c = std::fmin(1.0, std::fmax(-1.0, c));
    return std::acos(c);
}

ProjectivePoint mirror_x1(const ProjectivePoint& p) {
    return ProjectivePoint(p[0], -p[1], p[2], p[3]);
}

} // namespace horo
