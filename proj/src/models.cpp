#include "f2gauge/models.hpp"

#include <map>
#include <stdexcept>

namespace f2g {

namespace {

int wrap(int a, int L) {
    int m = a % L;
    return m < 0 ? m + L : m;
}

struct Grid2 {
    int L;
    int site(int x, int y) const { return wrap(x, L) + L * wrap(y, L); }
};

struct Grid3 {
    int L;
    int site(int x, int y, int z) const {
        return wrap(x, L) + L * (wrap(y, L) + L * wrap(z, L));
    }
};

// offset tables; slot 0 carries the first qubit of a unit cell
struct Off2 {
    int dx, dy;
};

const std::vector<Off2> kPlaquette = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const std::vector<Off2> kPlaquetteNeg = {{0, 0}, {-1, 0}, {0, -1}, {-1, -1}};
const std::vector<Off2> kTriangle = {{0, 0}, {1, 0}, {0, 1}};

// quasi-cluster: X generator has slot-1 support on a right triangle and
// slot-0 support on its hypotenuse row; the lone single-slot site sits at
// the generator's own vertex so z1z2 there flips exactly this generator
const std::vector<Off2> kQuasiX0 = {{0, -1}, {1, -1}};
const std::vector<Off2> kQuasiX1 = {{0, -1}, {1, -1}, {0, 0}};
const std::vector<Off2> kQuasiZ0 = {{0, 1}, {-1, 1}, {0, 0}};
const std::vector<Off2> kQuasiZ1 = {{0, 1}, {-1, 1}};

struct Off3 {
    int dx, dy, dz;
};

// corner conventions for the cube-built codes
const std::vector<Off3> kUF = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const std::vector<Off3> kDF = {{1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
const std::vector<Off3> kRegEven = {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
const std::vector<Off3> kRegOdd = {{1, 1, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}};

QubitLabel label2(int x, int y, int slot) { return {{x, y}, slot}; }
QubitLabel label3(int x, int y, int z, int slot) { return {{x, y, z}, slot}; }

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "tc2",        "tc3",          "xcube",       "cluster", "ising-plaquette",
        "newman-moore", "quasicluster", "clustercube", "haah",    "base-xx",
        "base-zz",    "base-ctriangle", "base-chex",  "tri-tc2", "stacks",
    };
    return names;
}

std::string family_name(Family f) { return family_names()[static_cast<int>(f)]; }

Family family_from_name(const std::string& s) {
    const auto& names = family_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<Family>(i);
    throw std::invalid_argument("unknown model family: " + s);
}

// ---------------------------------------------------------------- 2D models

StabCode build_tc2(int L) {
    Grid2 g{L};
    StabCode code;
    code.name = "tc2";
    code.n_qubits = std::size_t(2) * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int d) { return std::size_t(2 * g.site(x, y) + d); };
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            for (int d = 0; d < 2; ++d) code.qubit_labels[q(x, y, d)] = label2(x, y, d);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec a(code.n_qubits);
            a.x.flip(q(x, y, 0));
            a.x.flip(q(x - 1, y, 0));
            a.x.flip(q(x, y, 1));
            a.x.flip(q(x, y - 1, 1));
            code.add(a);
        }
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec b(code.n_qubits);
            b.z.flip(q(x, y, 0));
            b.z.flip(q(x, y, 1));
            b.z.flip(q(x, y + 1, 0));
            b.z.flip(q(x + 1, y, 1));
            code.add(b);
        }
    return code;
}

StabCode build_tc3(int L) {
    Grid3 g{L};
    StabCode code;
    code.name = "tc3";
    code.n_qubits = std::size_t(3) * L * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int z, int d) { return std::size_t(3 * g.site(x, y, z) + d); };
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x)
                for (int d = 0; d < 3; ++d) code.qubit_labels[q(x, y, z, d)] = label3(x, y, z, d);
    auto at = [&](int x, int y, int z, int d, int delta) {
        int c[3] = {x, y, z};
        c[d] += delta;
        return q(c[0], c[1], c[2], d);
    };
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                PauliVec a(code.n_qubits);
                for (int d = 0; d < 3; ++d) {
                    a.x.flip(at(x, y, z, d, 0));
                    a.x.flip(at(x, y, z, d, -1));
                }
                code.add(a);
            }
    for (int alpha = 0; alpha < 3; ++alpha) {
        int beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x) {
                    int c[3] = {x, y, z};
                    PauliVec b(code.n_qubits);
                    auto edge = [&](int db, int dg, int dir) {
                        int p[3] = {c[0], c[1], c[2]};
                        p[beta] += db;
                        p[gamma] += dg;
                        return q(p[0], p[1], p[2], dir);
                    };
                    b.z.flip(edge(0, 0, beta));
                    b.z.flip(edge(0, 0, gamma));
                    b.z.flip(edge(0, 1, beta));
                    b.z.flip(edge(1, 0, gamma));
                    code.add(b);
                }
    }
    return code;
}

StabCode build_xcube(int L) {
    Grid3 g{L};
    StabCode code;
    code.name = "xcube";
    code.n_qubits = std::size_t(3) * L * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int z, int d) { return std::size_t(3 * g.site(x, y, z) + d); };
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x)
                for (int d = 0; d < 3; ++d) code.qubit_labels[q(x, y, z, d)] = label3(x, y, z, d);
    for (int alpha = 0; alpha < 3; ++alpha) {
        int beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x) {
                    int c[3] = {x, y, z};
                    PauliVec a(code.n_qubits);
                    auto edge = [&](int d, int delta) {
                        int p[3] = {c[0], c[1], c[2]};
                        p[d] += delta;
                        return q(p[0], p[1], p[2], d);
                    };
                    a.x.flip(edge(beta, 0));
                    a.x.flip(edge(beta, -1));
                    a.x.flip(edge(gamma, 0));
                    a.x.flip(edge(gamma, -1));
                    code.add(a);
                }
    }
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                PauliVec b(code.n_qubits);
                for (int d = 0; d < 3; ++d) {
                    int beta = (d + 1) % 3, gamma = (d + 2) % 3;
                    for (int db = 0; db < 2; ++db)
                        for (int dg = 0; dg < 2; ++dg) {
                            int p[3] = {x, y, z};
                            p[beta] += db;
                            p[gamma] += dg;
                            b.z.flip(q(p[0], p[1], p[2], d));
                        }
                }
                code.add(b);
            }
    return code;
}

namespace {

StabCode build_two_slot_2d(const std::string& name, int L, const std::vector<Off2>& x0,
                           const std::vector<Off2>& x1, const std::vector<Off2>& z0,
                           const std::vector<Off2>& z1, bool reflected) {
    Grid2 g{L};
    StabCode code;
    code.name = name;
    code.n_qubits = std::size_t(2) * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int s) { return std::size_t(2 * g.site(x, y) + s); };
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            for (int s = 0; s < 2; ++s) code.qubit_labels[q(x, y, s)] = label2(x, y, s);
    auto place = [&](PauliVec& p, bool xtype, int vx, int vy, const std::vector<Off2>& offs,
                     int slot) {
        for (const Off2& o : offs) {
            int dx = reflected ? o.dy : o.dx;
            int dy = reflected ? o.dx : o.dy;
            (xtype ? p.x : p.z).flip(q(vx + dx, vy + dy, slot));
        }
    };
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec p(code.n_qubits);
            place(p, true, x, y, x0, 0);
            place(p, true, x, y, x1, 1);
            code.add(p);
        }
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec p(code.n_qubits);
            place(p, false, x, y, z0, 0);
            place(p, false, x, y, z1, 1);
            code.add(p);
        }
    return code;
}

}  // namespace

StabCode build_cluster(int L) {
    return build_two_slot_2d("cluster", L, {{0, 0}}, kPlaquette, kPlaquetteNeg, {{0, 0}}, false);
}

StabCode build_quasicluster(int L, bool reflected) {
    return build_two_slot_2d("quasicluster", L, kQuasiX0, kQuasiX1, kQuasiZ0, kQuasiZ1,
                             reflected);
}

StabCode build_ising_plaquette(int L) {
    Grid2 g{L};
    StabCode code;
    code.name = "ising-plaquette";
    code.n_qubits = std::size_t(L) * L;
    code.qubit_labels.resize(code.n_qubits);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) code.qubit_labels[g.site(x, y)] = label2(x, y, 0);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec p(code.n_qubits);
            for (const Off2& o : kPlaquette) p.z.flip(g.site(x + o.dx, y + o.dy));
            code.add(p);
        }
    return code;
}

StabCode build_newman_moore(int L) {
    Grid2 g{L};
    StabCode code;
    code.name = "newman-moore";
    code.n_qubits = std::size_t(L) * L;
    code.qubit_labels.resize(code.n_qubits);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) code.qubit_labels[g.site(x, y)] = label2(x, y, 0);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec p(code.n_qubits);
            for (const Off2& o : kTriangle) p.z.flip(g.site(x + o.dx, y + o.dy));
            code.add(p);
        }
    return code;
}

namespace {

StabCode build_two_slot_3d(const std::string& name, int L, const std::vector<Off3>& x_both,
                           const std::vector<Off3>& x_only1, const std::vector<Off3>& z_both,
                           const std::vector<Off3>& z_only0, const std::vector<Off3>& x_only0,
                           const std::vector<Off3>& z_only1) {
    Grid3 g{L};
    StabCode code;
    code.name = name;
    code.n_qubits = std::size_t(2) * L * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int z, int s) { return std::size_t(2 * g.site(x, y, z) + s); };
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x)
                for (int s = 0; s < 2; ++s) code.qubit_labels[q(x, y, z, s)] = label3(x, y, z, s);
    auto placeq = [&](Bits& part, int cx, int cy, int cz, const std::vector<Off3>& offs,
                      int slot) {
        for (const Off3& o : offs) part.flip(q(cx + o.dx, cy + o.dy, cz + o.dz, slot));
    };
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                PauliVec p(code.n_qubits);
                placeq(p.x, x, y, z, x_both, 0);
                placeq(p.x, x, y, z, x_both, 1);
                placeq(p.x, x, y, z, x_only0, 0);
                placeq(p.x, x, y, z, x_only1, 1);
                code.add(p);
            }
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                PauliVec p(code.n_qubits);
                placeq(p.z, x, y, z, z_both, 0);
                placeq(p.z, x, y, z, z_both, 1);
                placeq(p.z, x, y, z, z_only0, 0);
                placeq(p.z, x, y, z, z_only1, 1);
                code.add(p);
            }
    return code;
}

}  // namespace

StabCode build_clustercube(int L) {
    // X generators: both slots on the four origin-corner tetrahedron, slot 1
    // alone on the inverted one; Z generators are the [111]-inverted duals.
    return build_two_slot_3d("clustercube", L, /*x_both=*/kUF, /*x_only1=*/kDF,
                             /*z_both=*/kDF, /*z_only0=*/kUF, {}, {});
}

StabCode build_haah(int L) {
    return build_two_slot_3d("haah", L, {}, /*x_only1=*/kUF, {}, /*z_only0=*/kDF,
                             /*x_only0=*/kRegEven, /*z_only1=*/kRegOdd);
}

StabCode build_tri_tc2(int L) {
    // square lattice plus the (1,1) diagonal; edge dirs: 0 = +x, 1 = +y, 2 = +x+y
    Grid2 g{L};
    StabCode code;
    code.name = "tri-tc2";
    code.n_qubits = std::size_t(3) * L * L;
    code.qubit_labels.resize(code.n_qubits);
    auto q = [&](int x, int y, int d) { return std::size_t(3 * g.site(x, y) + d); };
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            for (int d = 0; d < 3; ++d) code.qubit_labels[q(x, y, d)] = label2(x, y, d);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec a(code.n_qubits);
            a.x.flip(q(x, y, 0));
            a.x.flip(q(x - 1, y, 0));
            a.x.flip(q(x, y, 1));
            a.x.flip(q(x, y - 1, 1));
            a.x.flip(q(x, y, 2));
            a.x.flip(q(x - 1, y - 1, 2));
            code.add(a);
        }
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            PauliVec up(code.n_qubits);  // triangle above the diagonal
            up.z.flip(q(x, y, 0));
            up.z.flip(q(x + 1, y, 1));
            up.z.flip(q(x, y, 2));
            code.add(up);
            PauliVec dn(code.n_qubits);
            dn.z.flip(q(x, y, 1));
            dn.z.flip(q(x, y + 1, 0));
            dn.z.flip(q(x, y, 2));
            code.add(dn);
        }
    return code;
}

// ---------------------------------------------------------------- stacks

int StackLayout::idx3(int x, int y, int z) const {
    return wrap(x, L) + L * (wrap(y, L) + L * wrap(z, L));
}

std::array<int, 3> StackLayout::coords(int site) const {
    return {site % L, (site / L) % L, site / (L * L)};
}

std::size_t StackLayout::vertex_qubit(int site, int alpha, int slot) const {
    return std::size_t(6 * site + 2 * alpha + slot);
}

std::size_t StackLayout::x_stab(int alpha, int site) const {
    return std::size_t(alpha) * L * L * L + site;
}

std::size_t StackLayout::z_stab(int alpha, int site) const {
    return z_offset + std::size_t(alpha) * L * L * L + site;
}

std::size_t StackLayout::edge_qubit(int site, int dir, int slot) const {
    return std::size_t(2 * (3 * site + dir) + slot);
}

int StackLayout::edge_slot_of_layer(int dir, int alpha) const {
    if (alpha == (dir + 1) % 3) return 0;
    if (alpha == (dir + 2) % 3) return 1;
    throw std::invalid_argument("edge does not lie in that layer direction");
}

std::size_t StackLayout::a_stab(int alpha, int site) const { return x_stab(alpha, site); }
std::size_t StackLayout::b_stab(int alpha, int site) const { return z_stab(alpha, site); }

namespace {

// 2D offset of layer alpha embedded along the cyclic frame: (s, t) spans
// (e_{alpha+1}, e_{alpha+2})
std::array<int, 3> embed(int alpha, int s, int t) {
    std::array<int, 3> d{0, 0, 0};
    d[(alpha + 1) % 3] += s;
    d[(alpha + 2) % 3] += t;
    return d;
}

}  // namespace

Bits StackLayout::x_cube_set(int cx, int cy, int cz) const {
    Bits set(n_stabilizers);
    for (int alpha = 0; alpha < 3; ++alpha) {
        auto d = embed(alpha, cube_anchor_2d[0], cube_anchor_2d[1]);
        int base[3] = {cx + d[0], cy + d[1], cz + d[2]};
        int shifted[3] = {base[0], base[1], base[2]};
        shifted[alpha] += 1;
        if (family2d == Family::TC2) {
            set.flip(a_stab(alpha, idx3(base[0], base[1], base[2])));
        } else {
            set.flip(x_stab(alpha, idx3(base[0], base[1], base[2])));
            set.flip(x_stab(alpha, idx3(shifted[0], shifted[1], shifted[2])));
        }
    }
    return set;
}

Bits StackLayout::z_cube_set(int cx, int cy, int cz) const {
    Bits set(n_stabilizers);
    for (int alpha = 0; alpha < 3; ++alpha) {
        if (family2d == Family::TC2) {
            // the two faces of the cube normal to e_alpha
            int base[3] = {cx, cy, cz};
            set.flip(b_stab(alpha, idx3(base[0], base[1], base[2])));
            base[alpha] += 1;
            set.flip(b_stab(alpha, idx3(base[0], base[1], base[2])));
        } else {
            auto d = embed(alpha, cube_anchor_2d[0], cube_anchor_2d[1]);
            int base[3] = {cx + 1 - d[0], cy + 1 - d[1], cz + 1 - d[2]};
            set.flip(z_stab(alpha, idx3(base[0], base[1], base[2])));
            base[alpha] -= 1;
            set.flip(z_stab(alpha, idx3(base[0], base[1], base[2])));
        }
    }
    return set;
}

StackModel build_stacks(Family family2d, int L) {
    StackModel m;
    StackLayout& lay = m.layout;
    lay.family2d = family2d;
    lay.L = L;
    std::size_t L3 = std::size_t(L) * L * L;
    StabCode& code = m.code;
    code.name = "stacks-" + family_name(family2d);
    Grid3 g{L};

    if (family2d == Family::TC2) {
        lay.n_qubits = 6 * L3;
        lay.n_stabilizers = 6 * L3;
        lay.z_offset = 3 * L3;
        code.n_qubits = lay.n_qubits;
        code.qubit_labels.resize(code.n_qubits);
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x)
                    for (int d = 0; d < 3; ++d)
                        for (int s = 0; s < 2; ++s)
                            code.qubit_labels[lay.edge_qubit(g.site(x, y, z), d, s)] =
                                label3(x, y, z, 2 * d + s);
        auto edge_at = [&](int x, int y, int z, int dir, int alpha) {
            return lay.edge_qubit(g.site(x, y, z), dir, lay.edge_slot_of_layer(dir, alpha));
        };
        // X block: layer vertex stars
        for (int alpha = 0; alpha < 3; ++alpha) {
            int beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
            for (int z = 0; z < L; ++z)
                for (int y = 0; y < L; ++y)
                    for (int x = 0; x < L; ++x) {
                        int c[3] = {x, y, z};
                        PauliVec a(code.n_qubits);
                        auto along = [&](int d, int delta) {
                            int p[3] = {c[0], c[1], c[2]};
                            p[d] += delta;
                            return edge_at(p[0], p[1], p[2], d, alpha);
                        };
                        a.x.flip(along(beta, 0));
                        a.x.flip(along(beta, -1));
                        a.x.flip(along(gamma, 0));
                        a.x.flip(along(gamma, -1));
                        code.add(a);
                    }
        }
        // Z block: layer plaquettes
        for (int alpha = 0; alpha < 3; ++alpha) {
            int beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
            for (int z = 0; z < L; ++z)
                for (int y = 0; y < L; ++y)
                    for (int x = 0; x < L; ++x) {
                        int c[3] = {x, y, z};
                        PauliVec b(code.n_qubits);
                        auto at = [&](int db, int dg, int d) {
                            int p[3] = {c[0], c[1], c[2]};
                            p[beta] += db;
                            p[gamma] += dg;
                            return edge_at(p[0], p[1], p[2], d, alpha);
                        };
                        b.z.flip(at(0, 0, beta));
                        b.z.flip(at(0, 0, gamma));
                        b.z.flip(at(0, 1, beta));
                        b.z.flip(at(1, 0, gamma));
                        code.add(b);
                    }
        }
        return m;
    }

    if (family2d != Family::Cluster && family2d != Family::QuasiCluster)
        throw std::invalid_argument("build_stacks: unsupported layer family");

    lay.n_qubits = 6 * L3;
    lay.n_stabilizers = 6 * L3;
    lay.z_offset = 3 * L3;
    lay.cube_anchor_2d = (family2d == Family::QuasiCluster) ? std::array<int, 2>{0, 1}
                                                            : std::array<int, 2>{0, 0};
    code.n_qubits = lay.n_qubits;
    code.qubit_labels.resize(code.n_qubits);
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x)
                for (int alpha = 0; alpha < 3; ++alpha)
                    for (int s = 0; s < 2; ++s)
                        code.qubit_labels[lay.vertex_qubit(g.site(x, y, z), alpha, s)] =
                            label3(x, y, z, 2 * alpha + s);

    const std::vector<Off2>& x0 = family2d == Family::Cluster ? std::vector<Off2>{{0, 0}}
                                                              : kQuasiX0;
    const std::vector<Off2>& x1 = family2d == Family::Cluster ? kPlaquette : kQuasiX1;
    const std::vector<Off2>& z0 = family2d == Family::Cluster ? kPlaquetteNeg : kQuasiZ0;
    const std::vector<Off2>& z1 = family2d == Family::Cluster ? std::vector<Off2>{{0, 0}}
                                                              : kQuasiZ1;

    auto place = [&](PauliVec& p, bool xtype, int alpha, const std::array<int, 3>& v,
                     const std::vector<Off2>& offs, int slot) {
        for (const Off2& o : offs) {
            auto d = embed(alpha, o.dx, o.dy);
            std::size_t qq = lay.vertex_qubit(g.site(v[0] + d[0], v[1] + d[1], v[2] + d[2]),
                                              alpha, slot);
            (xtype ? p.x : p.z).flip(qq);
        }
    };
    for (int alpha = 0; alpha < 3; ++alpha)
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x) {
                    PauliVec p(code.n_qubits);
                    place(p, true, alpha, {x, y, z}, x0, 0);
                    place(p, true, alpha, {x, y, z}, x1, 1);
                    code.add(p);
                }
    for (int alpha = 0; alpha < 3; ++alpha)
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x) {
                    PauliVec p(code.n_qubits);
                    place(p, false, alpha, {x, y, z}, z0, 0);
                    place(p, false, alpha, {x, y, z}, z1, 1);
                    code.add(p);
                }
    return m;
}

// ---------------------------------------------------------------- bases

StabCode build_base_xx(const StackLayout& lay) {
    StabCode code;
    code.name = "base-xx";
    code.n_qubits = lay.n_qubits;
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    for (std::size_t e = 0; e < 3 * L3; ++e) {
        PauliVec p(code.n_qubits);
        p.x.flip(2 * e);
        p.x.flip(2 * e + 1);
        code.add(p);
    }
    return code;
}

StabCode build_base_zz(const StackLayout& lay) {
    StabCode code;
    code.name = "base-zz";
    code.n_qubits = lay.n_qubits;
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    for (std::size_t e = 0; e < 3 * L3; ++e) {
        PauliVec p(code.n_qubits);
        p.z.flip(2 * e);
        p.z.flip(2 * e + 1);
        code.add(p);
    }
    return code;
}

namespace {

// x (or z) on the two cell qubits other than `miss`, in cell A (slot 0) or
// cell B (slot 1) of the given vertex
PauliVec cell_pair(const StackLayout& lay, int site, int slot, int miss, bool xtype) {
    PauliVec p(lay.n_qubits);
    for (int a = 0; a < 3; ++a) {
        if (a == miss) continue;
        std::size_t q = lay.vertex_qubit(site, a, slot);
        (xtype ? p.x : p.z).flip(q);
    }
    return p;
}

PauliVec stack_product(const StabCode& stacks, const Bits& subset) {
    PauliVec p(stacks.n_qubits);
    for (std::size_t i = 0; i < subset.size(); ++i)
        if (subset.get(i)) p *= stacks.stabilizers[i];
    return p;
}

// Strip the on-cell effective part: any cell triple with odd x (or z)
// pattern is completed to the full triple, leaving the residue.
PauliVec strip_effective(const StackLayout& lay, PauliVec p) {
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    for (std::size_t site = 0; site < L3; ++site)
        for (int slot = 0; slot < 2; ++slot) {
            int cx = 0, cz = 0;
            for (int a = 0; a < 3; ++a) {
                std::size_t q = lay.vertex_qubit(int(site), a, slot);
                cx += p.x.get(q);
                cz += p.z.get(q);
            }
            for (int a = 0; a < 3; ++a) {
                std::size_t q = lay.vertex_qubit(int(site), a, slot);
                if (cx % 2) p.x.flip(q);
                if (cz % 2) p.z.flip(q);
            }
        }
    return p;
}

}  // namespace

StabCode build_base_ctriangle(const StackLayout& lay) {
    StabCode code;
    code.name = "base-ctriangle";
    code.n_qubits = lay.n_qubits;
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    for (std::size_t v = 0; v < L3; ++v)
        for (int miss = 0; miss < 3; ++miss) code.add(cell_pair(lay, int(v), 0, miss, true));
    for (std::size_t v = 0; v < L3; ++v)
        for (int miss = 0; miss < 3; ++miss) code.add(cell_pair(lay, int(v), 1, miss, false));
    return code;
}

namespace {

struct HexParts {
    PauliVec h, t, tprime;
};

// Residue of the six-generator cube product off the effective cells, plus
// the two triangle pieces used to complete it.
HexParts hex_parts(const StabCode& stacks, const StackLayout& lay, int cx, int cy, int cz,
                   bool xtype) {
    HexParts out;
    Bits set = xtype ? lay.x_cube_set(cx, cy, cz) : lay.z_cube_set(cx, cy, cz);
    out.h = strip_effective(lay, stack_product(stacks, set));
    out.t = PauliVec(lay.n_qubits);
    out.tprime = PauliVec(lay.n_qubits);
    for (int d = 0; d < 3; ++d) {
        int miss = (d + 1) % 3;
        int near[3] = {cx, cy, cz};
        near[d] += 1;  // origin-corner triangle
        int far[3] = {cx + 1, cy + 1, cz + 1};
        far[d] -= 1;  // inverted-corner triangle
        if (xtype) {
            out.t *= cell_pair(lay, lay.idx3(near[0], near[1], near[2]), 0, miss, true);
            out.tprime *= cell_pair(lay, lay.idx3(far[0], far[1], far[2]), 0, miss, true);
        } else {
            out.t *= cell_pair(lay, lay.idx3(far[0], far[1], far[2]), 1, miss, false);
            out.tprime *= cell_pair(lay, lay.idx3(near[0], near[1], near[2]), 1, miss, false);
        }
    }
    return out;
}

StabCode build_hex_family(const StackLayout& lay, bool prime) {
    StabCode stacks = build_stacks(lay.family2d, lay.L).code;
    StabCode code;
    code.name = prime ? "base-cprime-hex" : "base-chex";
    code.n_qubits = lay.n_qubits;
    int L = lay.L;
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                HexParts px = hex_parts(stacks, lay, x, y, z, true);
                code.add(prime ? px.h * px.tprime : px.h);
            }
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                HexParts px = hex_parts(stacks, lay, x, y, z, true);
                code.add(prime ? px.tprime : px.t);
            }
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                HexParts pz = hex_parts(stacks, lay, x, y, z, false);
                code.add(prime ? pz.h * pz.tprime : pz.h);
            }
    for (int z = 0; z < L; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                HexParts pz = hex_parts(stacks, lay, x, y, z, false);
                code.add(prime ? pz.tprime : pz.t);
            }
    return code;
}

}  // namespace

StabCode build_base_chex(const StackLayout& lay) { return build_hex_family(lay, false); }
StabCode build_base_cprime_hex(const StackLayout& lay) { return build_hex_family(lay, true); }

StabCode build_base_cprime_triangle(const StackLayout& lay) {
    StabCode code;
    code.name = "base-cprime-triangle";
    code.n_qubits = lay.n_qubits;
    int L = lay.L;
    auto add_triangles = [&](bool xtype, bool inverted) {
        for (int z = 0; z < L; ++z)
            for (int y = 0; y < L; ++y)
                for (int x = 0; x < L; ++x) {
                    PauliVec p(lay.n_qubits);
                    for (int d = 0; d < 3; ++d) {
                        int c[3] = {x, y, z};
                        if (inverted) {
                            c[0] += 1;
                            c[1] += 1;
                            c[2] += 1;
                            c[d] -= 1;
                        } else {
                            c[d] += 1;
                        }
                        p *= cell_pair(lay, lay.idx3(c[0], c[1], c[2]), xtype ? 0 : 1, d, xtype);
                    }
                    code.add(p);
                }
    };
    add_triangles(true, false);   // origin-corner X triangles
    add_triangles(true, true);    // inverted X triangles
    add_triangles(false, true);   // Z duals
    add_triangles(false, false);
    return code;
}

StabCode build_model(const ModelSpec& spec) {
    switch (spec.family) {
        case Family::TC2:
            return build_tc2(spec.L);
        case Family::TC3:
            return build_tc3(spec.L);
        case Family::XCube:
            return build_xcube(spec.L);
        case Family::Cluster:
            return build_cluster(spec.L);
        case Family::IsingPlaquette:
            return build_ising_plaquette(spec.L);
        case Family::NewmanMoore:
            return build_newman_moore(spec.L);
        case Family::QuasiCluster:
            return build_quasicluster(spec.L, spec.quasi_reflected);
        case Family::ClusterCube:
            return build_clustercube(spec.L);
        case Family::Haah:
            return build_haah(spec.L);
        case Family::TriTC2:
            return build_tri_tc2(spec.L);
        case Family::Stacks:
            return build_stacks(spec.stack_of, spec.L).code;
        case Family::BaseXX:
            return build_base_xx(build_stacks(Family::TC2, spec.L).layout);
        case Family::BaseZZ:
            return build_base_zz(build_stacks(Family::TC2, spec.L).layout);
        case Family::BaseCTriangle:
            return build_base_ctriangle(build_stacks(Family::Cluster, spec.L).layout);
        case Family::BaseCHex:
            return build_base_chex(build_stacks(Family::QuasiCluster, spec.L).layout);
    }
    throw std::invalid_argument("build_model: bad family");
}

ModelInfo describe_model(const ModelSpec& spec) {
    StabCode code = build_model(spec);
    GaugeStruct gs = GaugeStruct::build(code);
    ModelInfo info;
    info.name = code.name;
    info.n_qubits = code.n_qubits;
    info.n_stabilizers = code.size();
    info.rank_phi = gs.rank_phi();
    info.constraints_dim = gs.constraints().dim();
    auto [dl, k] = gs.logical_dims();
    info.dim_logical = dl;
    info.d_ell = k;
    return info;
}

}  // namespace f2g
