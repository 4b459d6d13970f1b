#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f2gauge/bits.hpp"

// Phaseless Pauli operators on N qubits as elements of F2^{2N}: an x part
// and a z part, with y_i encoded as x_i = z_i = 1. Products are coordinate
// xors; commutation lives in the symplectic form `sym`.

namespace f2g {

enum class CssType { Identity, X, Z, Mixed };

struct PauliVec {
    std::size_t n = 0;
    Bits x, z;

    PauliVec() = default;
    explicit PauliVec(std::size_t n_qubits) : n(n_qubits), x(n_qubits), z(n_qubits) {}

    static PauliVec single(std::size_t n, std::size_t qubit, char type);

    PauliVec& operator*=(const PauliVec& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    PauliVec operator*(const PauliVec& o) const {
        PauliVec r = *this;
        r *= o;
        return r;
    }
    bool operator==(const PauliVec& o) const { return n == o.n && x == o.x && z == o.z; }
    bool operator!=(const PauliVec& o) const { return !(*this == o); }

    bool is_identity() const { return !x.any() && !z.any(); }

    // packed [x | z] vector of length 2n
    Bits encode() const {
        Bits v(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x.get(i)) v.set(i, true);
            if (z.get(i)) v.set(n + i, true);
        }
        return v;
    }
    static PauliVec decode(const Bits& v) {
        PauliVec p(v.size() / 2);
        for (std::size_t i = 0; i < p.n; ++i) {
            if (v.get(i)) p.x.set(i, true);
            if (v.get(p.n + i)) p.z.set(i, true);
        }
        return p;
    }
};

// 0 when the operators commute, 1 otherwise
inline bool sym(const PauliVec& f, const PauliVec& g) {
    if (f.n != g.n) throw std::invalid_argument("sym: qubit count mismatch");
    return f.x.dot(g.z) ^ f.z.dot(g.x);
}

std::vector<std::size_t> support(const PauliVec& f);
std::size_t weight(const PauliVec& f);
CssType css_type(const PauliVec& f);

// Grouping of the 2N packed coordinates by qubit, for weight searches.
CoordGroups qubit_groups(std::size_t n_qubits);

// Lattice naming of qubits for rendering: coordinates of the owning cell
// plus a slot index within the cell.
struct QubitLabel {
    std::vector<int> cell;
    int slot = 0;
};

// "X(2,0,1;0) Z(1,1,1;1)" style rendering given per-qubit labels.
std::string render(const PauliVec& f, const std::vector<QubitLabel>& labels);

}  // namespace f2g
