#pragma once

#include <array>
#include <string>
#include <vector>

#include "f2gauge/gauge.hpp"

// Constructors for the lattice models on periodic L x L and L x L x L
// lattices, plus the coupled-layer parents and base (coupling) models.

namespace f2g {

enum class Family {
    TC2,
    TC3,
    XCube,
    Cluster,
    IsingPlaquette,
    NewmanMoore,
    QuasiCluster,
    ClusterCube,
    Haah,
    BaseXX,
    BaseZZ,
    BaseCTriangle,
    BaseCHex,
    TriTC2,
    Stacks,
};

struct ModelSpec {
    Family family = Family::TC2;
    int L = 2;
    Family stack_of = Family::Cluster;  // for Family::Stacks
    bool quasi_reflected = false;       // reflection variant, no goldens
};

const std::vector<std::string>& family_names();
std::string family_name(Family f);
Family family_from_name(const std::string& s);

// -- 2D / 3D standalone models ------------------------------------------------

StabCode build_tc2(int L);
StabCode build_tc3(int L);
StabCode build_xcube(int L);
StabCode build_cluster(int L);
StabCode build_ising_plaquette(int L);
StabCode build_newman_moore(int L);
StabCode build_quasicluster(int L, bool reflected = false);
StabCode build_clustercube(int L);
StabCode build_haah(int L);
StabCode build_tri_tc2(int L);

// -- coupled stacks ------------------------------------------------------------

// Three stacks of L layers, one stack per axis, cyclically embedded so the
// arrangement keeps the three-fold rotation symmetry about [111].
//
// Vertex-type 2D models (cluster, quasi-cluster) give six qubits per vertex:
// qubit = 6*site + 2*alpha + slot. Edge-type (TC2) gives two per 3D edge:
// qubit = 2*(3*site + dir) + slot, slot 0 belonging to layer dir+1 (mod 3).
struct StackLayout {
    Family family2d = Family::Cluster;
    int L = 2;
    std::size_t n_qubits = 0;
    std::size_t n_stabilizers = 0;
    std::size_t z_offset = 0;  // stabilizer index where the Z block starts

    // per-direction 2D offset applied to cube-set anchors (fixed per model
    // so six-generator products reduce to one effective-cell operator)
    std::array<int, 2> cube_anchor_2d = {0, 0};

    int idx3(int x, int y, int z) const;
    std::array<int, 3> coords(int site) const;

    // vertex models
    std::size_t vertex_qubit(int site, int alpha, int slot) const;
    std::size_t x_stab(int alpha, int site) const;  // X-type layer generator
    std::size_t z_stab(int alpha, int site) const;

    // edge models (TC2 stacks)
    std::size_t edge_qubit(int site, int dir, int slot) const;
    int edge_slot_of_layer(int dir, int alpha) const;  // 0 or 1
    std::size_t a_stab(int alpha, int site) const;     // vertex star in layer
    std::size_t b_stab(int alpha, int site) const;     // plaquette in layer

    // generating sets of the divergence spaces: the six generators whose
    // product collapses onto one effective cell at cube c
    Bits x_cube_set(int cx, int cy, int cz) const;
    Bits z_cube_set(int cx, int cy, int cz) const;
};

struct StackModel {
    StabCode code;
    StackLayout layout;
};

StackModel build_stacks(Family family2d, int L);

// -- base (coupling) models on the stacked Hilbert spaces ----------------------

// x1 x2 (or z1 z2) on every edge of the TC2 stacks.
StabCode build_base_xx(const StackLayout& tc2_stacks);
StabCode build_base_zz(const StackLayout& tc2_stacks);

// Per-vertex three-qubit couplings on vertex stacks: the X-type pair
// products on the slot-0 cell and Z-type on the slot-1 cell.
StabCode build_base_ctriangle(const StackLayout& vertex_stacks);

// Hexagon + triangle couplings on the quasi-cluster stacks; the hexagon
// operators are exactly the residue of the six-generator cube products off
// the effective cells.
StabCode build_base_chex(const StackLayout& quasi_stacks);

// Alternate completions used in the case studies.
StabCode build_base_cprime_triangle(const StackLayout& cluster_stacks);
StabCode build_base_cprime_hex(const StackLayout& quasi_stacks);

StabCode build_model(const ModelSpec& spec);

// Uniform description for the CLI.
struct ModelInfo {
    std::string name;
    std::size_t n_qubits;
    std::size_t n_stabilizers;
    std::size_t rank_phi;
    std::size_t constraints_dim;
    std::size_t dim_logical;
    std::size_t d_ell;
};
ModelInfo describe_model(const ModelSpec& spec);

}  // namespace f2g
