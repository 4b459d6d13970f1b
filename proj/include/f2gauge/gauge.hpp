#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2gauge/bits.hpp"
#include "f2gauge/pauli.hpp"

// A stabilizer code as a linear gauge structure: the generator map phi
// (subsets of the stabilizer list -> Pauli products) and the syndrome map
// psi (Pauli -> set of anticommuting stabilizers), tied together by
// sym(phi(A), f) = <A, psi(f)>.

namespace f2g {

struct NonCommutingStabilizers : std::runtime_error {
    NonCommutingStabilizers(std::size_t i, std::size_t j)
        : std::runtime_error("stabilizers " + std::to_string(i) + " and " + std::to_string(j) +
                             " anticommute"),
          i(i), j(j) {}
    std::size_t i, j;
};

struct IdentityStabilizer : std::runtime_error {
    explicit IdentityStabilizer(std::size_t i)
        : std::runtime_error("stabilizer " + std::to_string(i) + " is the identity"), i(i) {}
    std::size_t i;
};

struct UnrealizableSyndrome : std::runtime_error {
    UnrealizableSyndrome() : std::runtime_error("syndrome violates a constraint") {}
};

struct OddLogicalDim : std::runtime_error {
    OddLogicalDim() : std::runtime_error("logical space dimension came out odd") {}
};

struct StabCode {
    std::string name;
    std::size_t n_qubits = 0;
    std::vector<PauliVec> stabilizers;
    std::vector<CssType> types;             // recorded per stabilizer
    std::vector<QubitLabel> qubit_labels;   // for rendering; may be empty

    void add(PauliVec p) {
        types.push_back(css_type(p));
        stabilizers.push_back(std::move(p));
    }
    std::size_t size() const { return stabilizers.size(); }
};

struct Syndrome {
    Bits bits;  // one per stabilizer
};

class GaugeStruct {
  public:
    // Verifies mutual commutation and non-identity, then materializes phi
    // (2N x |S|) and psi (|S| x 2N) and checks the defining identity on the
    // standard bases.
    static GaugeStruct build(StabCode code);

    const StabCode& code() const { return code_; }
    std::size_t n_qubits() const { return code_.n_qubits; }
    std::size_t n_stabilizers() const { return code_.size(); }

    const F2Matrix& phi() const { return phi_; }
    const F2Matrix& psi() const { return psi_; }

    Bits apply_phi(const Bits& subset) const { return phi_.mul(subset); }
    Bits apply_psi(const Bits& pauli2n) const { return psi_.mul(pauli2n); }
    Bits apply_psi(const PauliVec& f) const { return psi_.mul(f.encode()); }

    const Subspace& image_phi() const;
    const Subspace& kernel_psi() const;
    Subspace constraints() const { return kernel_basis(phi_); }
    std::size_t rank_phi() const;

    bool syndrome_realizable(const Syndrome& j) const;

    // (dim of the logical space, number of encoded qubits)
    std::pair<std::size_t, std::size_t> logical_dims() const;

    // Coset representatives spanning ker psi modulo im phi.
    std::vector<PauliVec> logical_coset_basis() const;

    // Exact code distance if <= w_max, otherwise nullopt with the certified
    // bound w_max+1 implied. No logical operators at all reports 0.
    std::optional<std::size_t> code_distance_bounded(
        std::size_t w_max, std::size_t budget = kDefaultEnumerationBudget,
        PauliVec* witness = nullptr) const;

    // Eigenspace projector data for a realizable syndrome: the phase of a
    // potential A in the expansion is (-1)^{<A,J>}; the energy is the sum of
    // couplings over flipped stabilizers.
    struct ProjectorCoeffs {
        Syndrome syndrome;
        double energy = 0.0;
        bool phase(const Bits& potential) const { return potential.dot(syndrome.bits); }
    };
    ProjectorCoeffs projector_coeffs(const Syndrome& j,
                                     const std::vector<double>& couplings) const;

  private:
    StabCode code_;
    F2Matrix phi_, psi_;
    mutable std::optional<Subspace> im_phi_, ker_psi_;
    mutable std::optional<std::size_t> rank_phi_cache_;
};

}  // namespace f2g
