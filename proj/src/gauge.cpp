#include "f2gauge/gauge.hpp"

namespace f2g {

GaugeStruct GaugeStruct::build(StabCode code) {
    GaugeStruct gs;
    std::size_t n = code.n_qubits;
    std::size_t s = code.size();
    for (std::size_t i = 0; i < s; ++i) {
        if (code.stabilizers[i].is_identity()) throw IdentityStabilizer(i);
        if (code.stabilizers[i].n != n)
            throw std::invalid_argument("stabilizer qubit count mismatch");
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (sym(code.stabilizers[i], code.stabilizers[j]))
                throw NonCommutingStabilizers(i, j);

    gs.phi_ = F2Matrix(2 * n, s);
    gs.psi_ = F2Matrix(s, 2 * n);
    for (std::size_t j = 0; j < s; ++j) {
        Bits enc = code.stabilizers[j].encode();
        for (std::size_t r = 0; r < 2 * n; ++r)
            if (enc.get(r)) gs.phi_.set(r, j, true);
        // row j of psi is the symplectic pairing with stabilizer j
        gs.psi_.row(j) = BilinearForm::symplectic(n).pair(enc);
    }
    gs.code_ = std::move(code);
    return gs;
}

const Subspace& GaugeStruct::image_phi() const {
    if (!im_phi_) im_phi_ = row_space(phi_.transposed());
    return *im_phi_;
}

const Subspace& GaugeStruct::kernel_psi() const {
    if (!ker_psi_) ker_psi_ = kernel_basis(psi_);
    return *ker_psi_;
}

std::size_t GaugeStruct::rank_phi() const {
    if (!rank_phi_cache_) rank_phi_cache_ = image_phi().dim();
    return *rank_phi_cache_;
}

bool GaugeStruct::syndrome_realizable(const Syndrome& j) const {
    if (j.bits.size() != n_stabilizers())
        throw std::invalid_argument("syndrome length mismatch");
    Subspace cons = constraints();
    for (std::size_t r = 0; r < cons.basis().nrows(); ++r)
        if (cons.basis().row(r).dot(j.bits)) return false;
    return true;
}

std::pair<std::size_t, std::size_t> GaugeStruct::logical_dims() const {
    std::size_t dim_logical = kernel_psi().dim() - rank_phi();
    if (dim_logical % 2) throw OddLogicalDim();
    return {dim_logical, dim_logical / 2};
}

std::vector<PauliVec> GaugeStruct::logical_coset_basis() const {
    std::vector<PauliVec> out;
    Subspace im = image_phi();
    Subspace picked(2 * n_qubits());
    F2Matrix acc = im.basis();
    for (std::size_t r = 0; r < kernel_psi().basis().nrows(); ++r) {
        const Bits& v = kernel_psi().basis().row(r);
        Subspace cur(2 * n_qubits(), acc);
        if (cur.contains(v)) continue;
        acc.append_row(v);
        out.push_back(PauliVec::decode(cur.reduce(v)));
    }
    return out;
}

std::optional<std::size_t> GaugeStruct::code_distance_bounded(std::size_t w_max,
                                                              std::size_t budget,
                                                              PauliVec* witness) const {
    auto [dl, k] = logical_dims();
    if (dl == 0) return 0;  // no logical operators
    Bits w(0);
    auto r = min_weight_bounded(kernel_psi(), image_phi(), qubit_groups(n_qubits()), w_max,
                                budget, &w);
    if (!r) return std::nullopt;
    if (witness) *witness = PauliVec::decode(w);
    return weight(PauliVec::decode(w));
}

GaugeStruct::ProjectorCoeffs GaugeStruct::projector_coeffs(
    const Syndrome& j, const std::vector<double>& couplings) const {
    if (!syndrome_realizable(j)) throw UnrealizableSyndrome();
    ProjectorCoeffs pc;
    pc.syndrome = j;
    for (std::size_t s = 0; s < n_stabilizers(); ++s)
        if (j.bits.get(s)) pc.energy += couplings.empty() ? 1.0 : couplings[s];
    return pc;
}

}  // namespace f2g
