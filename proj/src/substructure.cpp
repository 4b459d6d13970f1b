#include "f2gauge/substructure.hpp"

#include <algorithm>

namespace f2g {

namespace {

// basis rows of a subspace as matrix columns
F2Matrix colmat(const Subspace& s) { return s.basis().transposed(); }

F2Matrix symplectic_gram(const F2Matrix& cols_2m) {
    std::size_t m = cols_2m.nrows() / 2;
    BilinearForm form = BilinearForm::symplectic(m);
    F2Matrix g(cols_2m.ncols(), cols_2m.ncols());
    std::vector<Bits> cols(cols_2m.ncols());
    for (std::size_t c = 0; c < cols_2m.ncols(); ++c) cols[c] = cols_2m.col(c);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        Bits pi = form.pair(cols[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) g.set(i, j, pi.dot(cols[j]));
    }
    return g;
}

}  // namespace

Subspace clr_local_space(std::size_t n) {
    F2Matrix rows(0, 2 * n);
    Bits allx(2 * n), allz(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        allx.set(i, true);
        allz.set(n + i, true);
    }
    rows.append_row(allx);
    rows.append_row(allz);
    return Subspace(2 * n, rows);
}

RightRestriction RightRestriction::from_pairs(std::size_t n_parent,
                                              std::vector<PauliVec> x_lift,
                                              std::vector<PauliVec> z_lift,
                                              std::vector<PauliVec> junk_x,
                                              std::vector<PauliVec> junk_z) {
    RightRestriction r;
    r.n_parent_ = n_parent;
    r.x_lift_ = std::move(x_lift);
    r.z_lift_ = std::move(z_lift);
    r.jx_lift_ = std::move(junk_x);
    r.jz_lift_ = std::move(junk_z);

    std::size_t m = r.x_lift_.size();
    std::size_t mj = r.jx_lift_.size();
    if (m != r.z_lift_.size() || mj != r.jz_lift_.size())
        throw std::invalid_argument("RightRestriction: pair count mismatch");
    if (2 * (m + mj) != 2 * n_parent)
        throw NonProjectiveR("RightRestriction: pairs do not split the Pauli space");

    BilinearForm sym = BilinearForm::symplectic(n_parent);
    auto expect = [&](const PauliVec& a, const PauliVec& b, bool want, const char* what) {
        if (sym.eval(a.encode(), b.encode()) != want)
            throw NonProjectiveR(std::string("RightRestriction: bad pairing: ") + what);
    };
    for (std::size_t i = 0; i < m; ++i) {
        expect(r.x_lift_[i], r.z_lift_[i], true, "x/z pair");
        for (std::size_t j = 0; j < mj; ++j) {
            expect(r.x_lift_[i], r.jx_lift_[j], false, "r vs junk");
            expect(r.x_lift_[i], r.jz_lift_[j], false, "r vs junk");
            expect(r.z_lift_[i], r.jx_lift_[j], false, "r vs junk");
            expect(r.z_lift_[i], r.jz_lift_[j], false, "r vs junk");
        }
    }
    for (std::size_t i = 0; i < mj; ++i) expect(r.jx_lift_[i], r.jz_lift_[i], true, "junk pair");

    r.to_eff_ = F2Matrix(2 * m, 2 * n_parent);
    r.lift_ = F2Matrix(2 * n_parent, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        r.to_eff_.row(i) = sym.pair(r.z_lift_[i].encode());
        r.to_eff_.row(m + i) = sym.pair(r.x_lift_[i].encode());
        Bits ex = r.x_lift_[i].encode(), ez = r.z_lift_[i].encode();
        for (std::size_t c = 0; c < 2 * n_parent; ++c) {
            if (ex.get(c)) r.lift_.set(c, i, true);
            if (ez.get(c)) r.lift_.set(c, m + i, true);
        }
    }
    r.to_junk_ = F2Matrix(2 * mj, 2 * n_parent);
    r.jlift_ = F2Matrix(2 * n_parent, 2 * mj);
    for (std::size_t i = 0; i < mj; ++i) {
        r.to_junk_.row(i) = sym.pair(r.jz_lift_[i].encode());
        r.to_junk_.row(mj + i) = sym.pair(r.jx_lift_[i].encode());
        Bits ex = r.jx_lift_[i].encode(), ez = r.jz_lift_[i].encode();
        for (std::size_t c = 0; c < 2 * n_parent; ++c) {
            if (ex.get(c)) r.jlift_.set(c, i, true);
            if (ez.get(c)) r.jlift_.set(c, mj + i, true);
        }
    }

    F2Matrix rrows(0, 2 * n_parent), prows(0, 2 * n_parent);
    for (std::size_t i = 0; i < m; ++i) {
        rrows.append_row(r.x_lift_[i].encode());
        rrows.append_row(r.z_lift_[i].encode());
    }
    for (std::size_t i = 0; i < mj; ++i) {
        prows.append_row(r.jx_lift_[i].encode());
        prows.append_row(r.jz_lift_[i].encode());
    }
    r.r_space_ = Subspace(2 * n_parent, rrows);
    r.r_perp_ = Subspace(2 * n_parent, prows);
    if (r.r_space_.dim() != 2 * m || r.r_perp_.dim() != 2 * mj)
        throw NonProjectiveR("RightRestriction: dependent pair lifts");
    return r;
}

RightRestriction RightRestriction::clr_cells(const StackLayout& lay) {
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    std::size_t n = lay.n_qubits;
    std::vector<PauliVec> xl, zl, jx, jz;
    auto triple = [&](int site, int slot, bool xtype, int miss) {
        PauliVec p(n);
        for (int a = 0; a < 3; ++a) {
            if (a == miss) continue;
            std::size_t q = lay.vertex_qubit(site, a, slot);
            (xtype ? p.x : p.z).flip(q);
        }
        return p;
    };
    for (std::size_t v = 0; v < L3; ++v)
        for (int slot = 0; slot < 2; ++slot) {
            xl.push_back(triple(int(v), slot, true, -1));
            zl.push_back(triple(int(v), slot, false, -1));
            // complement pairs: (miss0-x, miss1-z) and (miss1-x, miss0-z)
            jx.push_back(triple(int(v), slot, true, 0));
            jz.push_back(triple(int(v), slot, false, 1));
            jx.push_back(triple(int(v), slot, true, 1));
            jz.push_back(triple(int(v), slot, false, 0));
        }
    return from_pairs(n, std::move(xl), std::move(zl), std::move(jx), std::move(jz));
}

RightRestriction RightRestriction::edge_cells(const StackLayout& lay) {
    std::size_t L3 = std::size_t(lay.L) * lay.L * lay.L;
    std::size_t n = lay.n_qubits;
    std::vector<PauliVec> xl, zl, jx, jz;
    for (std::size_t e = 0; e < 3 * L3; ++e) {
        PauliVec x1(n), zz(n), xx(n), z2(n);
        x1.x.flip(2 * e);
        zz.z.flip(2 * e);
        zz.z.flip(2 * e + 1);
        xx.x.flip(2 * e);
        xx.x.flip(2 * e + 1);
        z2.z.flip(2 * e + 1);
        xl.push_back(x1);
        zl.push_back(zz);
        jx.push_back(xx);
        jz.push_back(z2);
    }
    return from_pairs(n, std::move(xl), std::move(zl), std::move(jx), std::move(jz));
}

PauliVec RightRestriction::effective(const PauliVec& parent_op) const {
    return PauliVec::decode(to_eff_.mul(parent_op.encode()));
}

PauliVec RightRestriction::lift_op(const PauliVec& eff_op) const {
    return PauliVec::decode(lift_.mul(eff_op.encode()));
}

LeftRestriction LeftRestriction::make(Subspace s, F2Matrix cube_rows) {
    LeftRestriction l;
    l.projective = is_projective(s, BilinearForm::dot(s.ambient()));
    l.space = std::move(s);
    l.cube_sets = std::move(cube_rows);
    l.mode = l.projective ? Mode::Projective : Mode::PrimitiveCube;
    if (!l.projective && l.cube_sets.nrows() == 0)
        throw std::invalid_argument(
            "LeftRestriction: non-projective space needs generating-set rows");
    return l;
}

Substructure::Substructure(const GaugeStruct& parent, LeftRestriction left,
                           RightRestriction right)
    : parent_(&parent), left_(std::move(left)), right_(std::move(right)) {
    if (left_.space.ambient() != parent.n_stabilizers())
        throw std::invalid_argument("Substructure: left space ambient mismatch");
    if (right_.n_parent() != parent.n_qubits())
        throw std::invalid_argument("Substructure: right restriction qubit mismatch");
    left_cols_ = colmat(left_.space);
    phi_sub_ = right_.to_eff().mul(parent.phi()).mul(left_cols_);
    im_phi_sub_ = row_space(phi_sub_.transposed());
    // the discarded part of the images, as a subspace of the parent space
    F2Matrix jc = right_.to_junk().mul(parent.phi()).mul(left_cols_);
    junk_parent_ = row_space(right_.jlift().mul(jc).transposed());

    F2Matrix gram = symplectic_gram(phi_sub_);
    for (std::size_t i = 0; i < gram.nrows(); ++i)
        for (std::size_t j = 0; j < gram.ncols(); ++j)
            if (gram.get(i, j)) throw SymplecticViolation(i, j);
}

F2Matrix Substructure::psi_sub() const {
    std::size_t m = right_.n_effective();
    F2Matrix psi_r = parent_->psi().mul(right_.lift());  // |S| x 2M
    if (left_.mode == LeftRestriction::Mode::Projective) {
        // dual-basis coordinates against the left space
        F2Matrix proj = projector(left_.space, BilinearForm::dot(left_.space.ambient()));
        // rows of B give coordinates after projection: solve B^T c = proj(v)
        F2Matrix out(left_.space.dim(), 2 * m);
        for (std::size_t c = 0; c < 2 * m; ++c) {
            Bits v = proj.mul(psi_r.col(c));
            auto coords = left_.space.coords(v);
            if (!coords) throw std::logic_error("psi_sub: projection left the subspace");
            for (std::size_t r = 0; r < coords->size(); ++r)
                if (coords->get(r)) out.set(r, c, true);
        }
        return out;
    }
    // generating-set overlap coordinates
    return left_.cube_sets.mul(psi_r);
}

std::size_t Substructure::target_constraints_dim() const {
    return kernel_basis(phi_sub_).dim();
}

Subspace Substructure::target_ker_psi() const {
    F2Matrix m = left_.space.basis().mul(parent_->psi()).mul(right_.lift());
    return kernel_basis(m);
}

std::pair<std::size_t, std::size_t> Substructure::target_logical_dims() const {
    std::size_t dl = target_ker_psi().dim() - im_phi_sub_.dim();
    if (dl % 2) throw OddLogicalDim();
    return {dl, dl / 2};
}

std::vector<PauliVec> Substructure::target_stabilizers() const {
    std::vector<PauliVec> out;
    for (std::size_t c = 0; c < phi_sub_.ncols(); ++c) {
        Bits col = phi_sub_.col(c);
        if (col.any()) out.push_back(PauliVec::decode(col));
    }
    return out;
}

bool Substructure::target_symplectic() const {
    return symplectic_gram(phi_sub_).is_zero();
}

Subspace Substructure::junk_in_complement_coords() const {
    F2Matrix jc = right_.to_junk().mul(parent_->phi()).mul(left_cols_);
    return row_space(jc.transposed());
}

Subspace Substructure::a_distill() const {
    F2Matrix m = parent_->psi().mul(colmat(junk_parent_));
    Subspace ad = row_space(m.transposed());
    // lands in the perpendicular complement of the left space
    Subspace lperp = perp(left_.space, BilinearForm::dot(left_.space.ambient()));
    if (!lperp.contains(ad))
        throw std::logic_error("a_distill: syndromes escape the left complement");
    return ad;
}

Classification Substructure::classify() const {
    Classification c;
    c.junk_dim = junk_dim();
    auto [dlp, kp] = parent_->logical_dims();
    c.dim_h_parent = dlp;
    auto [dlt, kt] = target_logical_dims();
    c.dim_h_target = dlt;

    // co-restriction (left complement, right complement)
    Subspace lperp = perp(left_.space, BilinearForm::dot(left_.space.ambient()));
    F2Matrix phi_co = right_.to_junk().mul(parent_->phi()).mul(colmat(lperp));
    c.cotarget_symplectic = symplectic_gram(phi_co).is_zero();
    F2Matrix mker = lperp.basis().mul(parent_->psi()).mul(right_.jlift());
    std::size_t ker_co = kernel_basis(mker).dim();
    std::size_t rank_co = rank(phi_co);
    c.dim_h_cotarget = ker_co - rank_co;
    c.homology_additive = (c.dim_h_parent == c.dim_h_target + c.dim_h_cotarget);

    if (c.junk_dim == 0) {
        c.verdict = Verdict::Condensation;
    } else if (c.cotarget_symplectic && c.homology_additive) {
        // the discarded images re-assemble into a consistent co-factor, so
        // the restriction splits rather than distills
        c.verdict = Verdict::Condensation;
    } else {
        c.verdict = Verdict::Distillation;
    }
    c.distillation_cost = c.verdict == Verdict::Distillation ? c.junk_dim : 0;
    return c;
}

MaximalityReport Substructure::maximality_check() const {
    MaximalityReport rep;
    Subspace preimage = kernel_basis(right_.to_junk().mul(parent_->phi()));
    rep.preimage_dim = preimage.dim();
    F2Matrix reps(0, left_.space.ambient());
    for (std::size_t r = 0; r < preimage.basis().nrows(); ++r) {
        Bits red = left_.space.reduce(preimage.basis().row(r));
        if (red.any()) reps.append_row(red);
    }
    rep.violations = Subspace(left_.space.ambient(), std::move(reps));
    rep.maximal = rep.violations.dim() == 0;
    return rep;
}

Substructure Substructure::repaired() const {
    MaximalityReport rep = maximality_check();
    if (rep.maximal) return *this;
    Subspace bigger = sum(left_.space, rep.violations);
    LeftRestriction l2 = LeftRestriction::make(
        std::move(bigger), left_.cube_sets.nrows() ? left_.cube_sets : left_.space.basis());
    return Substructure(*parent_, std::move(l2), right_);
}

Substructure::DistilledSS Substructure::distilled_ss() const {
    Subspace ad = a_distill();
    Subspace dperp = perp(ad, BilinearForm::dot(ad.ambient()));
    F2Matrix eff = right_.to_eff().mul(parent_->phi()).mul(colmat(dperp));
    DistilledSS out;
    F2Matrix span_rows = im_phi_sub_.basis();
    for (std::size_t c = 0; c < eff.ncols(); ++c) {
        Bits v = eff.col(c);
        Subspace cur(v.size(), span_rows);
        Bits red = cur.reduce(v);
        if (!red.any()) continue;
        span_rows.append_row(red);
        out.coset_reps.push_back(PauliVec::decode(red));
    }
    out.space = Subspace(2 * right_.n_effective(), span_rows);
    return out;
}

Subspace Substructure::junk_commutant_syndromes() const {
    Subspace comm = intersect(right_.r_perp(),
                              perp(junk_parent_, BilinearForm::symplectic(parent_->n_qubits())));
    F2Matrix m = parent_->psi().mul(colmat(comm));
    return row_space(m.transposed());
}

bool Substructure::is_accidental(const PauliVec& eff_logical, PauliVec* witness) const {
    Bits f = right_.lift().mul(eff_logical.encode());
    Bits syn_in_left = left_.space.basis().mul(parent_->psi().mul(f));
    if (syn_in_left.any()) throw NotLogical();
    Bits syn = parent_->apply_psi(f);
    Subspace reachable = junk_commutant_syndromes();
    bool accidental = !reachable.contains(syn);
    if (accidental && witness) {
        Subspace dperp = perp(reachable, BilinearForm::dot(reachable.ambient()));
        for (std::size_t r = 0; r < dperp.basis().nrows(); ++r) {
            const Bits& d = dperp.basis().row(r);
            if (!d.dot(syn)) continue;
            Bits g = right_.to_eff().mul(parent_->phi().mul(d));
            *witness = PauliVec::decode(g);
            break;
        }
    }
    return accidental;
}

CompletionReport Substructure::complete_prescribed(const StabCode& base) const {
    CompletionReport rep;
    if (base.n_qubits != parent_->n_qubits())
        throw IncompatibleCompletion("completion lives on a different qubit set");
    try {
        GaugeStruct::build(base);
    } catch (const NonCommutingStabilizers& e) {
        throw PrescribedNotCommuting(e.what());
    }
    F2Matrix rows(0, 2 * parent_->n_qubits());
    for (const PauliVec& p : base.stabilizers) {
        Bits enc = p.encode();
        if (right_.to_eff().mul(enc).any())
            throw IncompatibleCompletion("completion operator acts on the restricted cells");
        rows.append_row(enc);
    }
    rep.completion = base;
    rep.group = Subspace(2 * parent_->n_qubits(), std::move(rows));
    rep.contains_junk = rep.group.contains(junk_parent_);
    if (!rep.contains_junk) throw PrescribedMissesJunk();
    rep.maximal = rep.group.dim() == right_.n_junk_pairs();
    return rep;
}

CompletionReport Substructure::complete_greedy() const {
    std::size_t n = parent_->n_qubits();
    BilinearForm sym = BilinearForm::symplectic(n);
    StabCode code;
    code.name = "greedy-completion";
    code.n_qubits = n;
    F2Matrix rows(0, 2 * n);
    std::vector<Bits> chosen;
    auto try_add = [&](const Bits& enc) {
        Subspace cur(2 * n, rows);
        if (cur.contains(enc)) return;
        for (const Bits& c : chosen)
            if (sym.eval(c, enc)) return;
        rows.append_row(enc);
        chosen.push_back(enc);
        code.add(PauliVec::decode(enc));
    };
    for (std::size_t r = 0; r < junk_parent_.basis().nrows(); ++r)
        try_add(junk_parent_.basis().row(r));
    // low-weight cell generators, in (weight, index) order
    std::vector<Bits> pool;
    for (const PauliVec& p : right_.junk_x_lifts()) pool.push_back(p.encode());
    for (const PauliVec& p : right_.junk_z_lifts()) pool.push_back(p.encode());
    std::stable_sort(pool.begin(), pool.end(), [](const Bits& a, const Bits& b) {
        if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
        return a < b;
    });
    for (const Bits& p : pool) try_add(p);
    CompletionReport rep;
    rep.completion = std::move(code);
    rep.group = Subspace(2 * n, std::move(rows));
    rep.contains_junk = true;
    rep.maximal = rep.group.dim() == right_.n_junk_pairs();
    return rep;
}

std::vector<PauliVec> Substructure::ground_state_logicals(
    const CompletionReport& completion) const {
    if (!completion.contains_junk) throw IncompatibleCompletion("completion misses the junk group");
    F2Matrix syn = parent_->psi().mul(colmat(completion.group));
    Subspace a_c = row_space(syn.transposed());
    Subspace dperp = perp(a_c, BilinearForm::dot(a_c.ambient()));
    F2Matrix eff = right_.to_eff().mul(parent_->phi()).mul(colmat(dperp));

    std::vector<PauliVec> out;
    F2Matrix span_rows = im_phi_sub_.basis();
    for (std::size_t c = 0; c < eff.ncols(); ++c) {
        Bits v = eff.col(c);
        Subspace cur(v.size(), span_rows);
        Bits red = cur.reduce(v);
        if (!red.any()) continue;
        span_rows.append_row(red);
        out.push_back(PauliVec::decode(red));
    }
    // selected frame must commute and consist of logicals of the target
    std::size_t m = right_.n_effective();
    BilinearForm sym = BilinearForm::symplectic(m);
    Subspace kerpsi = target_ker_psi();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!kerpsi.contains(out[i].encode()))
            throw IncompatibleCompletion("selected operator is not a target logical");
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (sym.eval(out[i].encode(), out[j].encode()))
                throw IncompatibleCompletion("selected frame does not commute");
    }
    return out;
}

Subspace build_divergence_space(const StackLayout& lay, bool x_type) {
    F2Matrix rows(0, lay.n_stabilizers);
    for (int z = 0; z < lay.L; ++z)
        for (int y = 0; y < lay.L; ++y)
            for (int x = 0; x < lay.L; ++x)
                rows.append_row(x_type ? lay.x_cube_set(x, y, z) : lay.z_cube_set(x, y, z));
    return Subspace(lay.n_stabilizers, std::move(rows));
}

}  // namespace f2g
