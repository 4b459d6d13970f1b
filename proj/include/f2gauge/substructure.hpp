#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2gauge/gauge.hpp"
#include "f2gauge/models.hpp"

// Right/left restrictions of a gauge structure and everything derived from
// them: the restricted maps, the junk group and distillation cost, the
// condensation/distillation verdict, distilled subsystem-symmetry logical
// operators, accidental-logical detection, completions, and the ground-state
// logical frame a completion selects.

namespace f2g {

struct NonProjectiveR : std::runtime_error {
    explicit NonProjectiveR(const std::string& w) : std::runtime_error(w) {}
};
struct SymplecticViolation : std::runtime_error {
    SymplecticViolation(std::size_t i, std::size_t j)
        : std::runtime_error("restricted generators " + std::to_string(i) + "," +
                             std::to_string(j) + " anticommute"),
          i(i), j(j) {}
    std::size_t i, j;
};
struct NotLogical : std::runtime_error {
    NotLogical() : std::runtime_error("operator has nonzero restricted syndrome") {}
};
struct PrescribedNotCommuting : std::runtime_error {
    explicit PrescribedNotCommuting(const std::string& w) : std::runtime_error(w) {}
};
struct PrescribedMissesJunk : std::runtime_error {
    PrescribedMissesJunk() : std::runtime_error("prescribed completion does not contain the junk group") {}
};
struct IncompatibleCompletion : std::runtime_error {
    explicit IncompatibleCompletion(const std::string& w) : std::runtime_error(w) {}
};

// span{prod x_i, prod z_i} inside the 2n-dimensional local Pauli space
Subspace clr_local_space(std::size_t n);

// A cell-local restriction of the field space, stored as one canonical
// anticommuting pair per effective qubit plus the complementary pairs that
// coordinatize everything the restriction discards.
class RightRestriction {
  public:
    static RightRestriction from_pairs(std::size_t n_parent, std::vector<PauliVec> x_lift,
                                       std::vector<PauliVec> z_lift,
                                       std::vector<PauliVec> junk_x,
                                       std::vector<PauliVec> junk_z);

    // two three-qubit cells per vertex of a coupled vertex stack, each
    // restricted to its all-X / all-Z pair
    static RightRestriction clr_cells(const StackLayout& lay);

    // per-edge cells of the TC2 stacks restricted to (x on slot 0, z1 z2)
    static RightRestriction edge_cells(const StackLayout& lay);

    std::size_t n_parent() const { return n_parent_; }
    std::size_t n_effective() const { return x_lift_.size(); }
    std::size_t n_junk_pairs() const { return jx_lift_.size(); }

    const F2Matrix& to_eff() const { return to_eff_; }    // 2M x 2N
    const F2Matrix& lift() const { return lift_; }        // 2N x 2M
    const F2Matrix& to_junk() const { return to_junk_; }  // 2M' x 2N
    const F2Matrix& jlift() const { return jlift_; }      // 2N x 2M'

    const Subspace& r_space() const { return r_space_; }
    const Subspace& r_perp() const { return r_perp_; }

    PauliVec effective(const PauliVec& parent_op) const;  // rho . pi_R
    PauliVec lift_op(const PauliVec& eff_op) const;
    const std::vector<PauliVec>& junk_x_lifts() const { return jx_lift_; }
    const std::vector<PauliVec>& junk_z_lifts() const { return jz_lift_; }

  private:
    std::size_t n_parent_ = 0;
    std::vector<PauliVec> x_lift_, z_lift_, jx_lift_, jz_lift_;
    F2Matrix to_eff_, lift_, to_junk_, jlift_;
    Subspace r_space_, r_perp_;
};

struct LeftRestriction {
    enum class Mode { Projective, PrimitiveCube };
    Subspace space;       // subspace of the potential space F2^{|S|}
    Mode mode = Mode::Projective;
    F2Matrix cube_sets;   // generating-set rows for the quotient map in
                          // PrimitiveCube mode
    bool projective = false;

    static LeftRestriction make(Subspace s, F2Matrix cube_rows = F2Matrix());
};

enum class Verdict { Condensation, Distillation };

struct Classification {
    Verdict verdict = Verdict::Distillation;
    std::size_t junk_dim = 0;
    std::size_t distillation_cost = 0;  // zero for condensations
    std::size_t dim_h_parent = 0, dim_h_target = 0, dim_h_cotarget = 0;
    bool cotarget_symplectic = false;
    bool homology_additive = false;
};

struct MaximalityReport {
    bool maximal = false;
    Subspace violations;               // quotient representatives, potential coords
    std::size_t preimage_dim = 0;
};

struct CompletionReport {
    StabCode completion;
    Subspace group;        // parent Pauli coords
    bool maximal = false;  // maximal mutually commuting inside R-perp
    bool contains_junk = false;
};

class Substructure {
  public:
    Substructure(const GaugeStruct& parent, LeftRestriction left, RightRestriction right);

    const GaugeStruct& parent() const { return *parent_; }
    const LeftRestriction& left() const { return left_; }
    const RightRestriction& right() const { return right_; }

    const F2Matrix& phi_sub() const { return phi_sub_; }  // 2M x dim L
    F2Matrix psi_sub() const;  // dual-basis rows, or generating-set rows in
                               // PrimitiveCube mode

    // target data, all computed without needing a projective left space
    std::size_t target_constraints_dim() const;
    std::pair<std::size_t, std::size_t> target_logical_dims() const;
    const Subspace& target_image() const { return im_phi_sub_; }
    Subspace target_ker_psi() const;
    std::vector<PauliVec> target_stabilizers() const;  // nonzero phi_sub columns
    bool target_symplectic() const;

    const Subspace& junk_parent() const { return junk_parent_; }
    Subspace junk_in_complement_coords() const;
    std::size_t junk_dim() const { return junk_parent_.dim(); }

    Subspace a_distill() const;

    Classification classify() const;
    MaximalityReport maximality_check() const;

    // extends the left space by the maximality violations
    Substructure repaired() const;

    struct DistilledSS {
        std::vector<PauliVec> coset_reps;  // effective operators, reduced mod target image
        Subspace space;                    // their span plus the target image, eff coords
    };
    DistilledSS distilled_ss() const;

    bool is_accidental(const PauliVec& eff_logical, PauliVec* witness = nullptr) const;

    CompletionReport complete_prescribed(const StabCode& base) const;
    CompletionReport complete_greedy() const;

    std::vector<PauliVec> ground_state_logicals(const CompletionReport& completion) const;

  private:
    const GaugeStruct* parent_;
    LeftRestriction left_;
    RightRestriction right_;
    F2Matrix phi_sub_;
    Subspace im_phi_sub_;
    Subspace junk_parent_;
    F2Matrix left_cols_;  // |S| x dimL, basis as columns

    Subspace junk_commutant_syndromes() const;  // psi image of the junk commutant in R-perp
};

// Divergence space of generating sets: the span of all cube sets of one
// type; dim L^3 - 1 per type on the torus.
Subspace build_divergence_space(const StackLayout& lay, bool x_type);

}  // namespace f2g
