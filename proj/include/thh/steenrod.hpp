#pragma once

#include "thh/ktheory.hpp"

#include <memory>

namespace thh {

/* Element of A_* ⊗ M: sparse combination of (A-monomial, M-monomial) pairs. */
class TensorElement {
  public:
    using Key = std::pair<Monomial, Monomial>;

    void add_term(const PrimeField& f, const Monomial& a, const Monomial& m, i64 c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, i64>& terms() const { return terms_; }
    TensorElement plus(const PrimeField& f, const TensorElement& o) const;
    TensorElement scaled(const PrimeField& f, i64 c) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

  private:
    std::map<Key, i64> terms_;
};

/* The dual Steenrod algebra P(ξ̄_1, ξ̄_2, ...) ⊗ E(τ̄_0, τ̄_1, ...) truncated at
 * a degree bound, |ξ̄_n| = 2p^n - 2, |τ̄_n| = 2p^n - 1, with the coproduct
 *   Δ(ξ̄_n) = Σ_{i+j=n} ξ̄_i ⊗ ξ̄_j^{p^i}
 *   Δ(τ̄_n) = 1 ⊗ τ̄_n + Σ_{i+j=n} τ̄_i ⊗ ξ̄_j^{p^i}   (ξ̄_0 = 1). */
class DualSteenrod {
  public:
    DualSteenrod(i64 p, int D);

    const Presentation& pres() const { return *pres_; }
    const Basis& basis() const { return basis_; }
    i64 p() const { return pres_->field().p(); }
    int bound() const { return basis_.max_degree(); }

    int xi(int n) const;  /* generator index of ξ̄_n, -1 above the bound */
    int tau(int n) const; /* generator index of τ̄_n */
    Monomial xi_power(int n, int e) const;
    Element tau1_untwisted() const; /* τ_1 = ξ̄_1 τ̄_0 - τ̄_1 via the antipode */

    Element mul(const Element& a, const Element& b) const;
    TensorElement coproduct(const Monomial& m) const;

    /* the multiplication (A ⊗ A) ⊗ (A ⊗ A) -> A ⊗ A with Koszul signs */
    TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const;

  private:
    std::vector<int> xi_index_, tau_index_; /* filled while pres_ is built */
    std::shared_ptr<Presentation> pres_;
    Basis basis_;
    std::vector<TensorElement> gen_coproduct_;
};

/* A graded comodule algebra over A_*: an underlying presentation together
 * with a coaction on each generator, extended multiplicatively. Divided-power
 * generators must be primitive (their γ-classes are then primitive too). */
class Comodule {
  public:
    Comodule(std::shared_ptr<const DualSteenrod> steenrod,
             std::shared_ptr<const Presentation> underlying, int D,
             std::vector<TensorElement> generator_coactions);

    const DualSteenrod& steenrod() const { return *steenrod_; }
    const Presentation& underlying() const { return *underlying_; }
    const Basis& basis() const { return basis_; }
    int bound() const { return basis_.max_degree(); }

    TensorElement coaction(const Monomial& m) const;

    /* basis of { x : ν(x) = 1 ⊗ x } in degree n; fails loudly when the
     * coaction data is truncated below n */
    std::vector<Vec> primitives(int n) const;
    i64 primitive_dim(int n) const;

    bool check_counit(int D, std::string* err = nullptr) const;
    bool check_coassoc(int D, std::string* err = nullptr) const;

  private:
    /* tensor product in A ⊗ M */
    TensorElement mixed_mul(const TensorElement& a, const TensorElement& b) const;

    std::shared_ptr<const DualSteenrod> steenrod_;
    std::shared_ptr<const Presentation> underlying_;
    Basis basis_;
    std::vector<TensorElement> gen_coactions_;
    mutable std::map<Monomial, TensorElement> memo_;
};

/* A_* as a comodule over itself via the coproduct. */
Comodule dual_steenrod_self_comodule(std::shared_ptr<const DualSteenrod> A);

std::shared_ptr<const DualSteenrod> build_dual_steenrod(i64 p, int D);

/* (HF_p)_* K per case, with the undetermined coefficient a in F_p.
 * Case (1): E(b) ⊗ P(ξ̃_1^p, ξ̃_2, ...) ⊗ E(τ̃_2, ...), with ν(ξ̃_2) carrying
 * a·τ_1 ⊗ b and the coassociativity companions on ξ̃_1^p and τ̃_2 (a = 1
 * reproduces the published coactions). Cases (2), (3): E(x) ⊗ P_k(y) ⊗
 * P(ξ̃_1, ...) ⊗ E(τ̃_2, ...) with ν(ξ̃_1) = 1⊗ξ̃_1 + ξ̄_1⊗1 + a·τ̄_0⊗xy^{k-1}.
 * Case (4) is rejected. */
Comodule homology_of_K_comodule(const CaseParams& params, i64 a, int D);

/* The case-(1) V(1) ∧ THH(K) comodule: E(ε_0, ε_1) ⊗ (HF_p)_*K ⊗
 * E([σξ̃_1^p], [σξ̃_2]) ⊗ P([στ̃_2]) ⊗ Γ([σb]) with the σ-compatible
 * coactions. */
Comodule v1_thh_comodule(i64 p, i64 a, int D);

} // namespace thh
