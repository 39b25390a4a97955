#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colalg/algebra.hpp"
#include "colalg/identities.hpp"
#include "colalg/kernel.hpp"

namespace colalg {

/// Every recipe checks its hypotheses (PreconditionError with the failing
/// report) and, unless verify is off, re-checks the output's claims
/// (ClaimError with the failing report).
struct ConstructOptions {
  bool verify = true;
  /// "printed" or "amended" where a recipe has both readings.
  std::string variant = "printed";
  std::size_t cap = kDefaultWitnessCap;
  bool parallel = true;
};

/// Check obj against id; throw PreconditionError naming `what` on failure.
void require_identity(const GradedAlgebraObject& obj, Identity id, const std::string& what,
                      const ConstructOptions& opts, const CheckOptions& extra = {});
/// Check every claim of obj; throw ClaimError on the first failing one.
void verify_claims(const GradedAlgebraObject& obj, const ConstructOptions& opts);

// ---- binary and ternary Leibniz --------------------------------------------

/// [x,y,z] := [x,[y,z]].
GradedAlgebraObject derive_ternary_from_binary(const GradedAlgebraObject& L, const ConstructOptions& opts = {});
/// {x,y} := [x,y,xi] for a degree-0 basis vector xi with [xi,e_i,xi] = 0.
GradedAlgebraObject binary_from_ternary_at(const GradedAlgebraObject& L, std::uint32_t xi,
                                           const ConstructOptions& opts = {});

enum class BinaryTwist { AVERAGING, CENTROID, REYNOLDS, ROTA_BAXTER, NIJENHUIS };
enum class TernaryTwist { CENTROID_A, CENTROID_B, CENTROID_C, REYNOLDS3, ROTA_BAXTER3 };
std::string to_string(BinaryTwist k);
std::string to_string(TernaryTwist k);
std::optional<BinaryTwist> parse_binary_twist(const std::string& s);
std::optional<TernaryTwist> parse_ternary_twist(const std::string& s);

/// Twisted bracket on bracket2 (or product2 when there is no bracket2).
GradedAlgebraObject twist_binary(const GradedAlgebraObject& L, const EvenLinearMap& m, BinaryTwist kind,
                                 std::optional<Scalar> weight = std::nullopt, const ConstructOptions& opts = {});
GradedAlgebraObject ternary_twist(const GradedAlgebraObject& L, const EvenLinearMap& m, TernaryTwist kind,
                                  std::optional<Scalar> weight = std::nullopt, const ConstructOptions& opts = {});

enum class SumKind { BINARY, TERNARY, TERNARY_POISSON };
std::optional<SumKind> parse_sum_kind(const std::string& s);
/// Basis "a.<name>" then "b.<name>".
GradedAlgebraObject direct_sum(const GradedAlgebraObject& a, const GradedAlgebraObject& b, SumKind kind,
                               const ConstructOptions& opts = {});

/// L acting on the algebra carried by the module block (mod_bracket2, left_act, right_act):
/// [(x,a),(y,b)] = ([x,y], [a,b] + [x,b] + [a,y]). Without mod_bracket2 this is the L x M corollary.
GradedAlgebraObject semidirect_sum(const BimoduleObject& action, const ConstructOptions& opts = {});
/// Package two Leibniz algebras and the two mixed actions (slots L x Lc and Lc x L).
BimoduleObject action_bimodule(const GradedAlgebraObject& L, const GradedAlgebraObject& Lc, const MultilinearOp& left,
                               const MultilinearOp& right);

// ---- tensor constructions (pair bases "x⊗y", left factor major) ------------

GradedAlgebraObject tensor_square_ternary(const GradedAlgebraObject& L, const ConstructOptions& opts = {});
GradedAlgebraObject tensor_assoc_ternary(const GradedAlgebraObject& A, const GradedAlgebraObject& L,
                                         const ConstructOptions& opts = {});
GradedAlgebraObject tensor_square_poisson3(const GradedAlgebraObject& P, const ConstructOptions& opts = {});

// ---- trialgebras and dialgebras --------------------------------------------

enum class TrialgebraTarget { LEIBNIZ_POISSON, TERNARY_LEIBNIZ, STAR_ASSOC };
std::optional<TrialgebraTarget> parse_trialgebra_target(const std::string& s);
GradedAlgebraObject from_trialgebra(const GradedAlgebraObject& T, TrialgebraTarget target,
                                    const ConstructOptions& opts = {});
/// x*y = x-|y + x|-y - x_|_y as product2 (the associative algebra the Rota-Baxter corollaries live on).
GradedAlgebraObject star_product(const GradedAlgebraObject& T);
/// weight 0: x.y = R(x)*y - y*R(x); weight -1: R(x)*y - y*R(x) - x*y.
GradedAlgebraObject rb_trialgebra_derived(const GradedAlgebraObject& T, const EvenLinearMap& R, const Scalar& weight,
                                          Identity target, const ConstructOptions& opts = {});
GradedAlgebraObject from_dialgebra(const GradedAlgebraObject& D, const ConstructOptions& opts = {});

// ---- from associative / Lie / Poisson / Jordan ------------------------------

enum class AssocTarget { COMMUTATOR_LIE, TERNARY_COMMUTATOR, LTS, JTS_PLAIN, JTS_INVOLUTION, COMSTRANS };
std::optional<AssocTarget> parse_assoc_target(const std::string& s);
/// theta is required for JTS_INVOLUTION. COMSTRANS honours opts.variant for the commutator.
GradedAlgebraObject from_associative(const GradedAlgebraObject& A, AssocTarget target,
                                     const std::optional<EvenLinearMap>& theta = std::nullopt,
                                     const ConstructOptions& opts = {});

enum class PoissonRecipe { NESTED_BRACKET, BRACKET_OF_PRODUCT };
std::optional<PoissonRecipe> parse_poisson_recipe(const std::string& s);
GradedAlgebraObject poisson_to_ternary(const GradedAlgebraObject& P, PoissonRecipe recipe,
                                       const ConstructOptions& opts = {});

enum class LieTarget { LTS, COMSTRANS };
GradedAlgebraObject from_lie(const GradedAlgebraObject& L, LieTarget target, const ConstructOptions& opts = {});
GradedAlgebraObject jts_to_lts(const GradedAlgebraObject& J, const ConstructOptions& opts = {});
/// f: scalar-valued arity-2 op. The output claims COMSTRANS checked with opts.variant.
GradedAlgebraObject comstrans_from_bilinear_form(const GradedBasis& basis, const Bicharacter& bc, const Field& field,
                                                 const MultilinearOp& f, const ConstructOptions& opts = {});
GradedAlgebraObject opposite_product(const GradedAlgebraObject& P, const ConstructOptions& opts = {});

// ---- bimodules --------------------------------------------------------------

/// Module = algebra. Ternary: act_* = bracket3 (plus mod_prod_* = product2 if present);
/// binary: left_act = right_act = bracket2.
BimoduleObject bimodule_adjoint(const GradedAlgebraObject& L, const ConstructOptions& opts = {});
/// L (+) M with the ternary bracket extended by the three actions.
GradedAlgebraObject bimodule_semidirect3(const BimoduleObject& b, const ConstructOptions& opts = {});
BimoduleObject bimodule_direct_sum(const BimoduleObject& a, const BimoduleObject& b, const ConstructOptions& opts = {});
/// opts.variant "amended" uses m⊗[n,x,y] in the third map; "printed" drops the ill-typed summand.
BimoduleObject bimodule_tensor(const BimoduleObject& a, const BimoduleObject& b, const ConstructOptions& opts = {});
/// From a bimodule over a Leibniz algebra (left_act, right_act): a bimodule over its derived ternary algebra.
BimoduleObject bimodule_from_binary(const BimoduleObject& b, const ConstructOptions& opts = {});
/// dst as a bimodule over src through a morphism alpha: src -> dst.
BimoduleObject bimodule_pullback(const GradedAlgebraObject& src, const GradedAlgebraObject& dst,
                                 const EvenLinearMap& alpha, const ConstructOptions& opts = {});
RepresentationObject to_representation(const BimoduleObject& b, const ConstructOptions& opts = {});
BimoduleObject from_representation(const RepresentationObject& r, const ConstructOptions& opts = {});
GradedAlgebraObject representation_document(const RepresentationObject& r);

/// Claimed kind of a bimodule: BIMODULE3_POISSON if product actions exist, BIMODULE3 if ternary, else BIMODULE2.
Identity bimodule_kind(const BimoduleObject& b);

}  // namespace colalg
