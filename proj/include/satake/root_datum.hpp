#pragma once

#include "satake/linalg.hpp"
#include "satake/numeric.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace satake {

// A based root datum (X^*, Phi, X_*, Phi^vee) with a chosen set of simple
// roots.  X^* and X_* are Z^n with the dual standard bases; the pairing is
// the dot product.  Roots live in X^*, coroots in X_*.
//
// Everything downstream (weights, kappa maps, transfer kernels, local
// terms) consumes this type.  Representations of the dual group are
// handled inside the same datum by treating Phi^vee as the roots of the
// dual group and elements of X_* as its weights; see weights.hpp.
class BasedRootDatum {
  public:
    // name: diagnostic label ("GL3", "B2-ad", "cartan[...]").
    BasedRootDatum(std::string name, int rank, std::vector<std::string> basis_labels,
                   std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }                       // rank of X_*
    int ss_rank() const { return (int)simple_roots_.size(); }  // number of simple roots
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }
    const std::vector<Vec>& simple_roots() const { return simple_roots_; }
    const std::vector<Vec>& simple_coroots() const { return simple_coroots_; }

    // Cartan matrix, C[i][j] = <alpha_j, alpha_i^vee>.
    const std::vector<Vec>& cartan() const { return cartan_; }

    // Positive roots and the matching positive coroots (index-aligned),
    // sorted lexicographically by root vector.
    const std::vector<Vec>& positive_roots() const { return positive_roots_; }
    const std::vector<Vec>& positive_coroots() const { return positive_coroots_; }

    const Vec& two_rho() const { return two_rho_; }              // sum of Phi^+
    const Vec& two_rho_check() const { return two_rho_check_; }  // sum of (Phi^vee)^+

    // Simple reflection s_i as a matrix on X_*: v -> v - <alpha_i, v> alpha_i^vee.
    const Mat& simple_reflection(int i) const { return simple_reflections_[i]; }
    // The same reflection on X^*: x -> x - <x, alpha_i^vee> alpha_i.
    const Mat& simple_reflection_dual(int i) const { return simple_reflections_dual_[i]; }

    Coord pair(const Vec& character, const Vec& cocharacter) const {
        return dot(character, cocharacter);
    }

    // W-invariant form B(x,y) = sum_{alpha in Phi} <alpha,x><alpha,y> on X_*.
    Int bilinear(const Vec& x, const Vec& y) const;

    bool is_dominant(const Vec& cochar) const;
    bool is_strictly_dominant(const Vec& cochar) const;

    // Order of the Weyl group, from the classification of the Cartan
    // matrix (no enumeration).
    Int weyl_order() const;

    // Dual datum: roots and coroots swapped.  Provided for presentation;
    // internal computation never needs it.
    BasedRootDatum dual() const;

    // Coroot of a (not necessarily simple) root; looked up in the closure
    // tables.  Throws InputError if the vector is not a root.
    Vec coroot_of(const Vec& root) const;

    // All roots (positive and negative).
    std::vector<Vec> all_roots() const;

  private:
    void validate_and_derive();

    std::string name_;
    int rank_;
    std::vector<std::string> basis_labels_;
    std::vector<Vec> simple_roots_;
    std::vector<Vec> simple_coroots_;
    std::vector<Vec> cartan_;
    std::vector<Vec> positive_roots_;
    std::vector<Vec> positive_coroots_;
    Vec two_rho_;
    Vec two_rho_check_;
    std::vector<Mat> simple_reflections_;
    std::vector<Mat> simple_reflections_dual_;
    Int weyl_order_;
};

// An element of the Weyl group: its matrix on X_* together with the
// canonical (shortlex-minimal) reduced word in simple reflections.
struct WeylElement {
    Mat matrix;             // action on X_*
    std::vector<int> word;  // canonical reduced word, 0-based generator indices

    int length() const { return (int)word.size(); }
    int det() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

// Lattice automorphism induced by a permutation of the simple roots that
// preserves the Cartan matrix.  Encodes the (unramified) Galois action
// used by the kappa machinery.
struct DiagramAutomorphism {
    std::vector<int> perm;  // image of simple index i is perm[i]
    Mat on_cochar;          // theta on X_*
    Mat on_char;            // transpose-inverse action on X^*

    bool is_identity() const { return on_cochar.is_identity(); }
    int order() const;
    static DiagramAutomorphism identity(const BasedRootDatum& d);
};

// ---- presets ------------------------------------------------------------

// name: one of GL, SL, PGL, Sp, SO-odd, SO-even, or a simple type A..G
// with a lattice choice suffix ("A2-sc", "B3-ad"; default sc).  The rank
// argument must match the family's convention (GL_n, SL_n, Sp_{2n},
// SO_{2n+1}, SO_{2n}, X_n).
BasedRootDatum preset(const std::string& name, int n);
// "GL3", "Sp4", "G2-sc", ... with the rank embedded in the name.
BasedRootDatum preset(const std::string& name);

// Datum from an explicit Cartan matrix, lattice "sc" or "ad".
BasedRootDatum datum_from_cartan(const std::vector<Vec>& cartan, const std::string& lattice);

// ---- operations ----------------------------------------------------------

// Full Weyl group, sorted by (length, word) i.e. shortlex.  Guarded: throws
// CostGuardError when the order exceeds the desk-scale bound.
std::vector<WeylElement> weyl_group(const BasedRootDatum& d, Int guard = 200000);

// Identity element.
WeylElement weyl_identity(const BasedRootDatum& d);

// Element from a word in simple reflections (word need not be reduced; the
// canonical reduced word is recomputed).
WeylElement weyl_from_word(const BasedRootDatum& d, const std::vector<int>& word);

// Compose u * v (first apply v, then u), with canonical word.
WeylElement weyl_compose(const BasedRootDatum& d, const WeylElement& u, const WeylElement& v);
WeylElement weyl_inverse(const BasedRootDatum& d, const WeylElement& w);

// Canonical shortlex reduced word of the element given by the matrix;
// requires the matrix to lie in W (throws InputError otherwise).
std::vector<int> canonical_word(const BasedRootDatum& d, const Mat& m);

// (lambda_dom, w) with w * lambda = lambda_dom dominant.  Deterministic:
// repeatedly applies the lowest-index simple reflection with negative
// pairing; the height strictly increases, so this terminates.
std::pair<Vec, WeylElement> dominant_representative(const BasedRootDatum& d, const Vec& lambda);

// True iff mu - lambda is a nonnegative integer combination of the simple
// coroots (membership in their Q-span solved exactly first).
bool dominance_leq(const BasedRootDatum& d, const Vec& lambda, const Vec& mu);

// W-orbit of lambda via reflection closure; sorted lexicographically.
std::vector<Vec> orbit(const BasedRootDatum& d, const Vec& lambda, size_t guard = 1000000);

// Automorphism from a Cartan-preserving permutation of simple indices.
// For semisimple-lattice data theta is the unique linear extension of
// alpha_i^vee -> alpha_{perm(i)}^vee; for the GL_n preset the nontrivial
// permutation induces the transpose-inverse twist e_k -> -e_{n+1-k}.
DiagramAutomorphism automorphism_from_permutation(const BasedRootDatum& d,
                                                  const std::vector<int>& perm);

// Count of positive roots predicted by the classification (used as an
// independent oracle in tests).
Int classified_positive_root_count(const std::vector<Vec>& cartan);

// Irreducible component types of a Cartan matrix, e.g. {"A2","G2"}.
std::vector<std::string> cartan_component_types(const std::vector<Vec>& cartan);

}  // namespace satake
