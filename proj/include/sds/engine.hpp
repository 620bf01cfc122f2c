#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sds/form.hpp"
#include "sds/matrix.hpp"

namespace sds {

enum class Classification { TriviallyPositive, TriviallyNegative, Unclassified };

/// TriviallyPositive iff all coefficients >= 0; else TriviallyNegative iff
/// f(1,...,1) < 0; else Unclassified. A form can satisfy neither, never both.
Classification classify(const Form& f);

/// The expansion alphabet: the matrices substituted at every node, in child
/// order. For base Tn the averaging matrix is pre-multiplied by lcm(1..n) so
/// all arithmetic below the root stays integral; sign classification is
/// unaffected and reported points are rescaled anyway. `scale` records that
/// factor (1 for An and custom sets).
struct SubstSet {
  Base base = Base::Tn;
  int n = 0;
  Int scale = 1;
  std::vector<SubstMatrix> mats;    // child order
  std::vector<Permutation> perms;   // parallel to mats; empty for Custom

  static SubstSet tn(int n);
  static SubstSet an(int n);
  /// Validates every matrix with is_stochastic_mean; throws with the failing
  /// matrix index and column pair otherwise.
  static SubstSet custom(std::vector<SubstMatrix> mats);

  std::size_t arity() const { return mats.size(); }
  /// Unscaled product of the word's matrices (child indices).
  SubstMatrix word_product(const std::vector<int>& word) const;
  /// Product of the scaled matrices actually substituted.
  SubstMatrix scaled_word_product(const std::vector<int>& word) const;
};

/// Child indices into a SubstSet; the empty word is the root. For Tn/An
/// bases index k is the k-th permutation in lexicographic order.
using Word = std::vector<int>;

PermWord to_perm_word(const Word& w, const SubstSet& set);

struct SdsNode {
  Word word;
  Form form;  // the root form transformed by the word's (scaled) product
  Classification status = Classification::Unclassified;
};

enum class SearchMode { Bfs, DfsHunt };

struct EngineConfig {
  Base base = Base::Tn;
  std::vector<SubstMatrix> custom_set;  // used when base == Custom
  int max_depth = 10;
  long long max_nodes = 2'000'000;
  int workers = 1;
  SearchMode search = SearchMode::Bfs;
  /// Optional disproof pre-pass: evaluate f at the unit points e_i before
  /// searching. Off by default.
  bool vertex_prepass = false;
};

enum class Outcome { Psd, NotPsd, Exhausted };

struct CertificateLeaf {
  Word word;
  Form form;
};

/// A complete prefix-free cover of the substitution tree by trivially
/// positive leaves. Leaf forms equal f((scale*B_w1)...(scale*B_wm) X), i.e.
/// the plain substituted forms times scale^(degree*depth).
struct PsdCertificate {
  Base base = Base::Tn;
  int n = 0;
  Int scale = 1;
  int arity = 0;
  std::vector<CertificateLeaf> leaves;
};

struct SearchStats {
  long long nodes = 0;  // nodes expanded
  int depth = 0;        // deepest level reached
  long long millis = 0;
};

struct Verdict {
  Outcome outcome = Outcome::Exhausted;
  Base base = Base::Tn;
  std::optional<PsdCertificate> certificate;  // present iff Psd
  std::optional<RatPoint> witness;            // present iff NotPsd
  Rat witness_value = 0;                      // f(witness), exactly negative
  SearchStats stats;
};

/// The children of a node, in child order, classified. Child forms are
/// computed by relabeling with sigma then substituting the base matrix once,
/// which equals substituting P_sigma * base directly.
std::vector<SdsNode> sds_expand(const SdsNode& node, const SubstSet& set);

/// Breadth-first decision loop. Per level: expand every unclassified node,
/// record trivially positive children as certificate leaves, stop on the
/// first trivially negative child (canonical order; the whole level is
/// always completed first so results are identical for any worker count).
/// Returns Psd when the frontier empties, Exhausted when max_depth or
/// max_nodes would be exceeded. Throws on non-homogeneous-capable input
/// (nvars < 1).
Verdict decide(const Form& f, const EngineConfig& cfg = {});

/// Complete decision for binary forms: strips square factors (f = s^2 * g
/// with g the odd-multiplicity part), decides g, and maps the verdict back
/// to f. Witnesses are perturbed off the zero set of s when necessary so
/// f(witness) < 0 holds exactly. The certificate, when present, proves g;
/// *reduced_out receives g when non-null.
Verdict decide_binary(const Form& f, const EngineConfig& cfg = {},
                      Form* reduced_out = nullptr);

/// The image of the all-ones point under the word's matrix product, rescaled
/// to the smallest nonnegative integer vector. When the node at `word` is
/// trivially negative this is an exact counterexample by homogeneity.
RatPoint extract_witness(const Word& word, const SubstSet& set);

/// Independent re-check of a verdict. Psd: recomputes every leaf form from f
/// and its word via the full matrix product (not the engine's incremental
/// path), checks trivial positivity and structural completeness (every
/// internal node of the leaf-word trie has all children). NotPsd: checks the
/// witness is nonnegative, nonzero, and evaluates exactly negative. Pure;
/// shares no state with decide. On failure returns false and, when non-null,
/// *why names the offending leaf or check.
bool verify_certificate(const Form& f, const Verdict& v, std::string* why = nullptr);

}  // namespace sds
