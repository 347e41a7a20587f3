#pragma once

#include "famcode/codes.hpp"
#include "famcode/division.hpp"
#include "famcode/zeta.hpp"

#include <map>
#include <string>
#include <vector>

namespace famcode {

/// Invariant violation or input outside the hypotheses of the reduction.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A piece of the ambient module at one recursion level: the monomials in
/// component `comp` whose exponent at every variable i with fixed[i] >= 0
/// equals fixed[i]. The remaining x variables are its coefficient variables.
struct Cell {
  int comp = 1;
  std::vector<int> fixed;
};

/// Cell layout of one recursion level. At the top level there is one cell
/// per component and every variable is a coefficient variable. Variables
/// 0..active-1 are active and x_a = active-1 is the distinguished one.
struct Level {
  int n = 0;
  int active = 0;
  std::vector<Cell> cells;

  static Level top(int n, int s);
  int xa() const { return active - 1; }
  /// Cell containing the x-part of m, -1 if none.
  int cellOf(const Monomial& m) const;
  /// The monomial of cell c with all coefficient exponents zero.
  Monomial base(int c) const;
  bool coefficientVar(int c, int v) const;
  /// m with the fixed exponents of its cell removed and component 1.
  Monomial coordinates(int c, const Monomial& m) const;
  /// Level after splitting off x_a: a cell with generator x_a^{d[c]}
  /// (d[c] >= 0) splits into d[c] cells with x_a fixed to 0..d[c]-1; a cell
  /// with d[c] < 0 keeps x_a as a coefficient variable.
  Level child(const std::vector<int>& d) const;
};

/// One polynomial template of the virtual reduced standard basis.
struct Template {
  bool isY = true;   ///< B_{i l} (true) or B_k (false)
  int y = -1;        ///< code variable for B_{i l}
  int cell = 0;      ///< l, resp. the cell of k
  Monomial lead;     ///< y*base, resp. x_a^{d_k}*base
  Poly bcirc;        ///< constant part b°
  Poly poly;
  std::vector<int> unknowns;
};

/// Unknown coefficient series of the templates: u (regular target cell m,
/// power j) or v (target cell m without generator).
struct Unknown {
  int var = -1;
  bool isV = false;
  int tpl = 0;
  int m = 0;
  int j = 0;
};

struct VirtualBasis {
  Level level;
  std::vector<int> d;          ///< per cell, -1 when the cell has no generator
  std::vector<int> activeY;    ///< code variables that get templates
  std::vector<int> passiveY;   ///< code variables depending on x' only
  std::vector<Template> templates;
  std::vector<Unknown> unknowns;  ///< in tie-break order of the zeta ranking
  MonomialOrder omega;
  std::vector<ScopedDivisor> divisors;
};

struct ExtractedCodes {
  std::vector<int> unknowns;      ///< ring variables
  std::vector<Poly> equations;    ///< equations[i] determines unknowns[i]
  std::vector<int> ranking;       ///< zeta ranking of the unknowns, largest first
  std::vector<ZetaRelation> relations;
};

/// Result of the elimination applied to an extracted system.
struct SimplifiedSystem {
  std::map<int, Poly> solved;
  std::vector<int> unknowns;
  std::vector<Poly> equations;
};

/// Division of one father code by a reduced basis. The quotient of the k-th
/// basis father is quotientNumerators[k] / denominator, where the
/// denominator has a nonzero constant term.
struct CodeDivision {
  FamilyCode code;  ///< fathers = {remainder}; mother covers the quotients too
  std::vector<Poly> quotientNumerators;
  Poly denominator = Poly(1);
  bool hasQuotients = false;
};

/// Working state shared by one reduction run: all code variables live in one
/// ring and one mother system.
struct ReductionContext {
  Ring ring;
  int n = 0;
  int s = 1;
  MonomialOrder eta;
  std::vector<int> yOrder;
  std::map<int, Poly> equations;

  static ReductionContext from(const FamilyCode& fc);
  void absorb(const FamilyCode& fc);
  std::set<int> closure(const std::set<int>& seeds) const;
  std::set<int> codeVars(const Poly& p) const;
  /// Family code with the given fathers and the mother restricted to the
  /// code variables of fathers and `extra`.
  FamilyCode output(const std::vector<Poly>& fathers, const std::vector<Poly>& extra = {}) const;
};

/// Constant parts of the reduced basis of the module generated by H*e and
/// `fathers` (one per regular cell, indexed by cell) after setting x' = 0.
/// Key: template index in vb. Throws ReductionError without stabilization.
std::map<int, Poly> computeBCirc(const ReductionContext& ctx, const VirtualBasis& vb,
                                 const std::map<int, Poly>& fathers);

/// Templates, unknowns and omega order. `fathers` maps each regular cell to
/// its father. Without `fixedFathers` the B_k carry unknowns; with it the
/// fathers are already reduced and serve as B_k after scaling to a monic
/// leading term. `extraCodes` are code variables of a dividend.
VirtualBasis buildVirtualBasis(ReductionContext& ctx, const Level& L, const std::vector<int>& d,
                               const std::map<int, Poly>& fathers, const std::set<int>& extraCodes,
                               bool fixedFathers);

/// Divides H_y*base and the unfixed fathers by the templates and reads off
/// the equations of the unknowns; asserts the invariants.
ExtractedCodes extractUVCodes(const ReductionContext& ctx, const VirtualBasis& vb,
                              const std::map<int, Poly>& fathers);

/// Eliminates unknowns: closed x-free subsystems vanish, linear occurrences
/// with constant coefficient are solved, y*Q = 0 with Q(0) != 0 gives y = 0.
SimplifiedSystem simplifySystem(const ReductionContext& ctx, const ExtractedCodes& ex);

/// Zeta relations of the eight schemas for the unknowns of vb.
std::vector<ZetaRelation> zetaRelations(const ReductionContext& ctx, const VirtualBasis& vb);

/// Father together with the initial vector of the series it encodes.
struct BasisElement {
  Poly poly;
  Monomial init;
};

/// Reduced standard basis at a level where every father has an initial
/// x_a^{d} * base in its own cell.
std::vector<BasisElement> reducedBasisXnRegular(ReductionContext& ctx, const Level& L,
                                                const std::vector<BasisElement>& fathers);
FamilyCode reducedBasisXnRegular(const FamilyCode& fc);

struct LevelDivision {
  Poly remainder;
  std::vector<Poly> quotientNumerators;
  Poly denominator = Poly(1);
  bool hasQuotients = false;
};

LevelDivision divideXnRegular(ReductionContext& ctx, const Level& L, const Poly& F,
                              const std::vector<BasisElement>& basis, bool quotients);
CodeDivision divideXnRegular(const FamilyCode& f, const FamilyCode& basis, bool quotients = true);

std::vector<BasisElement> reducedBasisGeneral(ReductionContext& ctx, const Level& L,
                                             const std::vector<BasisElement>& fathers);
FamilyCode reducedBasisGeneral(const FamilyCode& fc);

LevelDivision divideGeneral(ReductionContext& ctx, const Level& L, const Poly& F,
                            const std::vector<BasisElement>& basis, bool quotients);
CodeDivision divideGeneral(const FamilyCode& f, const FamilyCode& basis, bool quotients = true);

/// Weierstrass form of an x_n-regular single father: monic in x_n of degree d
/// with coefficient codes.
FamilyCode weierstrassNormalForm(const FamilyCode& g);

/// Declared initials of the fathers, or their epsilon-initials when those
/// are free of code variables. Throws ReductionError otherwise.
std::vector<Monomial> declaredInitials(const FamilyCode& fc);

/// Re-expands everything to degree D and checks f = sum a_k g_k + c there.
/// On failure `why` (if given) describes the first mismatch.
bool checkDivision(const FamilyCode& f, const FamilyCode& basis, const CodeDivision& d, int D,
                   std::string* why = nullptr);

/// Soundness of a reduced basis after substituting the baby series to
/// degree D: initial vectors as declared, tails outside the initial module,
/// every generator of `original` formally divisible with remainder 0.
/// Without `checkTails` only the initials and the divisions are checked,
/// which suits standard bases that are not reduced.
bool verifyReducedBasis(const FamilyCode& original, const FamilyCode& basis, int D, std::string* why = nullptr,
                        bool checkTails = true);

/// 1/S truncated at degree D; S needs a nonzero constant term.
Poly inverseSeries(const Poly& S, int D);

/// Merges two rings of which one extends the other.
Ring mergeRings(const Ring& a, const Ring& b);

}  // namespace famcode
