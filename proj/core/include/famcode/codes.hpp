#pragma once

#include "famcode/linalg.hpp"
#include "famcode/monomial_module.hpp"
#include "famcode/order.hpp"
#include "famcode/poly.hpp"

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace famcode {

/// Polynomial system H(x, y) = 0 with H(0,0) = 0 and invertible
/// y-Jacobian at the origin; defines the baby series y = h(x).
struct MotherCode {
  std::vector<int> yVars;
  std::vector<Poly> equations;  ///< equations[i] belongs to yVars[i]
  /// Matrix applied on the left to the raw equations by normalization.
  Matrix normalization;
};

class InvalidCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family code: mother code plus father vectors in K[x, y]^s.
struct FamilyCode {
  Ring ring;          ///< all variable names; x variables are 0..n-1
  int n = 0;
  int s = 1;
  MonomialOrder eta;  ///< order on x-monomial vectors
  MotherCode mother;
  std::vector<Poly> fathers;
  /// Initial vectors of the encoded series when known (same length as
  /// fathers), otherwise empty.
  std::vector<Monomial> initials;

  bool isX(int v) const { return v < n; }
};

/// Checks H(0,0) = 0 and invertibility of the Jacobian, then multiplies by
/// the inverse Jacobian so that D_yH(0,0) is the identity. Throws InvalidCode
/// naming the failing condition.
MotherCode validateMotherCode(const std::vector<Poly>& H, const std::vector<int>& yVars);

struct BabySeriesApprox {
  std::map<int, TruncatedSeries> series;  ///< per y variable
  int degree = 0;
};

/// Fixed-point iteration y <- y - J0^{-1} H(x, y), one degree per step.
BabySeriesApprox babyExpand(const MotherCode& H, int D);

/// Direct sum of mother codes sharing one ring. Clashing y variables of later
/// codes are renamed to fresh ring variables; `renaming` records old -> new
/// per input code.
struct DirectSumResult {
  MotherCode code;
  std::vector<std::map<int, int>> renaming;
};
DirectSumResult directSum(const std::vector<MotherCode>& codes, Ring& ring);

/// H_i * e_l for l = 1..s, followed by the fathers.
std::vector<Poly> familyModuleGenerators(const FamilyCode& fc);

/// Series order on x- and code variables used for the code module.
MonomialOrder epsilonOrder(const FamilyCode& fc);

struct CodeStandardBasisResult {
  FamilyCode code;           ///< fathers now form a standard basis
  MonomialModule initial;    ///< in(I)
};

/// Standard basis of the encoded module via Lazard's method on the code
/// module; fathers whose initial vectors are x-only are kept.
CodeStandardBasisResult codeStandardBasis(const FamilyCode& fc);

/// Substitutes the baby series (to degree D) into every father.
std::vector<Poly> expandFathers(const FamilyCode& fc, int D);

/// Reads the line-oriented code file format.
FamilyCode parseCodeFile(std::istream& in, bool validate = true);
FamilyCode parseCodeString(const std::string& text, bool validate = true);

/// Variables occurring in the polynomials that are not x variables.
std::set<int> codeVariables(const FamilyCode& fc, const std::vector<Poly>& polys);

/// The closure of `seeds` under "equation of y mentions y'".
std::set<int> motherClosure(const MotherCode& m, const std::set<int>& seeds);

/// Restricts a mother code to the given closed set of its variables.
MotherCode restrictMother(const MotherCode& m, const std::set<int>& keep);

}  // namespace famcode
