#pragma once

#include "chg/hermitian.hpp"

namespace chg {

struct DegenerateTriple : Error {
    DegenerateTriple() : Error("degenerate boundary triple") {}
};

struct DegenerateQuadruple : Error {
    DegenerateQuadruple() : Error("degenerate boundary quadruple") {}
};

struct AmbiguousCoplanarity : Error {
    AmbiguousCoplanarity(double line_defect, double lagrangian_defect)
        : Error("both coplanarity identities hold (X2/X1 near zero)"),
          complex_line_defect(line_defect),
          lagrangian_defect(lagrangian_defect) {}
    double complex_line_defect;
    double lagrangian_defect;
};

/// Angular invariant of a boundary triple, in [-pi/2, pi/2].
struct CartanValue {
    double angle;  // radians
};

/// arg(-<z1,z2><z2,z3><z3,z1>) with the branch (-pi, pi]; independent of
/// the chosen lifts and of a common SU(2,1) motion of the triple.
CartanValue cartan_invariant(const ProjectivePoint& p1, const ProjectivePoint& p2,
                             const ProjectivePoint& p3, double eps = kEpsPoint);

/// <z3,z1><z4,z2> / (<z4,z1><z3,z2>) for distinct boundary points;
/// the bracket notation [z1,z2,z3,z4] used below refers to this order.
Cx kr_cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                  const ProjectivePoint& p3, const ProjectivePoint& p4,
                  double eps = kEpsPoint);

struct CrossRatioTriple {
    Cx x1;  // [z1,z2,z3,z4]
    Cx x2;  // [z1,z3,z2,z4]
    Cx x3;  // [z2,z3,z1,z4]
};

CrossRatioTriple pp_cross_ratios(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                 const ProjectivePoint& p3, const ProjectivePoint& p4,
                                 double eps = kEpsPoint);

enum class CoplanarityKind { ComplexLine, Lagrangian, Neither };

const char* to_string(CoplanarityKind k);

struct CoplanarityVerdict {
    CoplanarityKind kind;
    CrossRatioTriple ratios;
    double max_imag;            // worst |Im Xi| relative to 1 + |Xi|
    double complex_line_defect; // |X3 + X2/X1|
    double lagrangian_defect;   // |X3 - X2/X1|
};

/// Decides whether four boundary points lie on one complex line
/// (X3 = -X2/X1) or one Lagrangian plane (X3 = X2/X1), given that all three
/// cross-ratios are real at tolerance. Both identities passing at once is
/// possible only when X2/X1 vanishes and is reported as an error rather
/// than resolved.
CoplanarityVerdict coplanarity_test(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                    const ProjectivePoint& p3, const ProjectivePoint& p4,
                                    double eps_cop = kEpsCoplanarity,
                                    double eps_pt = kEpsPoint);

}  // namespace chg
