#pragma once

#include <stdexcept>
#include <string>

namespace wcde {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define WCDE_ERROR(Name)              \
  struct Name : Error {               \
    explicit Name(const std::string& m) \
        : Error(#Name ": " + m) {}    \
  }

WCDE_ERROR(ParseError);
WCDE_ERROR(InvalidInversionSet);
WCDE_ERROR(DisconnectedShape);
WCDE_ERROR(BoxNotInDiagram);
WCDE_ERROR(NotBalanced);
WCDE_ERROR(NotALattice);
WCDE_ERROR(NotTransitiveReduction);
WCDE_ERROR(NotSemidistributive);
WCDE_ERROR(NotIrreducible);
WCDE_ERROR(EmptyOrbit);
WCDE_ERROR(DimensionMismatch);
WCDE_ERROR(LabelingMismatch);
WCDE_ERROR(NotACover);
WCDE_ERROR(PairNotInInverseInversions);
WCDE_ERROR(InvalidChain);
WCDE_ERROR(KOutOfRange);
WCDE_ERROR(AnchorOutOfRange);
WCDE_ERROR(PartitionTooBig);
WCDE_ERROR(NotCrossSaturated);
WCDE_ERROR(NotInInterval);
WCDE_ERROR(NotBalancedShape);
WCDE_ERROR(CoefficientMismatch);

#undef WCDE_ERROR

}  // namespace wcde
