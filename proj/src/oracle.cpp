#include "uinf/oracle.hpp"

namespace uinf {

MembershipReport in_qinf(const UElement& a) {
  MembershipReport report;
  for (unsigned l : a.columns()) {
    report.checked_columns.push_back(l);
    for (const Partition& p : partitions_of(static_cast<int>(l))) {
      GrVector image = theta_apply(a, GrVector::cls(static_cast<int>(l), p));
      if (!image.is_zero()) {
        report.member = false;
        report.witness = Witness{l, p, std::move(image)};
        return report;
      }
    }
  }
  return report;
}

DiagonalShiftReport diagonal_shift_report(const UElement& a) {
  return DiagonalShiftReport{in_qinf(a), in_qinf(shift_diag(a))};
}

}  // namespace uinf
