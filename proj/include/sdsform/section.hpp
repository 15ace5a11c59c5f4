/* section.hpp
 *
 * FormSection4: the four radial component profiles of a degree-p form
 * in the warped-product splitting
 *
 *   u = u_TT + alpha^{-1} dr ^ u_TN + alpha dt ^ u_NT
 *       + alpha dt ^ alpha^{-1} dr ^ u_NN,
 *
 * sampled on a radial grid within one angular sector.  Slot sphere
 * degrees are (p, p-1, p-1, p-2); a slot whose degree has no carrier in
 * the sector is stored with length zero and treated as identically 0.
 */
#ifndef SDSFORM_SECTION_HPP
#define SDSFORM_SECTION_HPP

#include <array>

#include "sdsform/grid.hpp"
#include "sdsform/sector.hpp"

namespace sdsform {

struct FormSection4 {
  AngularSector sector;
  int p = 0;
  RadialGrid grid;
  std::array<VecC, 4> slot; /* tt, tn, nt, nn */

  static int slot_degree(int p, int i) {
    static const int off[4] = {0, -1, -1, -2};
    return p + off[i];
  }

  bool present(int i) const { return sector.has(slot_degree(p, i)); }

  static FormSection4 zeros(const AngularSector& sec, int p,
                            const RadialGrid& g) {
    FormSection4 s;
    s.sector = sec;
    s.p = p;
    s.grid = g;
    for (int i = 0; i < 4; ++i)
      if (s.present(i)) s.slot[i] = VecC::Zero(g.size());
    return s;
  }

  /* max |component| over all present slots */
  double max_abs() const {
    double m = 0;
    for (int i = 0; i < 4; ++i)
      if (slot[i].size() > 0) m = std::max(m, slot[i].cwiseAbs().maxCoeff());
    return m;
  }

  VecC& tt() { return slot[0]; }
  VecC& tn() { return slot[1]; }
  VecC& nt() { return slot[2]; }
  VecC& nn() { return slot[3]; }
  const VecC& tt() const { return slot[0]; }
  const VecC& tn() const { return slot[1]; }
  const VecC& nt() const { return slot[2]; }
  const VecC& nn() const { return slot[3]; }
};

}  // namespace sdsform

#endif
