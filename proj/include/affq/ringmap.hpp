#pragma once

#include <map>

#include "affq/algebra.hpp"

namespace affq {

// Algebra homomorphism given by generator images.  Construction verifies that
// every source relation maps into the target's relation ideal, so holding a
// RingMap is itself a certificate of well-definedness.
class RingMap {
 public:
  RingMap() = default;

  static RingMap make(PresentedAlgebra src, PresentedAlgebra dst,
                      std::vector<Poly> images, Budget bud = {});
  static RingMap identity(const PresentedAlgebra& a);
  // Convenience: images given as polynomial text keyed by source variable
  // name; companions of inverted source variables get the inverse image,
  // which must be a unit (verified).
  static RingMap parse(const PresentedAlgebra& src, const PresentedAlgebra& dst,
                       const std::map<std::string, std::string>& images,
                       Budget bud = {});

  const PresentedAlgebra& source() const { return src_; }
  const PresentedAlgebra& target() const { return dst_; }
  const std::vector<Poly>& images() const { return img_; }

  Poly apply_raw(const Poly& f) const;          // substitution only
  Poly apply(const Poly& f, Budget bud = {}) const;  // substitution + target nf

  // this . g  (first g, then this); g.target must match this.source
  RingMap after(const RingMap& g, Budget bud = {}) const;

 private:
  PresentedAlgebra src_, dst_;
  std::vector<Poly> img_;
};

}  // namespace affq
