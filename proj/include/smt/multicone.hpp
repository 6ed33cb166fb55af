#pragma once

#include "smt/core.hpp"
#include "smt/typea.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace smt {

/// Coefficients (c_1, ..., c_ell) on the fundamental weights.
struct HighestWeight {
  std::vector<unsigned> coefficients;
};

HighestWeight weight_of(const Multidegree& md, const ReferenceShape& ref, int ell);
/// Partition with c_i columns of height i.
std::vector<unsigned> partition_of(const HighestWeight& w);

Integer weyl_dim(const HighestWeight& w, int ell);
Integer ssyt_count(const HighestWeight& w, int ell);

std::size_t hilbert(const Multidegree& md, const ReferenceShape& ref, int ell);

/// All multidegrees of the given length with total <= max_total, graded then lexicographic.
std::vector<Multidegree> multidegrees_upto(std::size_t length, unsigned max_total);

struct HilbertRow {
  Multidegree md;
  std::size_t count = 0;
  Integer weyl;
  Integer ssyt;
  bool agrees() const { return weyl == count && ssyt == count; }
};

std::vector<HilbertRow> hilbert_table(const ReferenceShape& ref, int ell, unsigned max_total);
std::vector<HilbertRow> hilbert_table_serial(const ReferenceShape& ref, int ell, unsigned max_total);

struct MonomialIdealBasis {
  /// degree -> generators, each a tableau in adapted order
  std::map<std::size_t, std::vector<std::vector<Row>>> by_degree;
  std::size_t size() const;
};

/// Minimal generators of the ideal spanned by non-standard tableaux.
MonomialIdealBasis discrete_ideal_generators(const ReferenceShape& ref, int ell, std::size_t max_degree);

struct FlatnessEntry {
  Multidegree md;
  std::size_t generic = 0;       // standard tableaux
  std::size_t evaluation_rank = 0;
  std::size_t special = 0;       // monomials outside the discrete ideal
  Integer weyl;
  bool ok() const { return generic == special && generic == evaluation_rank && weyl == generic; }
};

struct FlatnessReport {
  std::vector<FlatnessEntry> entries;
  std::size_t mismatches() const;
};

FlatnessReport degeneration_flatness_check(const ReferenceShape& ref, int ell, unsigned max_total,
                                           std::uint64_t seed = 1);

}  // namespace smt
