// Representative flag matrices of DIII clans and their exact checks.
#ifndef DIII_FLAG_HPP
#define DIII_FLAG_HPP

#include "diii/clan.hpp"
#include "diii/qsqrt2.hpp"

namespace diii {

struct FlagMatrix {
  DiiiClan clan;
  QMatrix g;  // 2n x 2n; column k is the k-th flag vector
};

/// Column i is e_sigma(i) for a sign; each family (i, j, 2n+1-j, 2n+1-i)
/// gets the four +-1/sqrt2 combinations of its sigma images.
FlagMatrix representative_matrix(const DiiiClan& c);

/// Antidiagonal ones.
QMatrix antidiagonal_form(int size);

/// g^t J g == J.
bool preserves_form(const QMatrix& g);
/// preserves_form and det g == 1.
bool verify_special_orthogonal(const QMatrix& g);

/// dim(span of the first n columns  intersect  span{e_1..e_n}).
int intersection_dimension(const QMatrix& g);
inline int intersection_parity(const QMatrix& g) { return intersection_dimension(g) % 2; }

}  // namespace diii

#endif  // DIII_FLAG_HPP
