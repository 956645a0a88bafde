/**
 * @file comb.hpp
 * @brief Classical combinatorics used as ground truth: RSK, the Burge
 *        correspondence, the GT pattern / tableau bijection, cocharge, and
 *        the min-plus evaluations that should reproduce them.
 */
#pragma once

#include <utility>
#include <vector>

#include "lsym/gt.hpp"

namespace lsym {

/** A tableau as a list of rows, top row first. */
using Tableau = std::vector<std::vector<int>>;

/** Nonnegative integer m x n matrix; row i is the word with a_i^j copies of j. */
using IntMatrix = Matrix<long>;

struct TableauPair {
    Tableau P;
    Tableau Q;
};

/** Row-inserts v into T and returns the row index (0-based) of the new cell. */
int row_insert(Tableau& T, int v);

/** Column-inserts v into T and returns the row index (0-based) of the new cell. */
int column_insert(Tableau& T, int v);

/** RSK: row-insert the words a_1, ..., a_m; Q records the growth with labels 1..m. */
TableauPair rsk(const IntMatrix& a);

/**
 * Burge: column-insert the letters of a_m, a_{m-1}, ..., a_1, each word read
 * right to left; Q' labels the cells added by a_{m+1-i} with i.
 */
TableauPair burge(const IntMatrix& a);

std::vector<int> tableau_shape(const Tableau& T);

/** Checks rows weakly increasing, columns strictly increasing, shape a partition, entries positive. */
bool is_semistandard(const Tableau& T);

/** z_{i,j} = number of entries <= j in row i, as a pattern in GT_height^{<=width}. */
GTPattern<long> gt_of_tableau(const Tableau& T, int height, int width);

/** Inverse of gt_of_tableau; fails with "bad-input" when the GT inequalities fail. */
Tableau tableau_of_gt(const GTPattern<long>& g);

/** Number of entries equal to v for v = 1, ..., max entry. */
std::vector<int> tableau_content(const Tableau& T);

/** Charge of the row reading word (bottom row first); the content must be a partition. */
long charge(const Tableau& T);

/** n(content) - charge; fails with "non-partition-content" otherwise. */
long cocharge(const Tableau& T);

/** gRSK in the min-plus semiring, returned as integer patterns. */
std::pair<GTPattern<long>, GTPattern<long>> trop_grsk(const IntMatrix& a);

/** Trop(D) by the staircase tableau sum. */
long trop_energy(const IntMatrix& a);

/** Trop(D) by the product formula through underway path families. */
long trop_energy_product(const IntMatrix& a);

/** Trop(c_m) on an integer pattern of height m (entries missing from a narrow pattern are 0). */
long trop_cocharge(const GTPattern<long>& g);

/** Trop of the KB form prod_k beta_k^{k-2} z_{kk} sum_p wt(p). */
long trop_cocharge_kb(const GTPattern<long>& g);

/** The min-plus pattern of height m with the entries of g and zeros elsewhere. */
GTPattern<Trop> trop_pattern(const GTPattern<long>& g);

Matrix<Trop> trop_matrix(const IntMatrix& a);

std::string tableau_str(const Tableau& T);

}  // namespace lsym
