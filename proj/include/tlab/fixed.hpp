#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tlab/partition.hpp"
#include "tlab/tableau.hpp"

namespace tlab {

// Enumeration guard, overridable via TABLEAU_LAB_MAX_CELLS.
int syt_cell_limit();

// Thrown when an enumeration would exceed the cell limit. Callers that treat
// the limit as a soft cap (the CLI) catch this and report it as info.
struct EnumerationLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Visit every standard filling of the shape. The visitor returns false to
// stop early; for_each_syt returns false iff it was stopped.
bool for_each_syt(const SkewShape& shape, const std::function<bool(const SkewTableau&)>& visit);

std::vector<SkewTableau> enumerate_syt(const SkewShape& shape);

// Number of standard fillings of a straight shape by the hook length
// formula; exact for |p| <= 20.
long long hook_count(const Partition& p);

long long binomial(int n, int k);
long long multinomial(int total, const std::vector<int>& sizes);

// All standard fillings of the a x b rectangle fixed by pr^d; requires d | ab.
std::vector<SkewTableau> enumerate_fixed(int a, int b, int d);

// Anti-diagonal union of b single-row pieces of length r: the canonical
// domain of the row-concatenation construction.
SkewShape block_antidiagonal_shape(int b, int r);

// Two rectangular pieces r^ceil(b/2) (southwest) and r^floor(b/2)
// (northeast): the domain of the two-copy construction, and its union shape.
std::vector<Partition> two_block_pieces(int b, int r);
SkewShape two_block_shape(int b, int r);

// The same count from the quotient structure of the rectangle: zero when
// the (ab/d)-core is nonempty, otherwise a multinomial times hook counts.
long long count_fixed(int a, int b, int d);

// Rewrites entries ik+j -> im+a_j where A = {a_1 < ... < a_k} inside [1, m].
SkewTableau reindex(const SkewTableau& t, int m, const std::vector<int>& entries);

// Row-concatenation construction: given a tableau with constant row vector
// and stabilization k, builds a standard filling of the (ar) x b rectangle
// fixed by pr^{br}; requires a >= 2k - 1.
SkewTableau construct_Ra(const SkewTableau& s, int a);

// Two-copy construction: rectification next to shifted anti-rectification.
// Accepts any standard input whose assembled rows form a rectangle.
SkewTableau construct_R2(const SkewTableau& s);

// All standard fillings of the anti-diagonal union of the pieces fixed by
// pr^{n/k}, assembled blockwise; requires k | n. Returns an empty list when
// k fails to divide every piece size.
std::vector<SkewTableau> block_fixed_points(const std::vector<Partition>& pieces, int k);

// Number of standard fillings of outer/inner that rectify to the
// row-superstandard filling of nu.
long long lr_coefficient(const Partition& outer, const Partition& inner, const Partition& nu);

struct CspReport {
    int n = 0;
    int k = 0;
    int root_order = 1;       // order of the evaluation point q = exp(2*pi*i*k/n)
    long long fixed_count = 0;
    long long poly_value = 0;  // rounded q-analogue of the hook length formula at q
    double residual = 0.0;     // |exact evaluation - rounded value|
};

// Evaluates the cyclic sieving instance for pr acting on standard fillings
// of the a x b rectangle at the k-th power of the primitive ab-th root.
CspReport csp_evaluate(int a, int b, int k);

// Row-superstandard filling: row i holds the next p_i consecutive entries.
SkewTableau superstandard_tableau(const Partition& p);

int stab_of_permutation(const Word& w);

// Distribution of the stabilization statistic over S_n, grouped by recording
// tableau so each dual equivalence class is computed once.
std::vector<long long> stab_distribution(int n, int jobs = 1);
// Same by direct iteration over all n! words; cross-check only.
std::vector<long long> stab_distribution_direct(int n);

// Closed form for the number of words in S_n with stabilization exactly 2.
long long stab2_count(int n);

std::vector<Partition> partitions_of(int n);

// Ordered set partitions of [total] into blocks of the given sizes.
std::vector<std::vector<std::vector<int>>> set_compositions(int total, const std::vector<int>& sizes);

void parallel_for(int count, int jobs, const std::function<void(int)>& body);

}  // namespace tlab
