"""Combinatorics of increasing multi-indices in dimension 4.

Forms are stored by increasing multi-index with unit coefficients; every
sign convention in the package derives from the tables built here, with
the orientation fixed so that dx^1^dx^2^dx^3^dx^4 is positive.
"""

from itertools import combinations
from math import comb

import numpy as np

DIM = 4

# Increasing multi-indices per degree, in lexicographic order.
INDEX_SETS = {k: [tuple(c) for c in combinations(range(DIM), k)] for k in range(DIM + 1)}
COMP_OF = {k: {I: n for n, I in enumerate(INDEX_SETS[k])} for k in range(DIM + 1)}
N_COMP = {k: comb(DIM, k) for k in range(DIM + 1)}


def perm_sign(seq):
    """Sign of the permutation given as a sequence of distinct integers."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def merge_sign(I, J):
    """Sign of sorting the concatenation I+J, or 0 on a repeated index."""
    if set(I) & set(J):
        return 0
    return perm_sign(list(I) + list(J))


def _wedge_table(k, l):
    """Entries (out_comp, comp_a, comp_b, sign) of the product alpha_I beta_J."""
    table = []
    for ia, I in enumerate(INDEX_SETS[k]):
        for ib, J in enumerate(INDEX_SETS[l]):
            s = merge_sign(I, J)
            if s:
                out = COMP_OF[k + l][tuple(sorted(I + J))]
                table.append((out, ia, ib, s))
    return table


WEDGE_TABLES = {(k, l): _wedge_table(k, l)
                for k in range(DIM + 1) for l in range(DIM + 1) if k + l <= DIM}


def _d_table(k):
    """Entries (out_comp, axis, in_comp, sign) of the alternating derivative sum."""
    table = []
    for jout, J in enumerate(INDEX_SETS[k + 1]):
        for m, axis in enumerate(J):
            I = tuple(x for x in J if x != axis)
            table.append((jout, axis, COMP_OF[k][I], (-1) ** m))
    return table


D_TABLES = {k: _d_table(k) for k in range(DIM)}


def _hodge_table(k):
    """Pairs (complement_comp, sign) for each output component of the star.

    Output component J of the star on k-forms picks up the raised input
    component on the complementary set I with the sign of the permutation
    (I, J) of (0, 1, 2, 3).
    """
    table = []
    for J in INDEX_SETS[DIM - k]:
        I = tuple(x for x in range(DIM) if x not in J)
        table.append((COMP_OF[k][I], perm_sign(list(I) + list(J))))
    return table


HODGE_TABLES = {k: _hodge_table(k) for k in range(DIM + 1)}

# Single complementary index of each increasing 3-index set.  The Gram matrix
# of 3-forms follows from the cofactor identity
#   det(g^-1 [rows I, cols J]) = (-1)^(i'+j') g_{i'j'} / det g
# with i', j' the complements of I, J.
COMPL3 = [next(x for x in range(DIM) if x not in I) for I in INDEX_SETS[3]]

# Fully antisymmetric extension of a 2-form: entries (a, b, comp, sign)
# covering all ordered pairs a != b.
FULL2_TABLE = []
for _n, (_a, _b) in enumerate(INDEX_SETS[2]):
    FULL2_TABLE.append((_a, _b, _n, 1))
    FULL2_TABLE.append((_b, _a, _n, -1))

# Coordinate (metric-free) dual of a 2-form: dual_comp[n] = sign * comp[m]
# with (m, sign) from contraction against the flat epsilon tensor.
DUAL2_TABLE = []
for _n, (_a, _b) in enumerate(INDEX_SETS[2]):
    _I = tuple(x for x in range(DIM) if x not in (_a, _b))
    DUAL2_TABLE.append((COMP_OF[2][_I], perm_sign([_a, _b] + list(_I))))

# Levi-Civita symbol on three indices.
EPS3 = np.zeros((3, 3, 3))
for _i in range(3):
    for _j in range(3):
        for _k in range(3):
            if len({_i, _j, _k}) == 3:
                EPS3[_i, _j, _k] = perm_sign((_i, _j, _k))
EPS3.setflags(write=False)

# Packed storage order for symmetric matrices (upper triangle, row major).
SYM_PAIRS = {n: [(i, j) for i in range(n) for j in range(i, n)] for n in (3, 4)}
SYM_COMP = {n: {p: m for m, p in enumerate(SYM_PAIRS[n])} for n in (3, 4)}
