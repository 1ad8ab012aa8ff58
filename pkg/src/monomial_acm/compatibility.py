from typing import List, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix


def integer_matrix(rows, width):  # type: (Sequence[Sequence[int]], int) -> DomainMatrix
    """
    Builds a DomainMatrix over ZZ.
    DomainMatrix.from_list() appeared in later sympy versions, the constructor works everywhere.
    :param rows: Matrix rows of python integers
    :param width: Number of columns. Needed for matrices without rows
    :return: DomainMatrix over ZZ
    """
    data = [[ZZ(v) for v in row] for row in rows]  # type: List[List]
    return DomainMatrix(data, (len(data), width), ZZ)


def domain_rank(matrix):  # type: (DomainMatrix) -> int
    """
    Exact rank of a DomainMatrix.
    sympy 1.13 added fraction-free rref_den() over integral domains.
    Earlier versions eliminate over fields only, so ZZ is promoted to QQ there.
    :param matrix: DomainMatrix over ZZ, QQ or GF(p)
    :return: Rank
    """
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0

    if matrix.domain.is_Field:
        return matrix.rank()

    if hasattr(matrix, 'rref_den'):
        _, _, pivots = matrix.rref_den()
        return len(pivots)

    return matrix.convert_to(matrix.domain.get_field()).rank()


# int.bit_count() appeared in python 3.10
if hasattr(int, 'bit_count'):
    def popcount(mask):  # type: (int) -> int
        return mask.bit_count()
else:
    def popcount(mask):  # type: (int) -> int
        return bin(mask).count('1')
