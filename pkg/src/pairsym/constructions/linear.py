"""Z_q-linear MDS symbol-pair codes given by explicit standard-form generators."""

from ..alphabet import is_prime, make_ring
from ..classical import GeneratorMatrix
from ..errors import InvalidParameter


def _identity_row(i, k):
    return [1 if c == i else 0 for c in range(k)]


def linear_d4(q: int, n: int) -> GeneratorMatrix:
    """``(I_{n-2} | c1 c2)`` with ``c1[i] = i+1 mod q`` and ``c2 = 1``: an MDS (n, 4)_q code."""
    if n < 4:
        raise InvalidParameter(f"linear_d4 needs n >= 4, got {n}")
    k = n - 2
    rows = [_identity_row(i, k) + [(i + 1) % q, 1] for i in range(k)]
    return GeneratorMatrix(make_ring(q), rows)


def linear_dn(q: int, n: int) -> GeneratorMatrix:
    """Two alternating rows; odd n appends the column (1, 1).  An MDS (n, n)_q code."""
    if n < 2:
        raise InvalidParameter(f"linear_dn needs n >= 2, got {n}")
    even = n - (n % 2)
    rows = [[1 - (c % 2) for c in range(even)], [c % 2 for c in range(even)]]
    if n % 2:
        rows[0].append(1)
        rows[1].append(1)
    return GeneratorMatrix(make_ring(q), rows)


def linear_d5(q: int, n: int) -> GeneratorMatrix:
    """MDS (n, 5)_q code for an odd prime q and ``5 <= n <= 2q+3``.

    The three check columns are the weighted sum ``sum (i+1) u_i``, the plain
    sum and the alternating sum ``sum (-1)^i u_i`` of the message.
    """
    if q < 3 or not is_prime(q):
        raise InvalidParameter(f"linear_d5 needs an odd prime q, got {q}")
    if not 5 <= n <= 2 * q + 3:
        raise InvalidParameter(f"linear_d5 needs 5 <= n <= 2q+3 = {2 * q + 3}, got {n}")
    k = n - 3
    rows = [_identity_row(i, k) + [(i + 1) % q, 1, (-1) ** i % q] for i in range(k)]
    return GeneratorMatrix(make_ring(q), rows)


# (q, n, d) -> rows of a Z_q-linear MDS generator
TABLE1 = {
    (2, 6, 5): ["100101", "010110", "001111"],
    (2, 7, 6): ["1001011", "0101110", "0010111"],
    (2, 7, 5): ["1000101", "0100111", "0010110", "0001011"],
    (2, 8, 6): ["10001010", "01000101", "00101001", "00010111"],
    (2, 9, 7): ["100010110", "010001011", "001011010", "000111111"],
    (2, 10, 8): ["1000101011", "0100110110", "0010100101", "0001111111"],
    (3, 7, 6): ["1002211", "0100101", "0010112"],
    (3, 8, 7): ["10011120", "01001112", "00111201"],
    (3, 9, 7): ["100022101", "010020111", "001022002", "000110211"],
    (3, 10, 8): ["1000111220", "0100011112", "0010020122", "0001112212"],
    (5, 9, 7): ["100010101", "010001011", "001010203", "000101023"],
}


def table1_code(q: int, n: int, d: int) -> GeneratorMatrix:
    try:
        rows = TABLE1[(q, n, d)]
    except KeyError:
        raise InvalidParameter(f"(q, n, d) = ({q}, {n}, {d}) is not tabulated") from None
    return GeneratorMatrix(make_ring(q), [[int(c) for c in r] for r in rows])
