"""Parameter-driven choice of a construction route for an MDS (n, d)_q pair code."""

from __future__ import annotations

from ..alphabet import field_of_order, is_prime, make_ring, prime_power
from ..classical import SPAN_LIMIT, parity_check, reed_solomon, triply_extended_rs
from ..errors import (InvalidParameter, Nonexistent, NotConstructible, Unsupported,
                      VerificationFailed)
from ..pairmetric import DEFAULT_BUDGET, Code, singleton_bound, verify_code, whole_space
from .development import develop, dev_8_7_2p
from .extension import embed_classical, interleave, mds_nm1, mds_nm2
from .linear import TABLE1, linear_d4, linear_d5, linear_dn, table1_code
from .product import product


def _span(g, route, **params):
    return g.span({"route": route, **params})


def _whole_space(n, d, q):
    if d == 2:
        return whole_space(make_ring(q), n)


def _parity_embed(n, d, q):
    if d == 3:
        return embed_classical(_span(parity_check(make_ring(q), n), "parity-check", q=q, n=n))


def _linear_d4(n, d, q):
    if d == 4:
        return _span(linear_d4(q, n), "linear-d4", q=q, n=n).with_claim(4)


def _linear_dn(n, d, q):
    if d == n:
        return _span(linear_dn(q, n), "linear-dn", q=q, n=n).with_claim(n)


def _table1(n, d, q):
    if (q, n, d) in TABLE1:
        return _span(table1_code(q, n, d), "table1", q=q, n=n, d=d).with_claim(d)


def _linear_d5(n, d, q):
    if d == 5 and q > 2 and is_prime(q) and n <= 2 * q + 3:
        return _span(linear_d5(q, n), "linear-d5", q=q, n=n).with_claim(5)


def _development(n, d, q):
    if (n, d) == (8, 7) and q % 2 == 0 and q > 4 and is_prime(q // 2):
        return develop(dev_8_7_2p(q // 2))


def _nm1(n, d, q):
    if d == n - 1 and prime_power(q):
        try:
            return mds_nm1(q, n)
        except Unsupported:
            return None


def _nm2(n, d, q):
    if d == n - 2 and prime_power(q):
        try:
            return mds_nm2(q, n)
        except Unsupported:
            return None


def _classical_mds_generator(q, n, k):
    """A standard-form [n, k] MDS generator over GF(q) from the Reed-Solomon family, or None."""
    if not prime_power(q) or not 1 <= k <= n:
        return None
    field = field_of_order(q)
    if n <= q + 1:
        return reed_solomon(field, n, k), "reed-solomon"
    if field.p == 2 and n == q + 2 and k in (3, q - 1):
        return triply_extended_rs(field, k), "triply-extended-rs"
    return None


def _interleave_rs(n, d, q):
    if n % 2 or d % 2:
        return None
    h, dh = n // 2, d // 2
    found = _classical_mds_generator(q, h, h - dh + 1)
    if found:
        g, name = found
        c = _span(g, name, q=q, n=h, k=h - dh + 1)
        return interleave(c, c)


def _rs_embed(n, d, q):
    found = _classical_mds_generator(q, n, n - d + 2)
    if found:
        g, name = found
        return embed_classical(_span(g, name, q=q, n=n, k=n - d + 2))


def _product(n, d, q):
    for a in range(2, int(q**0.5) + 1):
        if q % a:
            continue
        try:
            left, right = _build(n, d, a), _build(n, d, q // a)
        except NotConstructible:
            continue
        return product(left, right)


ROUTES = {
    "whole-space": _whole_space,
    "parity-embed": _parity_embed,
    "linear-d4": _linear_d4,
    "linear-dn": _linear_dn,
    "table1": _table1,
    "linear-d5": _linear_d5,
    "development": _development,
    "mds-nm1": _nm1,
    "interleave-rs": _interleave_rs,
    "mds-nm2": _nm2,
    "rs-embed": _rs_embed,
    "product": _product,
}


def _check_parameters(n, d, q):
    if not (isinstance(n, int) and isinstance(d, int) and isinstance(q, int)):
        raise InvalidParameter("n, d and q must be integers")
    if n < 2 or not 2 <= d <= n or q < 2:
        raise InvalidParameter(f"need n >= 2, 2 <= d <= n, q >= 2; got n={n}, d={d}, q={q}")
    if (n, d, q) == (8, 7, 2):
        raise Nonexistent("nonexistent: q(8,7)=3", reason="an (8,7)_2 pair code has at most 7 words")
    try:
        size = singleton_bound(n, d, q)
    except OverflowError:
        size = None
    if size is None or size * n > SPAN_LIMIT:
        raise Unsupported(f"an MDS ({n},{d})_{q} code has q^{n - d + 2} words; too many to build",
                          reason="too large to materialise")


def _build(n, d, q, method=None) -> Code:
    _check_parameters(n, d, q)
    if method is not None:
        if method not in ROUTES:
            raise InvalidParameter(f"unknown method {method!r}; choose from {', '.join(ROUTES)}")
        routes = [method]
    else:
        routes = list(ROUTES)
    for name in routes:
        code = ROUTES[name](n, d, q)
        if code is not None:
            if code.claimed_d != d or code.n != n:
                raise AssertionError(f"route {name} produced ({code.n},{code.claimed_d})")
            code.provenance.setdefault("method", name)
            return code
    which = f"method {method!r}" if method else "no construction route"
    raise Unsupported(f"{which} covers an MDS ({n},{d})_{q} pair code",
                      reason="no route")


def construct(n: int, d: int, q: int, method: str | None = None,
              budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Code:
    """Build an MDS (n, d)_q pair code and brute-force check it when the budget allows.

    Raises Nonexistent for (8, 7)_2 and Unsupported when no route applies.
    A code whose check fails raises VerificationFailed.  Codes too large for
    the budget are returned with ``verification.verified`` false.
    """
    code = _build(n, d, q, method)
    v = verify_code(code, budget=budget, jobs=jobs)
    code.verification = v
    if v.verified and not (v.mds and v.d == d):
        raise VerificationFailed(f"route {code.provenance.get('method')} gave d={v.d}, "
                                 f"size={v.size}, bound={v.bound}", code)
    return code
