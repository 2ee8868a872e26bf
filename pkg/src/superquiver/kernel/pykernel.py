"""Pure-Python term arithmetic for the super Laurent ring.

A polynomial is a two-level map ``{odd_mask: {xexp: coeff}}``: the outer key
is a bitmask over the odd generators (bit i-1 = generator i), the inner map
sends an integer exponent tuple (one slot per even generator, negative
exponents allowed) to a nonzero Python int.  Zero coefficients and empty
blocks are never stored.

The compiled backend (``_ckernel``) implements the same interface; ``NAME``
tells them apart.
"""

NAME = "python"


def merge_sign(a, b):
    """Sign of sorting the concatenation xi_a . xi_b into ascending order.

    Masks must be disjoint; the sign is the parity of the number of pairs
    (i in a, j in b) with i > j.
    """
    sign = 1
    while b:
        low = b & -b
        if (a >> low.bit_length()).bit_count() & 1:
            sign = -sign
        b ^= low
    return sign


def copy_map(a):
    return {mask: dict(block) for mask, block in a.items()}


def add_maps(a, b):
    out = {mask: dict(block) for mask, block in a.items()}
    for mask, block in b.items():
        dst = out.get(mask)
        if dst is None:
            out[mask] = dict(block)
            continue
        for exp, c in block.items():
            nc = dst.get(exp, 0) + c
            if nc:
                dst[exp] = nc
            else:
                del dst[exp]
        if not dst:
            del out[mask]
    return out


def neg_map(a):
    return {mask: {exp: -c for exp, c in block.items()} for mask, block in a.items()}


def sub_maps(a, b):
    return add_maps(a, neg_map(b))


def scale_map(a, k):
    if not k:
        return {}
    return {mask: {exp: k * c for exp, c in block.items()} for mask, block in a.items()}


def mul_maps(a, b):
    out = {}
    for ma, ta in a.items():
        for mb, tb in b.items():
            if ma & mb:
                continue
            sign = merge_sign(ma, mb)
            mc = ma | mb
            dst = out.get(mc)
            if dst is None:
                dst = out[mc] = {}
            for ea, ca in ta.items():
                if sign < 0:
                    ca = -ca
                for eb, cb in tb.items():
                    e = tuple(map(sum, zip(ea, eb)))
                    nc = dst.get(e, 0) + ca * cb
                    if nc:
                        dst[e] = nc
                    else:
                        del dst[e]
    return {mask: block for mask, block in out.items() if block}


def block_addmul(dst, ta, tb, k):
    """In place: dst += k * ta * tb over commuting exponent blocks."""
    for ea, ca in ta.items():
        ca = k * ca
        for eb, cb in tb.items():
            e = tuple(map(sum, zip(ea, eb)))
            nc = dst.get(e, 0) + ca * cb
            if nc:
                dst[e] = nc
            else:
                del dst[e]


def _grlex_leader(block):
    best = None
    best_key = None
    for e in block:
        key = (sum(e), e)
        if best_key is None or key > best_key:
            best, best_key = e, key
    return best


def exact_div_blocks(p, q):
    """Exact quotient of commutative Laurent blocks, or None.

    Both operands are ``{xexp: coeff}`` maps.  Monomial denominators are
    cleared by shifting to nonnegative exponents, then ordinary division by
    leading terms under graded lex; integer coefficient division must be
    exact at every step.
    """
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return {}
    n = len(next(iter(q)))
    min_p = [min(e[i] for e in p) for i in range(n)]
    min_q = [min(e[i] for e in q) for i in range(n)]
    ps = {tuple(x - y for x, y in zip(e, min_p)): c for e, c in p.items()}
    qs = {tuple(x - y for x, y in zip(e, min_q)): c for e, c in q.items()}
    lq = _grlex_leader(qs)
    cq = qs[lq]
    quo = {}
    rem = dict(ps)
    while rem:
        lf = _grlex_leader(rem)
        t = tuple(x - y for x, y in zip(lf, lq))
        if any(v < 0 for v in t):
            return None
        cf = rem[lf]
        if cf % cq:
            return None
        c = cf // cq
        quo[t] = c
        for eq, cq2 in qs.items():
            e = tuple(x + y for x, y in zip(t, eq))
            nc = rem.get(e, 0) - c * cq2
            if nc:
                rem[e] = nc
            else:
                del rem[e]
    shift = tuple(x - y for x, y in zip(min_p, min_q))
    return {tuple(x + y for x, y in zip(e, shift)): c for e, c in quo.items()}
