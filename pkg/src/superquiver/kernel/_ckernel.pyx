# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term arithmetic; same interface and semantics as pykernel.

Coefficients, masks and exponents stay Python ints (arbitrary precision);
the speedup comes from typed loops and direct tuple/dict C-API access.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM

NAME = "cython"


cpdef int merge_sign(object a, object b):
    cdef int sign = 1
    cdef object low
    while b:
        low = b & -b
        if ((a >> low.bit_length()).bit_count()) & 1:
            sign = -sign
        b ^= low
    return sign


cdef inline tuple tuple_add(tuple ea, tuple eb):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(ea)
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = (<object>PyTuple_GET_ITEM(ea, i)) + (<object>PyTuple_GET_ITEM(eb, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def copy_map(dict a):
    cdef dict out = {}
    cdef object mask, block
    for mask, block in a.items():
        out[mask] = dict(<dict>block)
    return out


def add_maps(dict a, dict b):
    cdef dict out = {}
    cdef dict dst
    cdef object mask, block, exp, c, ptr, nc
    for mask, block in a.items():
        out[mask] = dict(<dict>block)
    for mask, block in b.items():
        ptr = out.get(mask)
        if ptr is None:
            out[mask] = dict(<dict>block)
            continue
        dst = <dict>ptr
        for exp, c in (<dict>block).items():
            ptr = dst.get(exp)
            if ptr is None:
                dst[exp] = c
            else:
                nc = <object>ptr + c
                if nc:
                    dst[exp] = nc
                else:
                    del dst[exp]
        if not dst:
            del out[mask]
    return out


def neg_map(dict a):
    cdef dict out = {}
    cdef dict dst
    cdef object mask, block, exp, c
    for mask, block in a.items():
        dst = {}
        for exp, c in (<dict>block).items():
            dst[exp] = -c
        out[mask] = dst
    return out


def sub_maps(dict a, dict b):
    return add_maps(a, neg_map(b))


def scale_map(dict a, object k):
    cdef dict out = {}
    cdef dict dst
    cdef object mask, block, exp, c
    if not k:
        return out
    for mask, block in a.items():
        dst = {}
        for exp, c in (<dict>block).items():
            dst[exp] = k * c
        out[mask] = dst
    return out


def mul_maps(dict a, dict b):
    cdef dict out = {}
    cdef dict ta, tb, dst
    cdef object ma, mb, mc, ea, eb, ca, cb, nc, ptr
    cdef tuple e
    cdef int sign
    for ma, ta_obj in a.items():
        ta = <dict>ta_obj
        for mb, tb_obj in b.items():
            if ma & mb:
                continue
            tb = <dict>tb_obj
            sign = merge_sign(ma, mb)
            mc = ma | mb
            ptr = out.get(mc)
            if ptr is None:
                dst = {}
                out[mc] = dst
            else:
                dst = <dict>ptr
            for ea, ca in ta.items():
                if sign < 0:
                    ca = -ca
                for eb, cb in tb.items():
                    e = tuple_add(<tuple>ea, <tuple>eb)
                    ptr = dst.get(e)
                    if ptr is None:
                        nc = ca * cb
                        if nc:
                            dst[e] = nc
                    else:
                        nc = <object>ptr + ca * cb
                        if nc:
                            dst[e] = nc
                        else:
                            del dst[e]
    cdef dict cleaned = {}
    for ma, ta_obj in out.items():
        if <dict>ta_obj:
            cleaned[ma] = ta_obj
    return cleaned


def block_addmul(dict dst, dict ta, dict tb, object k):
    cdef object ea, eb, ca, cb, nc, ptr
    cdef tuple e
    for ea, ca in ta.items():
        ca = k * ca
        for eb, cb in tb.items():
            e = tuple_add(<tuple>ea, <tuple>eb)
            ptr = dst.get(e)
            if ptr is None:
                nc = ca * cb
                if nc:
                    dst[e] = nc
            else:
                nc = <object>ptr + ca * cb
                if nc:
                    dst[e] = nc
                else:
                    del dst[e]


cdef object _grlex_leader(dict block):
    cdef object best = None
    cdef object best_key = None
    cdef object e, key
    for e in block:
        key = (sum(<tuple>e), e)
        if best_key is None or key > best_key:
            best = e
            best_key = key
    return best


def exact_div_blocks(dict p, dict q):
    cdef dict ps = {}, qs = {}, quo = {}, rem
    cdef object e, c, lf, lq, cq, cf, t, eq, cq2, nc, ptr
    cdef Py_ssize_t n, i
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return {}
    for e in q:
        n = PyTuple_GET_SIZE(<tuple>e)
        break
    min_p = [min([(<tuple>e)[i] for e in p]) for i in range(n)]
    min_q = [min([(<tuple>e)[i] for e in q]) for i in range(n)]
    cdef tuple mp = tuple([-v for v in min_p])
    cdef tuple mq = tuple([-v for v in min_q])
    for e, c in p.items():
        ps[tuple_add(<tuple>e, mp)] = c
    for e, c in q.items():
        qs[tuple_add(<tuple>e, mq)] = c
    lq = _grlex_leader(qs)
    cq = qs[lq]
    cdef tuple neg_lq = tuple([-v for v in <tuple>lq])
    rem = dict(ps)
    while rem:
        lf = _grlex_leader(rem)
        t = tuple_add(<tuple>lf, neg_lq)
        for v in <tuple>t:
            if v < 0:
                return None
        cf = rem[lf]
        if cf % cq:
            return None
        c = cf // cq
        quo[t] = c
        for eq, cq2 in qs.items():
            e = tuple_add(<tuple>t, <tuple>eq)
            ptr = rem.get(e)
            if ptr is None:
                nc = -(c * cq2)
                if nc:
                    rem[e] = nc
            else:
                nc = <object>ptr - c * cq2
                if nc:
                    rem[e] = nc
                else:
                    del rem[e]
    cdef tuple shift = tuple([x - y for x, y in zip(min_p, min_q)])
    cdef dict out = {}
    for e, c in quo.items():
        out[tuple_add(<tuple>e, shift)] = c
    return out
