"""Pure-Python sparse multiplication kernels.

Same contract as the compiled `_kernels` extension; `kernels.py` picks
whichever is available.
"""


def mul_terms(a, b, modulus):
    """Multiply two term dicts {exponent-tuple: int}."""
    if len(a) > len(b):
        a, b = b, a
    acc = {}
    get = acc.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            acc[m] = get(m, 0) + ca * cb
            get = acc.get
    if modulus:
        return {m: c % modulus for m, c in acc.items() if c % modulus}
    return {m: c for m, c in acc.items() if c}


def mul_terms_bounded(a, b, modulus, indices, bound):
    """Multiply, discarding products whose total degree in the designated
    variable positions exceeds `bound`."""
    da = {m: sum(m[i] for i in indices) for m in a}
    db = {m: sum(m[i] for i in indices) for m in b}
    acc = {}
    get = acc.get
    for ma, ca in a.items():
        ra = bound - da[ma]
        for mb, cb in b.items():
            if db[mb] > ra:
                continue
            m = tuple(x + y for x, y in zip(ma, mb))
            acc[m] = get(m, 0) + ca * cb
            get = acc.get
    if modulus:
        return {m: c % modulus for m, c in acc.items() if c % modulus}
    return {m: c for m, c in acc.items() if c}
