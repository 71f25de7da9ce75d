"""Exact polynomial gcd for the rational-function normalizer.

Strategy is content-primitive with a per-arity kernel:

* one variable: modular gcd (images mod large primes, CRT lift, verified by
  trial division) -- the workhorse, since multivariate cases reduce to it;
* two variables: Brown-style evaluation/interpolation with a leading
  coefficient correction and early-terminating Newton interpolation,
  verified by trial division;
* three or more variables: recursive subresultant pseudo-remainder
  sequences (these only arise for small symbolic-late inputs).

Every candidate gcd is verified by exact division before it is returned, so
unlucky primes or evaluation points cost retries, never wrong answers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .laurent import LaurentPoly, var_rank

# ---------------------------------------------------------------------------
# primes for modular images

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _prime(i: int) -> int:
    """The i-th prime of the modular-image sequence (large, fixed order)."""
    n = _PRIMES[-1] if _PRIMES else (1 << 61)
    while len(_PRIMES) <= i:
        n += 1
        while not _is_prime(n):
            n += 1
        _PRIMES.append(n)
    return _PRIMES[i]


# ---------------------------------------------------------------------------
# dense univariate integer polynomials as coefficient lists (ascending)


def _strip(f: list[int]) -> list[int]:
    while f and not f[-1]:
        f.pop()
    return f


def _deg(f: list[int]) -> int:
    return len(f) - 1


def _content(f: list[int]) -> int:
    c = 0
    for a in f:
        c = igcd(c, a)
        if c == 1:
            break
    return c


def _primitive(f: list[int]) -> list[int]:
    if not f:
        return f
    c = _content(f)
    if f[-1] < 0:
        c = -c
    return f if c == 1 else [a // c for a in f]


def _umul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip(out)


def _udiv_exact(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient f/g over Q if division is exact and integral, else None."""
    if not g:
        raise ZeroDivisionError
    f = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return None if _strip(f) else []
    lc = g[-1]
    q = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = f[k + len(g) - 1]
        if c % lc:
            return None
        c //= lc
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    return None if any(f[: len(g) - 1]) else _strip(q)


def _ueval(f: list[int], e: int) -> int:
    acc = 0
    for a in reversed(f):
        acc = acc * e + a
    return acc


def _gcd_mod_p(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd of the images of f, g in Z_p[x]."""
    a = _strip([c % p for c in f])
    b = _strip([c % p for c in g])
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        r = list(a)
        while len(r) - 1 >= db and r:
            coef = r[-1] * inv % p
            if coef:
                off = len(r) - 1 - db
                for j, x in enumerate(b):
                    r[off + j] = (r[off + j] - coef * x) % p
            r.pop()
            _strip(r)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _centered(c: int, m: int) -> int:
    c %= m
    return c - m if 2 * c > m else c


def gcd_univ_int(f: list[int], g: list[int]) -> list[int]:
    """Primitive positive-leading gcd in Z[x] of the primitive parts of f, g.

    Integer contents are deliberately ignored; callers track contents.
    """
    f = _primitive(_strip(list(f)))
    g = _primitive(_strip(list(g)))
    if not f:
        return g if g else []
    if not g:
        return f
    if len(f) == 1 or len(g) == 1:
        return [1]
    if f == g:
        return f
    gamma = igcd(f[-1], g[-1])
    best: list[int] | None = None
    modulus = 0
    prev_candidate: list[int] | None = None
    pi = 0
    for _ in range(80):
        p = _prime(pi)
        pi += 1
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = _gcd_mod_p(f, g, p)
        if len(hp) == 1:
            return [1]
        hp = [c * (gamma % p) % p for c in hp]
        if best is None or len(hp) < len(best):
            best = [_centered(c, p) for c in hp]
            modulus = p
            prev_candidate = None
        elif len(hp) > len(best):
            continue
        else:
            m_new = modulus * p
            inv = pow(modulus, p - 2, p)
            comb = []
            for c_old, c_new in zip(best, hp):
                d = (c_new - c_old) % p
                comb.append(_centered(c_old + modulus * (d * inv % p), m_new))
            best, modulus = comb, m_new
        candidate = _primitive(list(best))
        if candidate == prev_candidate or modulus > 4 * max(map(abs, candidate)) + 4:
            if _udiv_exact(f, candidate) is not None and _udiv_exact(g, candidate) is not None:
                return candidate
        prev_candidate = candidate
    # modular loop exhausted (essentially impossible); do it by brute PRS
    return _primitive(_gcd_prs_univ(f, g))


def _gcd_prs_univ(f: list[int], g: list[int]) -> list[int]:
    """Subresultant remainder sequence in Z[x]; fallback and test oracle."""
    if len(f) < len(g):
        f, g = g, f
    h, s = 1, 1
    while True:
        d = _deg(f) - _deg(g)
        # pseudo-remainder lc(g)^(d+1) * f mod g
        r = [c * g[-1] ** (d + 1) for c in f]
        for k in range(len(r) - len(g), -1, -1):
            c = r[k + len(g) - 1]
            if c % g[-1]:
                raise ArithmeticError("pseudo-remainder is not integral")
            c //= g[-1]
            if c:
                for j, b in enumerate(g):
                    r[k + j] -= c * b
        r = _strip(r[: len(g) - 1])
        if not r:
            return _primitive(g)
        denom = s * h ** d
        r = [c // denom for c in r]
        f, g = g, r
        s = f[-1]
        h = s ** d // h ** (d - 1) if d > 0 else h
        if _deg(g) == 0:
            return [1]


# ---------------------------------------------------------------------------
# LaurentPoly adapters


def _to_ulist(p: LaurentPoly) -> list[int]:
    if p.is_zero():
        return []
    if not p.vars:
        return [int(p.constant_value())]
    out = [0] * (p.degree_in(p.vars[0]) + 1)
    for (e,), c in p.terms.items():
        out[e] = int(c)
    return _strip(out)


def _from_ulist(f: list[int], var: str) -> LaurentPoly:
    return LaurentPoly((var,), {(e,): c for e, c in enumerate(f) if c})


def _to_bidict(p: LaurentPoly, x: str, y: str) -> dict[int, list[int]]:
    """dict: exponent of x -> integer coefficient list in y."""
    ix = p.vars.index(x) if x in p.vars else None
    iy = p.vars.index(y) if y in p.vars else None
    out: dict[int, list[int]] = {}
    for e, c in p.terms.items():
        kx = e[ix] if ix is not None else 0
        ky = e[iy] if iy is not None else 0
        lst = out.setdefault(kx, [])
        if len(lst) <= ky:
            lst.extend([0] * (ky + 1 - len(lst)))
        lst[ky] = int(c)
    return {k: v for k, v in ((k, _strip(v)) for k, v in out.items()) if v}


def _from_bidict(d: dict[int, list[int]], x: str, y: str) -> LaurentPoly:
    vs = tuple(sorted((x, y), key=var_rank))
    xi = vs.index(x)
    remap = {}
    for kx, ylist in d.items():
        for ky, c in enumerate(ylist):
            if c:
                remap[(kx, ky) if xi == 0 else (ky, kx)] = c
    return LaurentPoly(vs, remap)


# ---------------------------------------------------------------------------
# bivariate Brown gcd


def _bi_content(d: dict[int, list[int]]) -> list[int]:
    cont: list[int] = []
    for lst in d.values():
        cont = gcd_univ_int(cont, lst) if cont else _primitive(list(lst))
        if cont == [1]:
            break
    return cont


def _bi_divide_content(d: dict[int, list[int]], cont: list[int]) -> dict[int, list[int]]:
    if cont == [1]:
        return d
    out = {}
    for k, lst in d.items():
        q = _udiv_exact(lst, cont)
        if q is None:
            raise ArithmeticError("content division failed")
        out[k] = q
    return out


def _gcd_bivariate(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd of honest integer polynomials in exactly two variables."""
    v1, v2 = a.vars  # == b.vars
    # interpolate the variable with the smaller shared degree: fewer points
    if min(a.degree_in(v1), b.degree_in(v1)) < min(a.degree_in(v2), b.degree_in(v2)):
        x, y = v2, v1
    else:
        x, y = v1, v2
    fa = _to_bidict(a, x, y)
    fb = _to_bidict(b, x, y)
    cont_a = _bi_content(fa)
    cont_b = _bi_content(fb)
    ppa = _bi_divide_content(fa, cont_a)
    ppb = _bi_divide_content(fb, cont_b)
    cgcd = gcd_univ_int(cont_a, cont_b)
    cgcd_poly = _from_ulist(cgcd, y)

    dxa, dxb = max(ppa), max(ppb)
    gamma = gcd_univ_int(ppa[dxa], ppb[dxb])
    bound = min(max(len(l) for l in ppa.values()), max(len(l) for l in ppb.values())) + len(gamma) + 1

    for attempt in range(6):
        res = _brown_pass(ppa, ppb, gamma, bound, offset=attempt * (bound + 3))
        if res is not None:
            if res == {0: [1]}:
                return cgcd_poly
            return cgcd_poly * _from_bidict(res, x, y)
    raise ArithmeticError("bivariate gcd interpolation failed to converge")


def _brown_pass(ppa, ppb, gamma, bound, offset):
    dxa, dxb = max(ppa), max(ppb)
    points: list[int] = []
    newton: list[list[Fraction]] = []  # divided-difference layers, coeff lists in x
    min_deg: int | None = None
    zero_layers = 0
    e = offset
    tried = 0
    while tried < 3 * bound + 20:
        e += 1
        tried += 1
        if not _ueval(ppa[dxa], e) or not _ueval(ppb[dxb], e):
            continue
        fe = _eval_bidict(ppa, e)
        ge = _eval_bidict(ppb, e)
        im = gcd_univ_int(fe, ge)
        if len(im) == 1:
            return {0: [1]}
        if min_deg is None or len(im) < min_deg:
            min_deg = len(im)
            points, newton, zero_layers = [], [], 0
        elif len(im) > min_deg:
            continue
        ge_val = Fraction(_ueval(gamma, e))
        lc = im[-1]
        he = [Fraction(c) * ge_val / lc for c in im]
        layer = _newton_add(newton, points, e, he)
        points.append(e)
        zero_layers = zero_layers + 1 if not any(layer) else 0
        if zero_layers >= 1 and len(points) >= 2:
            cand = _bi_primitive(_newton_expand(newton, points))
            if cand is not None:
                # interpolation reconstructs gamma * gcd / lc(gcd); strip the
                # leftover content in the interpolation variable
                cand = _bi_divide_content(cand, _bi_content(cand))
                if _bi_divides(cand, ppa) and _bi_divides(cand, ppb):
                    return cand
        if len(points) > bound + 2:
            return None
    return None


def _eval_bidict(pp: dict[int, list[int]], e: int) -> list[int]:
    out = [0] * (max(pp) + 1)
    for k, lst in pp.items():
        out[k] = _ueval(lst, e)
    return _strip(out)


def _newton_add(newton: list[list[Fraction]], points: list[int], e: int, value: list[Fraction]) -> list[Fraction]:
    """Add one interpolation point in Newton form; returns the new top layer."""
    acc = list(value)
    prod = 1
    for pt, layer in zip(points, newton):
        n = max(len(acc), len(layer))
        acc += [Fraction(0)] * (n - len(acc))
        for i, c in enumerate(layer):
            acc[i] -= c * prod
        prod *= e - pt
    layer = [c / prod for c in acc]
    while layer and not layer[-1]:
        layer.pop()
    newton.append(layer)
    return layer


def _newton_expand(newton: list[list[Fraction]], points: list[int]) -> dict[int, list[Fraction]]:
    """Expand Newton form to a dict: x-exponent -> y-coefficient list (Fractions)."""
    # polynomial in y with coefficients "lists in x"; build sum of layer * prod(y - e_i)
    ybasis: list[list[Fraction]] = [[Fraction(1)]]  # prod_{i<j} (y - e_i) as y-lists
    for e in points[:-1]:
        prev = ybasis[-1]
        nxt = [Fraction(0)] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i + 1] += c
            nxt[i] -= c * e
        ybasis.append(nxt)
    out: dict[int, list[Fraction]] = {}
    for layer, ypoly in zip(newton, ybasis):
        for kx, cx in enumerate(layer):
            if not cx:
                continue
            dst = out.setdefault(kx, [])
            if len(dst) < len(ypoly):
                dst.extend([Fraction(0)] * (len(ypoly) - len(dst)))
            for ky, cy in enumerate(ypoly):
                if cy:
                    dst[ky] += cx * cy
    return out


def _bi_primitive(d: dict[int, list[Fraction]]) -> dict[int, list[int]] | None:
    """Clear denominators and divide by integer content; None for zero."""
    den = 1
    for lst in d.values():
        for c in lst:
            den = den * c.denominator // igcd(den, c.denominator)
    out: dict[int, list[int]] = {}
    cont = 0
    for k, lst in d.items():
        ints = [int(c * den) for c in lst]
        if any(ints):
            out[k] = ints
            for c in ints:
                cont = igcd(cont, c)
    if not out:
        return None
    lead = _strip(list(out[max(out)]))
    if lead[-1] < 0:
        cont = -cont
    return {k: _strip([c // cont for c in lst]) for k, lst in out.items()}


def _bi_divides(cand: dict[int, list[int]], target: dict[int, list[int]]) -> bool:
    """Exact-division check in Z[x][y] via dense recursive division."""
    rem = {k: list(v) for k, v in target.items()}
    dx = max(cand)
    lc = cand[dx]
    while rem:
        kx = max(rem)
        if kx < dx:
            return False
        q = _udiv_exact(rem[kx], lc)
        if q is None:
            return False
        for k, lst in cand.items():
            tgt = rem.setdefault(kx - dx + k, [])
            prod = _umul(lst, q)
            if len(tgt) < len(prod):
                tgt.extend([0] * (len(prod) - len(tgt)))
            for i, c in enumerate(prod):
                tgt[i] -= c
        rem = {k: v for k, v in ((k, _strip(v)) for k, v in rem.items()) if v}
    return True


# ---------------------------------------------------------------------------
# many variables: subresultant PRS on LaurentPoly coefficients


def _content_wrt(p: LaurentPoly, var: str) -> LaurentPoly:
    """Gcd of the coefficient polynomials of p viewed in `var`."""
    acc: LaurentPoly | None = None
    for coeff in p.exponents_of(var).values():
        acc = coeff.content_primitive()[1] if acc is None else poly_gcd(acc, coeff)
        if acc.is_one():
            return acc
    return acc if acc is not None else LaurentPoly.zero()


def _gcd_prs_multi(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive PRS gcd for three or more shared variables."""
    x = a.vars[0]
    cont_a = _content_wrt(a, x)
    cont_b = _content_wrt(b, x)
    f = a.exact_div(cont_a) if not cont_a.is_one() else a
    g = b.exact_div(cont_b) if not cont_b.is_one() else b
    cont = poly_gcd(cont_a, cont_b)
    if f.degree_in(x) < g.degree_in(x):
        f, g = g, f
    while True:
        r = _pseudo_rem(f, g, x)
        if r.is_zero():
            gg = g.exact_div(_content_wrt(g, x))
            break
        if r.degree_in(x) == 0:
            gg = LaurentPoly.one()
            break
        f, g = g, r.exact_div(_content_wrt(r, x)).content_primitive()[1]
    _, prim = (cont * gg).content_primitive()
    return prim


def _pseudo_rem(f: LaurentPoly, g: LaurentPoly, x: str) -> LaurentPoly:
    df, dg = f.degree_in(x), g.degree_in(x)
    lc_g = g.exponents_of(x)[dg]
    r = f * lc_g ** (df - dg + 1)
    xv = LaurentPoly.var(x)
    while not r.is_zero() and r.degree_in(x) >= dg:
        dr = r.degree_in(x)
        lc_r = r.exponents_of(x)[dr]
        r = r - g * lc_r.exact_div(lc_g) * xv ** (dr - dg)
    return r


# ---------------------------------------------------------------------------
# entry point


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of two Laurent polynomials, up to rational content.

    The result is integer-primitive with positive leading coefficient
    (graded lex).  Its monomial part carries exponent min(min_a, min_b) per
    variable, which is the honest-polynomial gcd convention; for inputs with
    min exponent 0 (the rational-function normalizer's case) the result has
    no monomial factor.  gcd(0, b) is the primitive part of b.
    """
    if a.is_zero():
        return b.content_primitive()[1] if not b.is_zero() else LaurentPoly.zero()
    if b.is_zero():
        return a.content_primitive()[1]
    mono_a, pa = a.monomial_shift()
    mono_b, pb = b.monomial_shift()
    mono_g = {}
    for v in set(mono_a) | set(mono_b):
        e = min(mono_a.get(v, 0), mono_b.get(v, 0))
        if e:
            mono_g[v] = e
    core = _gcd_core(pa.content_primitive()[1], pb.content_primitive()[1])
    core = core.content_primitive()[1]
    return core.shift_by(mono_g) if mono_g else core


def _gcd_core(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of honest, integer-primitive, monomial-free polynomials."""
    if a.is_constant() or b.is_constant():
        return LaurentPoly.one()
    if a.vars == b.vars and a.terms == b.terms:
        return a
    # a variable present in only one argument can only contribute through
    # the content of that argument
    while set(a.vars) != set(b.vars):
        only_a = set(a.vars) - set(b.vars)
        if only_a:
            a = _content_wrt(a, next(iter(sorted(only_a))))
        else:
            only_b = set(b.vars) - set(a.vars)
            b = _content_wrt(b, next(iter(sorted(only_b))))
        if a.is_constant() or b.is_constant():
            return LaurentPoly.one()
    n = len(a.vars)
    if n == 1:
        h = gcd_univ_int(_to_ulist(a), _to_ulist(b))
        return _from_ulist(h, a.vars[0])
    if n == 2:
        return _gcd_bivariate(a, b)
    return _gcd_prs_multi(a, b)
