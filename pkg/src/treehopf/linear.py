"""Exact linear algebra: formal rational combinations and a dense kernel engine.

A :class:`LinComb` is a finite formal linear combination over any hashable
basis (trees, forests, or tuples of those for tensor values), with
``fractions.Fraction`` coefficients.  Zero coefficients are never stored.

The text form of a combination is ``c*T`` terms joined by `` + `` / `` - ``,
with ``c`` an integer or ``p/q`` and ``c*`` omitted when c = 1; tensor terms
are written ``T (x) S`` (or ``T (x) S (x) R``).  Printing uses the canonical
basis order, and parsing round-trips.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .trees import Forest, ParseError, _Scanner, format_forest, format_tree


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be an int or Fraction, got %r" % (c,))


class UnitTermError(ValueError):
    pass


class InternalInconsistencyError(RuntimeError):
    pass


def _basis_key(b):
    if isinstance(b, tuple):
        return tuple(_basis_key(x) for x in b)
    return b.sort_key()


class LinComb:
    """Formal rational-linear combination of hashable basis elements."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for b, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _coerce(c)
                if c:
                    acc = self.terms.get(b, Fraction(0)) + c
                    if acc:
                        self.terms[b] = acc
                    else:
                        self.terms.pop(b, None)

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def of(cls, basis, coeff=1) -> "LinComb":
        return cls({basis: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, basis) -> Fraction:
        return self.terms.get(basis, Fraction(0))

    def items(self):
        return self.terms.items()

    def support(self):
        return self.terms.keys()

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for b, c in other.terms.items():
            acc = out.get(b, Fraction(0)) + c
            if acc:
                out[b] = acc
            else:
                out.pop(b, None)
        r = LinComb()
        r.terms = out
        return r

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, scalar) -> "LinComb":
        c = _coerce(scalar)
        r = LinComb()
        if c:
            r.terms = {b: c * v for b, v in self.terms.items()}
        return r

    def __mul__(self, scalar) -> "LinComb":
        return self.__rmul__(scalar)

    def __truediv__(self, scalar) -> "LinComb":
        return self.__rmul__(Fraction(1) / _coerce(scalar))

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_basis(self, fn) -> "LinComb":
        """Linear extension of a basis map; fn returns a basis element or a LinComb."""
        out = LinComb()
        acc = out.terms
        for b, c in self.terms.items():
            img = fn(b)
            if isinstance(img, LinComb):
                for b2, c2 in img.terms.items():
                    v = acc.get(b2, Fraction(0)) + c * c2
                    if v:
                        acc[b2] = v
                    else:
                        acc.pop(b2, None)
            else:
                v = acc.get(img, Fraction(0)) + c
                if v:
                    acc[img] = v
                else:
                    acc.pop(img, None)
        return out

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda bc: _basis_key(bc[0]))

    def __repr__(self):
        return format_poly(self)


def poly(pairs) -> LinComb:
    """Combination from (basis, coefficient) pairs."""
    return LinComb(pairs)


def tensor(*factors: LinComb) -> LinComb:
    """Tensor product; keys become flat tuples of the factors' keys."""
    out = LinComb.of(())
    for f in factors:
        nxt = LinComb()
        acc = nxt.terms
        for key, c in out.terms.items():
            for b, c2 in f.terms.items():
                tail = b if isinstance(b, tuple) else (b,)
                v = acc.get(key + tail, Fraction(0)) + c * c2
                if v:
                    acc[key + tail] = v
        out = nxt
    return out


def apply_leg(tp: LinComb, leg: int, fn) -> LinComb:
    """Apply a linear map to one tensor leg; tuple-valued images are spliced in."""
    out = LinComb()
    acc = out.terms
    for key, c in tp.terms.items():
        img = fn(key[leg])
        img = img if isinstance(img, LinComb) else LinComb.of(img)
        for b, c2 in img.terms.items():
            tail = b if isinstance(b, tuple) else (b,)
            nk = key[:leg] + tail + key[leg + 1:]
            v = acc.get(nk, Fraction(0)) + c * c2
            if v:
                acc[nk] = v
            else:
                acc.pop(nk, None)
    return out


def swap_tensor(tp: LinComb) -> LinComb:
    return LinComb({key[::-1]: c for key, c in tp.terms.items()})


def pairing(f: LinComb, g: LinComb) -> Fraction:
    """Bilinear form making the monomial basis orthonormal."""
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    acc = Fraction(0)
    for b, c in small.terms.items():
        acc += c * big.terms.get(b, Fraction(0))
    return acc


# -- text form ---------------------------------------------------------------

def _format_basis(b) -> str:
    if isinstance(b, tuple):
        return " (x) ".join(_format_basis(x) for x in b)
    if isinstance(b, Forest):
        return format_forest(b)
    return format_tree(b)


def format_poly(p: LinComb) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for b, c in p.sorted_items():
        mag = c if c > 0 else -c
        body = _format_basis(b) if mag == 1 else "%s*%s" % (_format_coeff(mag), _format_basis(b))
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def parse_poly(text: str) -> LinComb:
    """Parse the polynomial text form; bases may be trees, forests, or tensors."""
    if text.strip() == "0":
        return LinComb()
    sc = _Scanner(text)
    terms = []
    sign = 1
    if sc.peek() == "-":
        sc.pos += 1
        sign = -1
    elif sc.peek() == "+":
        sc.pos += 1
    while True:
        terms.append(_parse_term(sc, sign))
        nxt = sc.peek()
        if nxt == "+":
            sign = 1
        elif nxt == "-":
            sign = -1
        elif nxt == "":
            break
        else:
            sc.fail("'+', '-' or end of input")
        sc.pos += 1
    return LinComb(terms)


def _parse_term(sc: _Scanner, sign: int):
    coeff = Fraction(sign)
    ch = sc.peek()
    if ch.isdigit():
        save = sc.pos
        num = _parse_int(sc)
        if sc.peek() == "/":
            sc.pos += 1
            den = _parse_int(sc)
            if den == 0:
                raise ParseError("zero denominator", sc.pos)
            coeff *= Fraction(num, den)
            sc.expect("*")
        elif sc.peek() == "*":
            sc.pos += 1
            coeff *= num
        else:
            # a bare "1": the unit monomial (empty tree)
            if num == 1:
                sc.pos = save
            else:
                raise ParseError("expected '*' after coefficient", sc.pos)
    basis = _parse_basis(sc)
    legs = [basis]
    while _at_tensor_sep(sc):
        sc.pos += 3
        legs.append(_parse_basis(sc))
    return (tuple(legs) if len(legs) > 1 else legs[0], coeff)


def _parse_int(sc: _Scanner) -> int:
    sc.skip_ws()
    start = sc.pos
    while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        sc.pos += 1
    if sc.pos == start:
        sc.fail("an integer")
    return int(sc.text[start:sc.pos])


def _at_tensor_sep(sc: _Scanner) -> bool:
    sc.skip_ws()
    return sc.text[sc.pos:sc.pos + 3] == "(x)"


def _parse_basis(sc: _Scanner):
    if sc.peek() == "[":
        return Forest(sc.forest())
    return sc.tree()


# -- exact dense matrices ----------------------------------------------------

class RationalMatrix:
    """Dense exact matrix; rows of Fractions (or ints, which stay exact)."""

    def __init__(self, rows, ncols=None):
        self.rows = [list(r) for r in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")

    @property
    def nrows(self):
        return len(self.rows)


def _int_rows(rows):
    out = []
    for r in rows:
        lcm = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        if lcm == 1:
            out.append([int(x) for x in r])
        else:
            out.append([int(x * lcm) for x in r])
    return out


def _normalize_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, abs(x))
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    return row


def _echelon(rows, ncols, full: bool):
    """Integer fraction-free elimination with first-nonzero pivoting.

    Returns (pivot column list, echelon rows); with ``full`` the rows are
    fully reduced (zero above pivots as well).
    """
    rows = [_normalize_row(r) for r in _int_rows(rows) if any(r)]
    pivots = []
    nexti = 0
    for col in range(ncols):
        pr = None
        for i in range(nexti, len(rows)):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[nexti], rows[pr] = rows[pr], rows[nexti]
        prow = rows[nexti]
        p = prow[col]
        lo = 0 if full else nexti + 1
        for i in range(lo, len(rows)):
            if i == nexti:
                continue
            a = rows[i][col]
            if a:
                ri = rows[i]
                rows[i] = _normalize_row([x * p - y * a for x, y in zip(ri, prow)])
        pivots.append(col)
        nexti += 1
        if nexti == len(rows):
            break
    rows = [r for r in rows if any(r)]
    return pivots, rows


def rank(m: RationalMatrix) -> int:
    pivots, _ = _echelon(m.rows, m.ncols, full=False)
    return len(pivots)


def kernel_basis(m: RationalMatrix):
    """Exact null-space basis as primitive integer vectors, deterministic."""
    pivots, rows = _echelon(m.rows, m.ncols, full=True)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.ncols
        v[fc] = Fraction(1)
        for prow, pc in zip(rows, pivots):
            if prow[fc]:
                v[pc] = Fraction(-prow[fc], prow[pc])
        lcm = 1
        for x in v:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        iv = [int(x * lcm) for x in v]
        basis.append(_normalize_row(iv))
    return basis


def solve_exact(m: RationalMatrix, rhs):
    """Any exact solution of m x = rhs, or None when the system is inconsistent."""
    aug = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    pivots, rows = _echelon(aug, m.ncols + 1, full=True)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for prow, pc in zip(rows, pivots):
        x[pc] = Fraction(prow[m.ncols], prow[pc])
    return x


def matrix_from_columns(columns, coords) -> RationalMatrix:
    """Matrix whose j-th column is the coordinate vector of columns[j].

    ``coords`` maps a LinComb to a fixed coordinate system: it is a dict
    basis -> row index; rows are emitted for exactly those indices.
    """
    nrows = len(coords)
    rows = [[Fraction(0)] * len(columns) for _ in range(nrows)]
    for j, p in enumerate(columns):
        for b, c in p.terms.items():
            i = coords.get(b)
            if i is None:
                raise InternalInconsistencyError("value outside the coordinate system: %r" % (b,))
            rows[i][j] = c
    return RationalMatrix(rows, len(columns))


def coordinates(basis_list) -> dict:
    return {b: i for i, b in enumerate(basis_list)}
