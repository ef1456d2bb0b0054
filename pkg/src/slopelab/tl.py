"""Exact skein evaluation in the Temperley-Lieb algebra.

Elements live on a disk with boundary points numbered counterclockwise:
for an element with a inputs and b outputs, points 0..a-1 run left to
right along the bottom and points a..a+b-1 right to left along the top.
A planar matching is stored as a partner tuple (partner[i] = j).  An
element is a dict from matchings to Laurent-polynomial coefficients; a
closed loop created while gluing contributes the loop value
delta = -v^-2 - v^2.

Tangles are evaluated in the same boxed form the diagram builder uses:
a crossing box is a width-2n braid block crossing two n-strand bundles,
attached eastward for horizontal runs and southward for vertical ones.
The crossing smoothing weights are fixed by the same chirality
constants as the diagrams (see ``KAPPA`` and the tests).
"""
from __future__ import annotations

from functools import lru_cache

from .diagrams import build_standard_diagram, over_diagonal, twist_runs, writhe
from .errors import ColorTooLarge, InadmissibleTriple
from .laurent import LaurentPoly

# Smoothing weight of a crossing whose over strand runs along the
# NW-SE diagonal (over_diagonal == 0): v^KAPPA on the through-going
# smoothing, v^-KAPPA on the turn-back smoothing.  The opposite
# diagonal swaps the weights.  Pinned by the bracket of the
# three-crossing reference diagram; see the tests.
KAPPA = -1

DEFAULT_COLOR_CAP = 4

PlanarMatching = tuple  # partner tuple: PlanarMatching[i] == j iff i -- j

LOOP = LaurentPoly({-2: -1, 2: -1})


def _matching(pairs, size) -> PlanarMatching:
    partner = [-1] * size
    for i, j in pairs:
        assert partner[i] == -1 and partner[j] == -1
        partner[i] = j
        partner[j] = i
    assert all(p >= 0 for p in partner)
    return tuple(partner)


def is_noncrossing(m: PlanarMatching) -> bool:
    n = len(m)
    for i in range(n):
        j = m[i]
        if i >= j:
            continue
        for k in range(i + 1, j):
            if not i < m[k] < j:
                return False
    return True


class TLElement:
    """Formal sum of planar matchings on a fixed (a, b) frame."""

    __slots__ = ("a", "b", "terms")

    def __init__(self, a: int, b: int, terms=None):
        self.a = a
        self.b = b
        self.terms = dict(terms or {})

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        size = 2 * n
        m = _matching([(i, size - 1 - i) for i in range(n)], size)
        return cls(n, n, {m: LaurentPoly.one()})

    @classmethod
    def cup_generator(cls, n: int, i: int) -> "TLElement":
        """e_i: turn-back at bottom strands i-1, i (1-based i < n)."""
        size = 2 * n
        pairs = [(i - 1, i), (size - 1 - i, size - i)]
        pairs += [(j, size - 1 - j) for j in range(n) if j not in (i - 1, i)]
        return cls(n, n, {_matching(pairs, size): LaurentPoly.one()})

    def scale(self, poly) -> "TLElement":
        if isinstance(poly, int):
            poly = LaurentPoly({0: poly})
        return TLElement(
            self.a, self.b, {m: c * poly for m, c in self.terms.items() if c * poly}
        )

    def __add__(self, other) -> "TLElement":
        assert (self.a, self.b) == (other.a, other.b)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, LaurentPoly.zero()) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return TLElement(self.a, self.b, terms)

    def __sub__(self, other) -> "TLElement":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.a, self.b) == (other.a, other.b) and self.terms == other.terms

    def __repr__(self):
        return f"TLElement({self.a},{self.b},{len(self.terms)} terms)"


def _glue_matchings(mx, my, glue_x_to_y):
    """Glue two matchings along glue_x_to_y: {x point: y point}.

    Returns (pairs, loops) where pairs chain the surviving points,
    tagged ("x", i) or ("y", j).
    """
    glue_y_to_x = {j: i for i, j in glue_x_to_y.items()}
    visited = set()
    pairs = []

    def free_points():
        for i in range(len(mx)):
            if i not in glue_x_to_y:
                yield ("x", i)
        for j in range(len(my)):
            if j not in glue_y_to_x:
                yield ("y", j)

    def step(node):
        # follow the matching edge, then hop across the gluing if possible
        side, k = node
        k = (mx if side == "x" else my)[k]
        visited.add((side, k))
        if side == "x" and k in glue_x_to_y:
            nxt = ("y", glue_x_to_y[k])
            visited.add(nxt)
            return nxt, False
        if side == "y" and k in glue_y_to_x:
            nxt = ("x", glue_y_to_x[k])
            visited.add(nxt)
            return nxt, False
        return (side, k), True

    for start in free_points():
        if start in visited:
            continue
        visited.add(start)
        node = start
        while True:
            node, done = step(node)
            if done:
                break
        pairs.append((start, node))

    loops = 0
    for side, k in [("x", i) for i in glue_x_to_y] + [("y", j) for j in glue_y_to_x]:
        if (side, k) in visited:
            continue
        loops += 1
        node = (side, k)
        visited.add(node)
        while True:
            node, done = step(node)
            assert not done, "loop walk escaped"
            if node == (side, k):
                break
    return pairs, loops


def _glue_elements(x: TLElement, y: TLElement, glue_x_to_y, relabel, arity):
    """Generic planar gluing of two elements.

    relabel maps tagged surviving points to result labels; arity is the
    resulting (a, b).
    """
    size = sum(1 for _ in relabel)
    out = {}
    cache = {}
    for my, cy in y.terms.items():
        for mx, cx in x.terms.items():
            key = (mx, my)
            if key not in cache:
                raw_pairs, loops = _glue_matchings(mx, my, glue_x_to_y)
                m = _matching(
                    [(relabel[u], relabel[w]) for u, w in raw_pairs], size
                )
                cache[key] = (m, loops)
            m, loops = cache[key]
            c = cx * cy
            if loops:
                c = c * LOOP**loops
            s = out.get(m, LaurentPoly.zero()) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return TLElement(arity[0], arity[1], out)


def tl_multiply(x: TLElement, y: TLElement) -> TLElement:
    """Stack y on top of x (compose x then y)."""
    assert x.b == y.a, f"arity mismatch: {x.b} outputs into {y.a} inputs"
    glue = {x.a + t: x.b - 1 - t for t in range(x.b)}
    relabel = {("x", i): i for i in range(x.a)}
    relabel.update({("y", y.a + u): x.a + u for u in range(y.b)})
    return _glue_elements(x, y, glue, relabel, (x.a, y.b))


def tensor(x: TLElement, y: TLElement) -> TLElement:
    """Place y to the right of x."""
    out = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            relabel = {}
            for i in range(x.a):
                relabel[("x", i)] = i
            for t in range(x.b):
                relabel[("x", x.a + t)] = x.a + y.a + y.b + t
            for j in range(y.a):
                relabel[("y", j)] = x.a + j
            for u in range(y.b):
                relabel[("y", y.a + u)] = x.a + y.a + u
            pairs = []
            for src, m in (("x", mx), ("y", my)):
                for i, j in enumerate(m):
                    if i < j:
                        pairs.append((relabel[(src, i)], relabel[(src, j)]))
            mm = _matching(pairs, x.a + x.b + y.a + y.b)
            c = cx * cy
            s = out.get(mm, LaurentPoly.zero()) + c
            if s:
                out[mm] = s
    return TLElement(x.a + y.a, x.b + y.b, out)


def rotate(x: TLElement, k: int) -> TLElement:
    """Rotate the disk by k boundary points (labels move up by k)."""
    size = x.a + x.b
    out = {}
    for m, c in x.terms.items():
        pairs = [((i + k) % size, (m[i] + k) % size) for i in range(size) if i < m[i]]
        out[_matching(pairs, size)] = c
    return TLElement(x.a, x.b, out)


def markov_closure(x: TLElement) -> LaurentPoly:
    """Close an (n, n) element around the side; returns a scalar."""
    assert x.a == x.b
    size = x.a + x.b
    total = LaurentPoly.zero()
    for m, c in x.terms.items():
        glue = {i: size - 1 - i for i in range(size)}
        # walk cycles alternating matching and closure arcs
        seen = set()
        loops = 0
        for i in range(size):
            if i in seen:
                continue
            loops += 1
            j = i
            while j not in seen:
                seen.add(j)
                j2 = m[j]
                seen.add(j2)
                j = glue[j2]
        total = total + c * LOOP**loops
    return total


# ---------------------------------------------------------------------------
# crossing blocks and tangle assembly


def _braid_generator(width: int, i: int, over_diag: int) -> TLElement:
    ident = TLElement.identity(width)
    cup = TLElement.cup_generator(width, i)
    if over_diag == 0:
        return ident.scale(LaurentPoly.term(1, KAPPA)) + cup.scale(
            LaurentPoly.term(1, -KAPPA)
        )
    return ident.scale(LaurentPoly.term(1, -KAPPA)) + cup.scale(
        LaurentPoly.term(1, KAPPA)
    )


@lru_cache(maxsize=None)
def crossing_block(cable: int, over_diag: int) -> TLElement:
    """One crossing of two cable-strand bundles, as a width-2*cable braid."""
    width = 2 * cable
    block = TLElement.identity(width)
    for t in range(cable):
        for i in range(cable - t, 2 * cable - t):
            block = tl_multiply(block, _braid_generator(width, i, over_diag))
    return block


def _attach_south(t: TLElement, v: TLElement, cable: int) -> TLElement:
    n = cable
    glue = {}
    for j in range(n):
        # Seam orientation reverses across the glued arc, like tl_multiply.
        glue[n + j] = n - 1 - j  # T's SW bundle into V's NW bundle
        glue[2 * n + j] = 4 * n - 1 - j  # T's SE bundle into V's NE bundle
    relabel = {("x", i): i for i in range(n)}  # keep T's NW
    relabel.update({("x", 3 * n + j): 3 * n + j for j in range(n)})  # T's NE
    relabel.update({("y", n + j): n + j for j in range(2 * n)})  # V's SW and SE
    return _glue_elements(t, v, glue, relabel, (2 * n, 2 * n))


def tangle_element(runs, cable: int) -> TLElement:
    """Evaluate one tangle recipe at the given cable width."""
    element = None
    for axis, count, sense in runs:
        block = crossing_block(cable, over_diagonal(axis, sense))
        for _ in range(count):
            if element is None:
                element = block
            elif axis == "h":
                element = tl_multiply(element, block)
            else:
                element = _attach_south(element, block, cable)
    assert element is not None
    return element


def _cabled_vertical_strands(cable: int) -> TLElement:
    """Two bundles running north-south: west points join each other,
    east points likewise."""
    n = cable
    pairs = [(j, 2 * n - 1 - j) for j in range(n)]
    pairs += [(2 * n + t, 4 * n - 1 - t) for t in range(n)]
    return TLElement(2 * n, 2 * n, {_matching(pairs, 4 * n): LaurentPoly.one()})


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors


@lru_cache(maxsize=None)
def delta_n(n: int) -> LaurentPoly:
    """Loop value of an n-colored unknot."""
    if n == -1:
        return LaurentPoly.zero()
    if n < -1:
        raise ValueError("loop value undefined below n = -1")
    num = LaurentPoly({-2 * (n + 1): 1, 2 * (n + 1): -1})
    if n % 2 == 1:
        num = num * -1
    den = LaurentPoly({-2: 1, 2: -1})
    return num.exact_div(den)


@lru_cache(maxsize=None)
def jw_projector(n: int) -> tuple[TLElement, LaurentPoly]:
    """Common-denominator form (P_n, D_n) of the n-strand projector.

    The projector itself is P_n / D_n; keeping the pair avoids
    non-integer coefficients.
    """
    if n < 1:
        raise ValueError("projector needs at least one strand")
    if n == 1:
        return TLElement.identity(1), LaurentPoly.one()
    p_prev, d_prev = jw_projector(n - 1)
    wide = tensor(p_prev, TLElement.identity(1))
    cap = TLElement.cup_generator(n, n - 1)
    dk = delta_n(n - 1)
    dk_prev = delta_n(n - 2)
    term1 = wide.scale(d_prev * dk)
    term2 = tl_multiply(tl_multiply(wide, cap), wide).scale(dk_prev)
    return term1 - term2, d_prev * d_prev * dk


def theta(a: int, b: int, c: int) -> LaurentPoly:
    """Loop value of two trivalent vertices joined along all three legs."""
    if (a + b + c) % 2 or abs(a - b) > c or c > a + b or min(a, b, c) < 0:
        raise InadmissibleTriple(f"colors ({a}, {b}, {c}) cannot meet")
    m = (a + b - c) // 2
    n = (b + c - a) // 2
    p = (c + a - b) // 2

    def dfact(k):
        out = LaurentPoly.one()
        for i in range(k + 1):
            out = out * delta_n(i)
        return out

    num = dfact(m + n + p) * dfact(m - 1) * dfact(n - 1) * dfact(p - 1)
    den = dfact(m + n - 1) * dfact(n + p - 1) * dfact(p + m - 1)
    return num.exact_div(den)


# ---------------------------------------------------------------------------
# colored Jones evaluation


def _projected_bracket(knot, cable: int) -> LaurentPoly:
    """Kauffman bracket of the cable with one projector inserted."""
    runs = twist_runs(knot)
    proj, denom = jw_projector(cable)
    element = tensor(proj, TLElement.identity(cable))
    for tangle_runs in runs:
        element = tl_multiply(element, tangle_element(tangle_runs, cable))
    return markov_closure(element).exact_div(denom)


def colored_jones(knot, n: int, color_cap: int = DEFAULT_COLOR_CAP) -> LaurentPoly:
    """n-colored Jones polynomial of the knot, unknot-normalized to the
    convention where the unknot gives (v^2n - v^-2n)/(v^2 - v^-2)."""
    if n < 1:
        raise ValueError("color must be at least 1")
    if n > color_cap:
        raise ColorTooLarge(f"color {n} exceeds cap {color_cap}")
    cable = n - 1
    if cable == 0:
        return LaurentPoly.one()
    w = writhe(build_standard_diagram(knot))
    bracket = _projected_bracket(knot, cable)
    framing = LaurentPoly.term(1 if cable % 2 == 0 else -1, -w * (n * n - 1))
    return framing * bracket


def colored_jones_unknot(n: int, color_cap: int = DEFAULT_COLOR_CAP) -> LaurentPoly:
    """Same normalization, evaluated on a crossingless round diagram."""
    if n < 1:
        raise ValueError("color must be at least 1")
    if n > color_cap:
        raise ColorTooLarge(f"color {n} exceeds cap {color_cap}")
    cable = n - 1
    if cable == 0:
        return LaurentPoly.one()
    proj, denom = jw_projector(cable)
    element = tl_multiply(
        tensor(proj, TLElement.identity(cable)), _cabled_vertical_strands(cable)
    )
    value = markov_closure(element).exact_div(denom)
    return value if cable % 2 == 0 else value * -1
