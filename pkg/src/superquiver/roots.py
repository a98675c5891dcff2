"""The root system A(n, m), its simple systems and the Weyl group of A_{n+m-1}.

A root is stored by its coordinates in the basis
``(eps_1, ..., eps_n, delta_1, ..., delta_m)``; in these coordinates the
identification with A_{n+m-1} (``eps_i -> e_i``, ``delta_i -> e_{n+i}``) is
the identity, and only the parity is lost.

Weyl group computations on the quiver side are done in simple-root
coordinates: a vector ``c`` of length ``k = n + m - 1`` stands for
``sum c_i alpha_i`` for whatever simple system is in play.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quiver import ColouredQuiver, QuiverError, glyph, reflect_quiver

Word = tuple[int, ...]
Coeffs = tuple[int, ...]


class RootError(ValueError):
    """Raised for invalid roots, simple systems or words."""


@dataclass(frozen=True)
class SuperRootSystem:
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise RootError("A(n, m) needs n >= 1 and m >= 1")

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def rank(self) -> int:
        return self.n + self.m - 1

    def functional(self, a: int, ascii: bool = False) -> str:
        if a < self.n:
            return f"{'e' if ascii else 'ε'}{a + 1}"
        return f"{'d' if ascii else 'δ'}{a - self.n + 1}"


@dataclass(frozen=True)
class SuperRoot:
    """``e_a - e_b`` in the A(n, m) lattice (0-based functional indices)."""

    coords: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        c = self.coords
        if sorted(c) != [-1] + [0] * (len(c) - 2) + [1]:
            raise RootError(f"{c} is not of the form e_a - e_b")
        if not 0 <= self.n <= len(c):
            raise RootError("bad eps-block size")

    @classmethod
    def from_indices(cls, n: int, m: int, a: int, b: int) -> SuperRoot:
        if a == b:
            raise RootError("e_a - e_a is not a root")
        v = [0] * (n + m)
        v[a], v[b] = 1, -1
        return cls(tuple(v), n)

    @property
    def plus(self) -> int:
        return self.coords.index(1)

    @property
    def minus(self) -> int:
        return self.coords.index(-1)

    @property
    def parity(self) -> int:
        return int((self.plus < self.n) != (self.minus < self.n))

    @property
    def system(self) -> SuperRootSystem:
        return SuperRootSystem(self.n, len(self.coords) - self.n)

    def __neg__(self) -> SuperRoot:
        return SuperRoot(tuple(-x for x in self.coords), self.n)

    def label(self, ascii: bool = False) -> str:
        rs = self.system
        dash = "-" if ascii else "−"
        return f"{rs.functional(self.plus, ascii)}{dash}{rs.functional(self.minus, ascii)}"

    def __str__(self) -> str:
        return self.label()

    def to_json(self) -> dict:
        return {"coords": list(self.coords), "parity": self.parity, "label": self.label(ascii=True)}


def add_roots(a: SuperRoot, b: SuperRoot) -> SuperRoot:
    """``a + b``, which must again be a root."""
    return SuperRoot(tuple(x + y for x, y in zip(a.coords, b.coords)), a.n)


_ROOT_RE = re.compile(r"^\s*([eεdδ])(\d+)\s*[-−]\s*([eεdδ])(\d+)\s*$")


def parse_root(text: str, n: int, m: int) -> SuperRoot:
    """Parse ``"e1-d2"`` / ``"ε1−δ2"`` into a root of A(n, m)."""
    mt = _ROOT_RE.match(text)
    if not mt:
        raise RootError(f"cannot parse root {text!r}; expected e.g. 'e1-d2'")

    def index(kind: str, num: str) -> int:
        i = int(num)
        if kind in "eε":
            if not 1 <= i <= n:
                raise RootError(f"eps index {i} out of range 1..{n}")
            return i - 1
        if not 1 <= i <= m:
            raise RootError(f"delta index {i} out of range 1..{m}")
        return n + i - 1

    return SuperRoot.from_indices(n, m, index(mt[1], mt[2]), index(mt[3], mt[4]))


def all_roots(rs: SuperRootSystem) -> list[SuperRoot]:
    N = rs.size
    return [SuperRoot.from_indices(rs.n, rs.m, a, b)
            for a in range(N) for b in range(N) if a != b]


def even_roots(rs: SuperRootSystem) -> list[SuperRoot]:
    return [r for r in all_roots(rs) if r.parity == 0]


def odd_roots(rs: SuperRootSystem) -> list[SuperRoot]:
    return [r for r in all_roots(rs) if r.parity == 1]


def flatten(rs: SuperRootSystem, alpha: SuperRoot) -> tuple[int, ...]:
    """Image of ``alpha`` in A_{n+m-1}, as a vector in the e-basis."""
    if len(alpha.coords) != rs.size or alpha.n != rs.n:
        raise RootError("root does not belong to this root system")
    return alpha.coords


def _form(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# simple systems

@dataclass(frozen=True)
class SimpleSystem:
    """Ordered simple roots ``alpha_1 .. alpha_k`` whose diagram is a path."""

    roots: tuple[SuperRoot, ...]

    def __post_init__(self) -> None:
        rs = self.roots
        if not rs:
            raise RootError("empty simple system")
        size, n = len(rs[0].coords), rs[0].n
        if len(rs) != size - 1 or any(len(r.coords) != size or r.n != n for r in rs):
            raise RootError("a simple system of A(n, m) has n + m - 1 roots")
        for i, a in enumerate(rs):
            for j, b in enumerate(rs):
                want = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
                if _form(a.coords, b.coords) != want:
                    raise RootError(
                        f"roots {a} and {b} do not pair like a type-A simple system"
                    )
        self._order()  # raises if the chain is broken

    @property
    def n(self) -> int:
        return self.roots[0].n

    @property
    def m(self) -> int:
        return len(self.roots[0].coords) - self.n

    @property
    def rank(self) -> int:
        return len(self.roots)

    @property
    def system(self) -> SuperRootSystem:
        return SuperRootSystem(self.n, self.m)

    def __getitem__(self, i: int) -> SuperRoot:
        """1-based access: ``pi[1]`` is ``alpha_1``."""
        return self.roots[i - 1]

    @property
    def colours(self) -> tuple[int, ...]:
        return tuple(r.parity for r in self.roots)

    def _order(self) -> tuple[tuple[int, ...], int]:
        rs = self.roots
        fwd = [rs[0].plus] + [r.minus for r in rs]
        if all(rs[i].plus == fwd[i] for i in range(len(rs))):
            return tuple(fwd), 1
        bwd = [rs[0].minus] + [r.plus for r in rs]
        if all(rs[i].minus == bwd[i] for i in range(len(rs))):
            return tuple(bwd), -1
        raise RootError("simple roots do not chain along the path")

    @property
    def order(self) -> tuple[int, ...]:
        """Functionals ``u_1 .. u_{k+1}`` with ``alpha_i = sign * (e_{u_i} - e_{u_{i+1}})``."""
        return self._order()[0]

    @property
    def sign(self) -> int:
        return self._order()[1]

    def coefficients(self, alpha: SuperRoot) -> Coeffs:
        """Coordinates of ``alpha`` in the basis of simple roots."""
        order, sign = self._order()
        p, q = order.index(alpha.plus), order.index(alpha.minus)
        lo, hi, s = (p, q, sign) if p < q else (q, p, -sign)
        return tuple(s if lo <= i < hi else 0 for i in range(self.rank))

    def is_positive(self, alpha: SuperRoot) -> bool:
        return all(c >= 0 for c in self.coefficients(alpha))

    def from_coefficients(self, c: Sequence[int]) -> SuperRoot:
        v = [0] * (self.n + self.m)
        for ci, r in zip(c, self.roots):
            for a, x in enumerate(r.coords):
                v[a] += ci * x
        return SuperRoot(tuple(v), self.n)

    def positive_roots(self) -> list[SuperRoot]:
        return [r for r in all_roots(self.system) if self.is_positive(r)]

    def quiver(self, orientation: str) -> ColouredQuiver:
        """The coloured Dynkin diagram of this system with the given orientation."""
        return ColouredQuiver.from_orientation(self.colours, orientation)

    def diagram(self, ascii: bool = False) -> str:
        sep = " - " if ascii else " ─ "
        return sep.join(glyph(c, ascii) for c in self.colours)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.roots]


def simple_system_from_order(n: int, m: int, order: Sequence[int], sign: int = 1) -> SimpleSystem:
    order = list(order)
    if sorted(order) != list(range(n + m)):
        raise RootError("order must be a permutation of the n + m functionals")
    roots = []
    for a, b in zip(order, order[1:]):
        r = SuperRoot.from_indices(n, m, a, b)
        roots.append(r if sign > 0 else -r)
    return SimpleSystem(tuple(roots))


def simple_system_from_st(n: int, m: int, S: Sequence[int], T: Sequence[int],
                          sign: int = 1) -> SimpleSystem:
    """``Pi_{S,T}``: eps_1..eps_{s_1}, delta_1..delta_{t_1}, eps_{s_1+1}.. , chained.

    ``S`` and ``T`` are strictly increasing breakpoints ending in ``n`` and
    ``m``; ``S`` may start at 0 to begin with a delta block.
    """
    S, T = list(S), list(T)
    for name, seq, top in (("S", S, n), ("T", T, m)):
        if not seq or seq[-1] != top:
            raise RootError(f"{name} must end with {top}")
        if any(b <= a for a, b in zip(seq, seq[1:])) or seq[0] < 0:
            raise RootError(f"{name} must be strictly increasing")
    if S[0] == 0:
        if T[0] < 1:
            raise RootError("T must start positive when S starts at 0")
    elif S[0] < 1:
        raise RootError("S must be positive")
    if not 0 <= len(S) - len(T) <= 1:
        raise RootError("S and T blocks must alternate")
    order: list[int] = []
    prev_s = prev_t = 0
    for idx in range(len(S)):
        order += list(range(prev_s, S[idx]))
        prev_s = S[idx]
        if idx < len(T):
            order += [n + j for j in range(prev_t, T[idx])]
            prev_t = T[idx]
    if sorted(order) != list(range(n + m)):
        raise RootError("S and T do not exhaust the functionals")
    return simple_system_from_order(n, m, order, sign)


def distinguished_simple_system(n: int, m: int) -> SimpleSystem:
    """``eps_1 - eps_2, ..., eps_n - delta_1, ..., delta_{m-1} - delta_m``."""
    return simple_system_from_st(n, m, [n], [m])


def reflect_simple_system(pi: SimpleSystem, i: int) -> SimpleSystem:
    """Odd reflection at an odd ``alpha_i``, classical reflection at an even one."""
    if not 1 <= i <= pi.rank:
        raise RootError(f"vertex {i} out of range 1..{pi.rank}")
    ai = pi[i]
    out = []
    if ai.parity == 1:
        for j, aj in enumerate(pi.roots, start=1):
            if j == i:
                out.append(-ai)
            elif abs(i - j) == 1:
                out.append(add_roots(ai, aj))
            else:
                out.append(aj)
    else:
        a, b = ai.plus, ai.minus
        for aj in pi.roots:
            v = list(aj.coords)
            v[a], v[b] = v[b], v[a]
            out.append(SuperRoot(tuple(v), aj.n))
    return SimpleSystem(tuple(out))


def simple_system_from_word(base: SimpleSystem, word: Iterable[int]) -> SimpleSystem:
    """Apply reflections ``word[0]``, then ``word[1]``, ... to ``base``."""
    pi = base
    for i in word:
        pi = reflect_simple_system(pi, i)
    return pi


# ---------------------------------------------------------------------------
# Weyl group of A_k

def simple_reflection_action(k: int, v: Sequence[int]) -> tuple[int, ...]:
    """``s_k`` on an e-basis vector: swaps coordinates ``k`` and ``k + 1`` (1-based)."""
    if not 1 <= k < len(v):
        raise RootError(f"s_{k} undefined on vectors of length {len(v)}")
    w = list(v)
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def reflect_coefficients(i: int, c: Sequence[int]) -> Coeffs:
    """``s_i`` on simple-root coordinates via the A_k Cartan matrix."""
    k = len(c)
    if not 1 <= i <= k:
        raise RootError(f"s_{i} undefined in rank {k}")
    left = c[i - 2] if i >= 2 else 0
    right = c[i] if i < k else 0
    out = list(c)
    out[i - 1] = left + right - c[i - 1]
    return tuple(out)


def apply_word(word: Sequence[int], c: Sequence[int]) -> Coeffs:
    """``s_{w_1} s_{w_2} ... s_{w_l} c`` (the rightmost letter acts first)."""
    out = tuple(c)
    for i in reversed(word):
        out = reflect_coefficients(i, out)
    return out


def simple_coeffs(i: int, k: int) -> Coeffs:
    return tuple(1 if j == i - 1 else 0 for j in range(k))


def is_positive_coeffs(c: Sequence[int]) -> bool:
    return any(c) and all(x >= 0 for x in c)


def positive_root_count(k: int) -> int:
    return k * (k + 1) // 2


def coxeter_element(orientation: str) -> Word:
    """Sink-ordered Coxeter word for the orientation (smallest sink first)."""
    q = ColouredQuiver.uncoloured(orientation)
    used: list[int] = []
    while len(used) < q.k:
        i = next(j for j in q.vertices if j not in used and q.is_sink(j))
        used.append(i)
        q = reflect_quiver(q, i)
    return tuple(used)


def adapted_longest_word(orientation: str) -> Word:
    """A reduced word for ``w_0`` adapted to the orientation.

    Letters are taken from the repeated Coxeter word; a letter is kept only if
    it is a sink of the partially reflected orientation and its prefix root is
    positive and new.
    """
    k = len(orientation) + 1
    target = positive_root_count(k)
    cox = coxeter_element(orientation)
    q = ColouredQuiver.uncoloured(orientation)
    word: list[int] = []
    seen: set[Coeffs] = set()
    idle = 0
    while len(word) < target:
        for i in cox:
            if len(word) == target:
                break
            if not q.is_sink(i):
                continue
            gamma = apply_word(word, simple_coeffs(i, k))
            if not is_positive_coeffs(gamma) or gamma in seen:
                continue
            word.append(i)
            seen.add(gamma)
            q = reflect_quiver(q, i)
            idle = -1
        idle += 1
        if idle > 1:
            raise RootError(f"no adapted longest word found for {orientation!r}")
    return tuple(word)


def is_adapted(word: Sequence[int], orientation: str) -> bool:
    q = ColouredQuiver.uncoloured(orientation)
    for i in word:
        if not q.is_sink(i):
            return False
        try:
            q = reflect_quiver(q, i)
        except QuiverError:
            return False
    return True


def enumerate_positive_roots(word: Sequence[int], rank: int | None = None) -> list[Coeffs]:
    """``gamma_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}`` in simple-root coordinates."""
    k = rank if rank is not None else max(word)
    out: list[Coeffs] = []
    for j, i in enumerate(word):
        gamma = apply_word(word[:j], simple_coeffs(i, k))
        if not is_positive_coeffs(gamma):
            raise RootError(f"prefix root {gamma} at position {j + 1} is not positive")
        if gamma in out:
            raise RootError(f"prefix root {gamma} repeats: word is not reduced")
        out.append(gamma)
    return out


def dumps_roots(roots: Iterable[SuperRoot]) -> str:
    return json.dumps([r.to_json() for r in roots])
