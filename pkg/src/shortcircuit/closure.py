"""
closure: build oriented long-knot diagrams from braids.

A diagram is carried entirely by its based Gauss sequence: the ordered
crossing visits (crossing id, over/under, sign) read along the knot from
the open start to the open finish.  Crossing signs are computed from the
two oriented tangents at the crossing (right-handed = +1).  Crossing ids
are the 1-based letter indices of the source word and are never
relabelled, so diagrams built from braids list crossings in sweep order.

The short-circuit closure of a (2n+1)-strand pure braid joins strand
bottoms (1,2),(3,4),... and strand tops (2,3),(4,5),..., leaving the top
of strand 1 and the bottom of strand 2n+1 open; strands are traversed
alternately downward and upward.  Plat closures cap an even-strand word
top and bottom with arbitrary perfect matchings and cut the resulting
closed curve at the cap covering the smallest top index.  Joining arcs
are nested outside the braid box and introduce no crossings, so the
crossing count always equals the word length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import PureBraid, SigmaWord
from .errors import DomainError, ParseError

# gauss entry: (crossing id, over?, sign)
GaussEntry = tuple[int, bool, int]


@dataclass(frozen=True)
class LongKnotDiagram:
    gauss: tuple[GaussEntry, ...] = ()

    def __post_init__(self) -> None:
        seen: dict[int, list[GaussEntry]] = {}
        for entry in self.gauss:
            cid, over, sign = entry
            if sign not in (1, -1):
                raise DomainError(f"crossing {cid} has sign {sign}")
            seen.setdefault(cid, []).append(entry)
        for cid, entries in seen.items():
            if len(entries) != 2:
                raise DomainError(f"crossing {cid} appears {len(entries)} times, expected 2")
            (_, o1, s1), (_, o2, s2) = entries
            if o1 == o2:
                raise DomainError(f"crossing {cid} lacks an over/under pair")
            if s1 != s2:
                raise DomainError(f"crossing {cid} has inconsistent signs")

    @property
    def crossing_count(self) -> int:
        return len(self.gauss) // 2

    @property
    def arc_count(self) -> int:
        return len(self.gauss) + 1

    def signs(self) -> dict[int, int]:
        return {cid: sign for cid, over, sign in self.gauss if over}

    def visit_positions(self) -> dict[int, tuple[int, int]]:
        """crossing id -> (gauss index of over visit, gauss index of under visit)."""
        over_at: dict[int, int] = {}
        under_at: dict[int, int] = {}
        for idx, (cid, over, _sign) in enumerate(self.gauss):
            (over_at if over else under_at)[cid] = idx
        return {cid: (over_at[cid], under_at[cid]) for cid in over_at}


def unknot() -> LongKnotDiagram:
    return LongKnotDiagram(())


# ---------------------------------------------------------------------------
# traversal engine

_DOWN = 1
_UP = -1


def _walk_run(letters, entry_pos: int, direction: int):
    """Walk one strand passage through the braid box.

    Returns (exit position, visits) where each visit is
    (letter index, role) with role 'left' for the top-k-to-bottom-(k+1)
    diagonal.  Down runs read letters first-to-last, up runs last-to-first.
    """
    p = entry_pos
    visits = []
    order = (
        enumerate(letters, start=1)
        if direction == _DOWN
        else zip(range(len(letters), 0, -1), reversed(letters))
    )
    for t, (k, _sign) in order:
        if direction == _DOWN:
            if p == k:
                visits.append((t, "left"))
                p = k + 1
            elif p == k + 1:
                visits.append((t, "right"))
                p = k
        else:
            if p == k + 1:
                visits.append((t, "left"))
                p = k
            elif p == k:
                visits.append((t, "right"))
                p = k + 1
    return p, visits


def _assemble(word: SigmaWord, runs) -> LongKnotDiagram:
    """Turn an ordered list of (letter index, role, direction) visits into a diagram."""
    visits_by_letter: dict[int, list[tuple[str, int]]] = {}
    flat: list[tuple[int, str, int]] = []
    for t, role, direction in runs:
        visits_by_letter.setdefault(t, []).append((role, direction))
        flat.append((t, role, direction))
    for t, vs in visits_by_letter.items():
        if len(vs) != 2:
            raise DomainError(f"letter {t} traversed {len(vs)} times, expected 2")

    sign_of: dict[int, int] = {}
    for t, vs in visits_by_letter.items():
        eps = word.letters[t - 1][1]
        (_, d1), (_, d2) = vs
        sign_of[t] = -eps if d1 == d2 else eps

    gauss = []
    for t, role, _direction in flat:
        eps = word.letters[t - 1][1]
        over = (role == "left") == (eps == 1)
        gauss.append((t, over, sign_of[t]))
    return LongKnotDiagram(tuple(gauss))


def short_circuit_close(b: PureBraid) -> LongKnotDiagram:
    """Close a pure braid on 2n+1 strands into a long knot (Fig.-1-style joins)."""
    strands = b.strands
    if strands % 2 == 0:
        raise DomainError(f"short-circuit closure needs an odd strand count, got {strands}")
    letters = b.letters
    runs: list[tuple[int, str, int]] = []
    for s in range(1, strands + 1):
        direction = _DOWN if s % 2 == 1 else _UP
        exit_pos, visits = _walk_run(letters, s, direction)
        if exit_pos != s:
            raise DomainError("pure braid traversal left its strand")
        runs.extend((t, role, direction) for t, role in visits)
    return _assemble(b.word, runs)


@dataclass(frozen=True)
class PlatPairing:
    top: tuple[tuple[int, int], ...]
    bottom: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for name, matching in (("top", self.top), ("bottom", self.bottom)):
            seen: set[int] = set()
            for a, b in matching:
                if a == b or a < 1 or b < 1:
                    raise DomainError(f"bad {name} pair ({a},{b})")
                if a in seen or b in seen:
                    raise DomainError(f"{name} matching reuses an index")
                seen.update((a, b))

    @classmethod
    def standard(cls, n: int) -> "PlatPairing":
        pairs = tuple((2 * k + 1, 2 * k + 2) for k in range(n))
        return cls(pairs, pairs)

    def partner_maps(self, strands: int) -> tuple[dict[int, int], dict[int, int]]:
        maps = []
        for name, matching in (("top", self.top), ("bottom", self.bottom)):
            m: dict[int, int] = {}
            for a, b in matching:
                m[a] = b
                m[b] = a
            if set(m) != set(range(1, strands + 1)):
                raise DomainError(f"{name} matching is not a perfect matching on 1..{strands}")
            maps.append(m)
        return maps[0], maps[1]


def plat_close(w: SigmaWord, pairing: PlatPairing | None = None) -> LongKnotDiagram:
    """Cap an even-strand word with the given pairings and cut at the cap
    covering the smallest top index.  Fails if the capped curve has more
    than one component."""
    strands = w.strands
    if strands % 2 != 0:
        raise DomainError(f"plat closure needs an even strand count, got {strands}")
    if pairing is None:
        pairing = PlatPairing.standard(strands // 2)
    top, bottom = pairing.partner_maps(strands)

    from .braid import permutation

    perm = permutation(w)
    perm_inv = [0] * (strands + 1)
    for p, img in enumerate(perm, start=1):
        perm_inv[img] = p

    def step(p: int) -> int:
        return top[perm_inv[bottom[perm[p - 1]]]]

    unvisited = set(range(1, strands + 1))
    orbits = 0
    while unvisited:
        orbits += 1
        p0 = min(unvisited)
        p = p0
        while p in unvisited:
            unvisited.remove(p)
            p = step(p)
    if orbits % 2 != 0:
        raise DomainError("internal traversal error: odd orbit count")
    components = orbits // 2
    if components != 1:
        raise DomainError(f"plat closure has {components} components, expected 1")

    finish_top = top[1]
    runs: list[tuple[int, str, int]] = []
    p = 1
    while True:
        exit_pos, visits = _walk_run(w.letters, p, _DOWN)
        runs.extend((t, role, _DOWN) for t, role in visits)
        q = bottom[exit_pos]
        exit_pos, visits = _walk_run(w.letters, q, _UP)
        runs.extend((t, role, _UP) for t, role in visits)
        if exit_pos == finish_top:
            break
        p = top[exit_pos]
    return _assemble(w, runs)


def t_braid(n: int) -> SigmaWord:
    """The 2n-strand braid carrying strand 1 across to position 2n, passing
    over everything.  It satisfies the defining oracle: capping t_n on top
    of any included (2n-1)-strand pure braid reproduces the short-circuit
    closure (up to mirror)."""
    if n < 1:
        raise DomainError(f"t braid needs n >= 1, got {n}")
    return SigmaWord(2 * n, tuple((k, 1) for k in range(1, 2 * n)))


def connect_sum(d1: LongKnotDiagram, d2: LongKnotDiagram) -> LongKnotDiagram:
    """Glue the finish end of d1 to the start end of d2."""
    offset = max((cid for cid, _o, _s in d1.gauss), default=0)
    shifted = tuple((cid + offset, o, s) for cid, o, s in d2.gauss)
    return LongKnotDiagram(d1.gauss + shifted)


def mirror(d: LongKnotDiagram) -> LongKnotDiagram:
    """Swap every over/under and flip every sign."""
    return LongKnotDiagram(tuple((cid, not o, -s) for cid, o, s in d.gauss))


def simplify(d: LongKnotDiagram) -> LongKnotDiagram:
    """Apply Reidemeister I and II reductions until none remain.

    R1: adjacent visits of the same crossing.  R2: a pair of crossings of
    opposite sign visited adjacently over-over somewhere and under-under
    elsewhere.  Long-knot sequences have no wraparound adjacency.
    """
    g = list(d.gauss)
    changed = True
    while changed:
        changed = False
        for idx in range(len(g) - 1):
            if g[idx][0] == g[idx + 1][0]:
                del g[idx : idx + 2]
                changed = True
                break
        if changed:
            continue
        over_pairs: dict[frozenset[int], int] = {}
        under_pairs: dict[frozenset[int], int] = {}
        for idx in range(len(g) - 1):
            a, b = g[idx], g[idx + 1]
            if a[0] == b[0]:
                continue
            key = frozenset((a[0], b[0]))
            if a[1] and b[1]:
                over_pairs.setdefault(key, idx)
            elif not a[1] and not b[1]:
                under_pairs.setdefault(key, idx)
        for key, i_over in over_pairs.items():
            if key not in under_pairs:
                continue
            c1, c2 = key
            signs = {cid: s for cid, _o, s in g if cid in key}
            if signs[c1] != -signs[c2]:
                continue
            i_under = under_pairs[key]
            drop = sorted((i_over, i_over + 1, i_under, i_under + 1), reverse=True)
            for idx in drop:
                del g[idx]
            changed = True
            break
    return LongKnotDiagram(tuple(g))


def bridge_upper_bound(b: PureBraid) -> int:
    """n+1 for the smallest odd strand count 2n+1 containing every letter of b."""
    max_pos = max((p for p, _s in b.letters), default=0)
    used = max_pos + 1 if b.letters else 1
    k = used if used % 2 == 1 else used + 1
    return (k + 1) // 2


# ---------------------------------------------------------------------------
# text formats

_GAUSS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def gauss_code(d: LongKnotDiagram) -> str:
    return " ".join(
        f"{'O' if over else 'U'}{cid}{'+' if sign > 0 else '-'}"
        for cid, over, sign in d.gauss
    )


def parse_gauss(text: str) -> LongKnotDiagram:
    entries = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        tm = _GAUSS_TOKEN.match(tok)
        if not tm:
            raise ParseError(f"unrecognized gauss token {tok!r}", position=m.start())
        over = tm.group(1) == "O"
        cid = int(tm.group(2))
        sign = 1 if tm.group(3) == "+" else -1
        entries.append((cid, over, sign))
    return LongKnotDiagram(tuple(entries))


def pd_code(d: LongKnotDiagram) -> list[tuple[int, int, int, int]]:
    """PD quadruples (arc labels counterclockwise from the incoming under-arc).

    Arc label k is the arc entering the k-th gauss visit; label 0 is the open
    start arc and label 2c the open finish arc.
    """
    quads = []
    positions = d.visit_positions()
    signs = d.signs()
    for cid in sorted(positions):
        g_over, g_under = positions[cid]
        o_in, o_out = g_over, g_over + 1
        u_in, u_out = g_under, g_under + 1
        if signs[cid] == 1:
            quads.append((u_in, o_out, u_out, o_in))
        else:
            quads.append((u_in, o_in, u_out, o_out))
    return quads


def pd_text(d: LongKnotDiagram) -> str:
    return ",".join(f"X({a},{b},{c},{e})" for a, b, c, e in pd_code(d))
