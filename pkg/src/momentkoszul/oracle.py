"""Brute-force homological oracle over the ambient polynomial ring.

Tor against the residue field is computed as homology of the exterior-algebra
complex on the variables tensored with the quotient: in each bidegree the two
differentials are assembled as explicit sparse matrices and their exact ranks
give the Betti number.  No structure theory enters: this is the independent
route against which the closed formulas are checked.

Basis of the complex in homological degree i and bidegree v: pairs (eps, m)
where eps is an ascending tuple of i distinct variable indices and m runs
over the quotient basis of (S/I)_{v - deg eps}.  The differential removes one
variable at a time with the usual alternating sign and multiplies it into the
quotient factor.
"""

from __future__ import annotations

import multiprocessing
import os
from itertools import combinations

from .betti import BettiTable
from .fields import QQ, Field
from .ideals import RepFamily
from .linalg import IntEchelon, int_scaled, kernel_of_columns
from .monomials import BiDegree, bidegrees_up_to_total, sub_bidegrees, total
from .polynomials import format_monomial, variable_names
from .quotient import QuotientRing, ring_for_family
from .series import TruncatedSeries


def _ext_bidegree(eps: tuple[int, ...], num_p: int) -> BiDegree:
    a = sum(1 for x in eps if x < num_p)
    return (a, len(eps) - a)


class ChainPiece:
    """One bidegree of the complex: labelled basis and sparse differential.

    ``basis_pairs[k]`` is the (exterior monomial, quotient basis monomial)
    pair behind column k of ``columns``; each column is a sparse vector over
    the basis of the piece one homological degree down.
    """

    __slots__ = ("i", "bidegree", "basis_pairs", "columns")

    def __init__(self, i, bidegree, basis_pairs, columns):
        self.i = i
        self.bidegree = bidegree
        self.basis_pairs = basis_pairs
        self.columns = columns

    @property
    def dimension(self) -> int:
        return len(self.basis_pairs)


class KoszulOracle:
    """Shared state for one (family ring, field) Tor computation."""

    def __init__(self, ring: QuotientRing):
        self.ring = ring
        self._rank: dict[tuple[int, BiDegree], int] = {}
        self._basis: dict[tuple[int, BiDegree], list] = {}
        self._cols: dict[tuple[int, BiDegree], list] = {}
        self._dd_done: set[tuple[int, BiDegree]] = set()

    def basis(self, i: int, v: BiDegree):
        """Blocks (eps, dim) of the degree-(i, v) piece, plus index offsets."""
        key = (i, v)
        got = self._basis.get(key)
        if got is not None:
            return got
        ring = self.ring
        blocks = []
        offset = 0
        if 0 <= i <= ring.nvars:
            for eps in combinations(range(ring.nvars), i):
                w = sub_bidegrees(v, _ext_bidegree(eps, ring.num_p))
                d = ring.dim(w)
                if d:
                    blocks.append((eps, w, offset, d))
                    offset += d
        result = (blocks, offset)
        self._basis[key] = result
        return result

    def dimension(self, i: int, v: BiDegree) -> int:
        return self.basis(i, v)[1]

    def columns(self, i: int, v: BiDegree):
        """Columns of the differential K_i -> K_{i-1} in bidegree v."""
        key = (i, v)
        got = self._cols.get(key)
        if got is not None:
            return got
        ring = self.ring
        fld = ring.field
        blocks, _ = self.basis(i, v)
        tgt_blocks, _ = self.basis(i - 1, v)
        tgt_offset = {eps: off for eps, _, off, _ in tgt_blocks}
        cols = []
        for eps, w, _, d in blocks:
            removals = []
            for r in range(len(eps)):
                tgt_eps = eps[:r] + eps[r + 1:]
                off = tgt_offset.get(tgt_eps)
                if off is None:
                    continue
                sign = 1 if r % 2 == 0 else -1
                removals.append((sign, off, ring.mult_by_var(eps[r], w)))
            for pos in range(d):
                col: dict[int, object] = {}
                for sign, off, mult in removals:
                    for tpos, c in mult[pos].items():
                        val = c if sign == 1 else fld.neg(c)
                        idx = off + tpos
                        acc = fld.add(col.get(idx, fld.zero()), val)
                        if fld.is_zero(acc):
                            col.pop(idx, None)
                        else:
                            col[idx] = acc
                cols.append(col)
        self._cols[key] = cols
        return cols

    def rank(self, i: int, v: BiDegree) -> int:
        key = (i, v)
        got = self._rank.get(key)
        if got is not None:
            return got
        if i <= 0 or i > self.ring.nvars:
            self._rank[key] = 0
            return 0
        cols = self.columns(i, v)
        n_rows = self.dimension(i - 1, v)
        ech = IntEchelon(self.ring.field.p)
        fld = self.ring.field
        if len(cols) <= n_rows:
            for col in cols:
                ech.insert(int_scaled(col, fld))
        else:
            rows: dict[int, dict[int, object]] = {}
            for j, col in enumerate(cols):
                for r, c in col.items():
                    rows.setdefault(r, {})[j] = c
            for row in rows.values():
                ech.insert(int_scaled(row, fld))
        self._rank[key] = ech.rank
        return ech.rank

    def check_dd(self, i: int, v: BiDegree):
        """Assert d_{i-1} . d_i = 0 on the bidegree-v piece."""
        if i < 2 or i > self.ring.nvars or (i, v) in self._dd_done:
            return
        self._dd_done.add((i, v))
        fld = self.ring.field
        lower = self.columns(i - 1, v)
        for col in self.columns(i, v):
            acc: dict[int, object] = {}
            for pos, c in col.items():
                for tpos, m in lower[pos].items():
                    val = fld.add(acc.get(tpos, fld.zero()), fld.mul(c, m))
                    if fld.is_zero(val):
                        acc.pop(tpos, None)
                    else:
                        acc[tpos] = val
            assert not acc, f"d.d != 0 at i={i}, v={v}"

    def betti(self, i: int, v: BiDegree) -> int:
        dim = self.dimension(i, v)
        if dim == 0:
            return 0
        b = dim - self.rank(i, v) - self.rank(i + 1, v)
        assert b >= 0, (i, v, dim)
        return b

    def chain_piece(self, i: int, v: BiDegree) -> ChainPiece:
        """The labelled (i, v) piece with its differential, for inspection."""
        ring = self.ring
        pairs = []
        for eps, w, _, d in self.basis(i, v)[0]:
            for pos in range(d):
                pairs.append((eps, ring.monomial_label(w, pos)))
        return ChainPiece(i, v, pairs, self.columns(i, v))


# Worker-side state for the optional process pool; populated before fork so
# children inherit it.  Ranks are pure functions of (i, v), so the merge is
# schedule-independent.
_POOL_ORACLE: KoszulOracle | None = None


def _pool_rank(key):
    i, v = key
    return key, _POOL_ORACLE.rank(i, v)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("MOMENTKOSZUL_THREADS", "1")))
    except ValueError:
        return 1


def _prefill_ranks(oracle: KoszulOracle, max_i: int, bounds, workers: int):
    """Compute every needed rank on a fork pool; results land in the cache."""
    keys = set()
    for i in range(max_i + 1):
        for v in bidegrees_up_to_total(bounds(i)):
            if oracle.dimension(i, v):
                keys.add((i, v))
                keys.add((i + 1, v))
    keys = sorted(k for k in keys if 1 <= k[0] <= oracle.ring.nvars)
    global _POOL_ORACLE
    _POOL_ORACLE = oracle
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            for key, rk in pool.imap_unordered(_pool_rank, keys, chunksize=4):
                oracle._rank[key] = rk
    finally:
        _POOL_ORACLE = None


def tor_over_S(f: RepFamily, max_i: int | None = None,
               max_total_degree: int | None = None,
               fld: Field = QQ, check_dd: bool = True,
               workers: int | None = None) -> BettiTable:
    """Graded Betti numbers of S/I over S, by exact rank per bidegree.

    For homological degree i the bidegrees scanned are total(v) <= i + 3
    (or the explicit ``max_total_degree``).  Nonzero homology found on that
    boundary is recorded in ``boundary_hits``; the bound must then be raised
    for the table to be trusted.  ``workers`` > 1 evaluates the independent
    per-bidegree ranks on a process pool; the result is bit-identical.
    """
    from .closed import projective_dimension

    ring = ring_for_family(f, fld)
    if max_i is None:
        max_i = projective_dimension(f)
    oracle = KoszulOracle(ring)
    if workers is None:
        workers = default_workers()
    if workers > 1 and hasattr(os, "fork"):
        bounds = (lambda i: max_total_degree) if max_total_degree is not None \
            else (lambda i: i + 3)
        _prefill_ranks(oracle, max_i, bounds, workers)
    entries = {}
    boundary = []
    for i in range(max_i + 1):
        bound = max_total_degree if max_total_degree is not None else i + 3
        for v in bidegrees_up_to_total(bound):
            b = oracle.betti(i, v)
            if check_dd and oracle.dimension(i, v):
                oracle.check_dd(i, v)
                oracle.check_dd(i + 1, v)
            if b:
                entries[(i, v)] = b
                if total(v) == bound:
                    boundary.append((i, v))
    return BettiTable(str(f.kind.value), f.n, entries, source="oracle",
                      field=str(fld), boundary_hits=boundary)


def hilbert_oracle(f: RepFamily, order: int, fld: Field = QQ) -> TruncatedSeries:
    """Hilbert series of S/I realized by per-bidegree quotient dimensions."""
    ring = ring_for_family(f, fld)
    coeffs = {}
    for v in bidegrees_up_to_total(order):
        d = ring.quotient_dim_fast(v)
        if d:
            coeffs[v] = d
    return TruncatedSeries.make(("s", "t"), order, coeffs)


def _socle_columns(ring: QuotientRing, v: BiDegree):
    """Columns of the stacked multiplication map (S/I)_v -> sum_x (S/I)_{v+deg x}."""
    dim = ring.dim(v)
    offsets = []
    off = 0
    mults = []
    for x in range(ring.nvars):
        w = (v[0] + 1, v[1]) if x < ring.num_p else (v[0], v[1] + 1)
        offsets.append(off)
        mults.append(ring.mult_by_var(x, v))
        off += ring.dim(w)
    cols = []
    for pos in range(dim):
        col = {}
        for x in range(ring.nvars):
            for tpos, c in mults[x][pos].items():
                col[offsets[x] + tpos] = c
        cols.append(col)
    return cols


def socle(f: RepFamily, max_total_degree: int, fld: Field = QQ) -> dict[BiDegree, int]:
    """Dimension, per bidegree, of the annihilator of all the variables."""
    ring = ring_for_family(f, fld)
    out = {}
    for v in bidegrees_up_to_total(max_total_degree):
        if v == (0, 0):
            continue
        dim = ring.dim(v)
        if dim == 0:
            continue
        ech = IntEchelon(fld.p)
        for col in _socle_columns(ring, v):
            ech.insert(int_scaled(col, fld))
        k = dim - ech.rank
        if k:
            out[v] = k
    return out


def depth_zero_witness(f: RepFamily, fld: Field = QQ,
                       max_total_degree: int = 4) -> tuple[BiDegree, str] | None:
    """A nonzero low-degree socle element (witnessing depth zero), if any."""
    ring = ring_for_family(f, fld)
    names = variable_names(ring.num_p, ring.num_q, f.doubled_names)
    for v in bidegrees_up_to_total(max_total_degree):
        if v == (0, 0) or ring.dim(v) == 0:
            continue
        kernel = kernel_of_columns(_socle_columns(ring, v), fld)
        if kernel:
            combo = kernel[0]
            parts = []
            for pos in sorted(combo):
                mono = ring.monomial_label(v, pos)
                c = combo[pos]
                parts.append(format_monomial(mono, names) if c == 1
                             else f"{c}*{format_monomial(mono, names)}")
            return v, " + ".join(parts)
    return None
