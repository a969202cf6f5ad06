"""Graded quotient rings S/I presented piece by piece.

Each bidegree v gets a fixed section of the projection S_v -> (S/I)_v: the
ideal piece is kept in reduced row-echelon form and the quotient basis is the
complement of the pivot monomials, so normal forms and multiplication by a
variable become concrete sparse matrices.  Everything is cached per ring and
computed lazily; all choices are canonical for the fixed monomial order, so
repeated runs produce identical matrices.
"""

from __future__ import annotations

from .fields import QQ, Field
from .linalg import IntEchelon, RREFSubspace, int_scaled
from .monomials import (
    BiDegree,
    ambient_dimension,
    basis_index,
    monomial_basis,
    sub_bidegrees,
)
from .pieces import ideal_span_vectors


class QuotientPiece:
    """One bidegree of S/I: pivot data of I_v plus the complement basis."""

    __slots__ = ("bidegree", "ambient", "rref", "complement", "positions")

    def __init__(self, bidegree, ambient, rref, complement, positions):
        self.bidegree = bidegree
        self.ambient = ambient          # canonical monomial basis of S_v
        self.rref = rref                # RREFSubspace of I_v
        self.complement = complement    # ambient indices of the quotient basis
        self.positions = positions      # ambient index -> quotient coordinate

    @property
    def dimension(self) -> int:
        return len(self.complement)


class QuotientRing:
    def __init__(self, generators, num_p: int, num_q: int, fld: Field = QQ):
        self.generators = list(generators)
        self.num_p = num_p
        self.num_q = num_q
        self.field = fld
        self._pieces: dict[BiDegree, QuotientPiece] = {}
        self._mult: dict[tuple[int, BiDegree], list[dict[int, object]]] = {}
        self._mult_mono: dict[tuple, list[dict[int, object]]] = {}
        self._ideal_rank: dict[BiDegree, int] = {}

    @property
    def nvars(self) -> int:
        return self.num_p + self.num_q

    def var_bidegree(self, x: int) -> BiDegree:
        return (1, 0) if x < self.num_p else (0, 1)

    def piece(self, v: BiDegree) -> QuotientPiece:
        got = self._pieces.get(v)
        if got is not None:
            return got
        ambient = monomial_basis(self.num_p, self.num_q, v)
        rref = RREFSubspace(self.field)
        if self.generators:
            for vec in ideal_span_vectors(self.generators, v, self.field):
                rref.insert(vec)
        pivots = set(rref.rows)
        complement = tuple(j for j in range(len(ambient)) if j not in pivots)
        positions = {j: k for k, j in enumerate(complement)}
        piece = QuotientPiece(v, ambient, rref, complement, positions)
        self._pieces[v] = piece
        return piece

    def dim(self, v: BiDegree) -> int:
        if v[0] < 0 or v[1] < 0:
            return 0
        return self.piece(v).dimension

    def ideal_rank(self, v: BiDegree) -> int:
        """dim I_v by rank only (no echelon kept); cheap for large pieces."""
        got = self._ideal_rank.get(v)
        if got is not None:
            return got
        if not self.generators:
            rank = 0
        else:
            ech = IntEchelon(self.field.p)
            for vec in ideal_span_vectors(self.generators, v, self.field):
                ech.insert(int_scaled(vec, self.field))
            rank = ech.rank
        self._ideal_rank[v] = rank
        return rank

    def quotient_dim_fast(self, v: BiDegree) -> int:
        if v[0] < 0 or v[1] < 0:
            return 0
        piece = self._pieces.get(v)
        if piece is not None:
            return piece.dimension
        return ambient_dimension(self.num_p, self.num_q, v) - self.ideal_rank(v)

    def nf(self, v: BiDegree, ambient_vec: dict) -> dict:
        """Reduce an ambient coefficient vector to quotient coordinates."""
        piece = self.piece(v)
        reduced = piece.rref.reduce(ambient_vec)
        return {piece.positions[j]: c for j, c in reduced.items()}

    def mult_by_var(self, x: int, v: BiDegree) -> list[dict]:
        """Columns of multiplication by variable x: (S/I)_v -> (S/I)_{v+deg x}.

        Entry k is the quotient-coordinate vector of x * (k-th basis monomial).
        """
        key = (x, v)
        got = self._mult.get(key)
        if got is not None:
            return got
        src = self.piece(v)
        w = (v[0] + 1, v[1]) if x < self.num_p else (v[0], v[1] + 1)
        tgt_index = basis_index(self.num_p, self.num_q, w)
        one = self.field.one()
        cols = []
        for j in src.complement:
            mono = src.ambient[j]
            shifted = mono[:x] + (mono[x] + 1,) + mono[x + 1:]
            cols.append(self.nf(w, {tgt_index[shifted]: one}))
        self._mult[key] = cols
        return cols

    def mult_by_monomial(self, mono, v: BiDegree) -> list[dict]:
        """Columns of multiplication by a monomial, composed variable by variable."""
        key = (mono, v)
        got = self._mult_mono.get(key)
        if got is not None:
            return got
        fld = self.field
        # identity start
        cols = [{k: fld.one()} for k in range(self.dim(v))]
        w = v
        for x, e in enumerate(mono):
            for _ in range(e):
                step = self.mult_by_var(x, w)
                new_cols = []
                for col in cols:
                    acc: dict[int, object] = {}
                    for pos, c in col.items():
                        for tpos, m in step[pos].items():
                            val = fld.add(acc.get(tpos, fld.zero()), fld.mul(c, m))
                            if fld.is_zero(val):
                                acc.pop(tpos, None)
                            else:
                                acc[tpos] = val
                    new_cols.append(acc)
                cols = new_cols
                w = (w[0] + 1, w[1]) if x < self.num_p else (w[0], w[1] + 1)
        self._mult_mono[key] = cols
        return cols

    def apply_columns(self, cols: list[dict], vec: dict) -> dict:
        """Apply a column-sparse matrix to a sparse vector."""
        fld = self.field
        acc: dict[int, object] = {}
        for pos, c in vec.items():
            for tpos, m in cols[pos].items():
                val = fld.add(acc.get(tpos, fld.zero()), fld.mul(c, m))
                if fld.is_zero(val):
                    acc.pop(tpos, None)
                else:
                    acc[tpos] = val
        return acc

    def monomial_label(self, v: BiDegree, position: int) -> tuple:
        """The complement basis monomial at a quotient coordinate."""
        piece = self.piece(v)
        return piece.ambient[piece.complement[position]]


def ring_for_family(f, fld: Field = QQ) -> QuotientRing:
    from .ideals import generators

    f.check_field(fld)
    return QuotientRing(generators(f), f.num_p, f.num_q, fld)
