"""Minimal graded free resolution of the residue field over a quotient ring,
built degree by degree.

State per step: the free module F_s is a list of generator bidegrees; the
presentation d_s is one column per generator, a sparse vector over the graded
basis of F_{s-1} in the generator's bidegree.  For each bidegree v (scanned
in increasing total degree, p-heavy first) the kernel of d_s is computed by
exact elimination with combination tracking; new generators of F_{s+1} are
the canonical kernel rows not already reached by variable multiples of
lower-degree kernel elements.  Minimality (no unit entry in any
presentation) is asserted as each generator is chosen.

Generators above the configured degree bound are invisible, but they cannot
influence Betti numbers inside the bound, so the reported window is exact.
"""

from __future__ import annotations

from .betti import BettiTable
from .fields import QQ, Field
from .ideals import RepFamily
from .linalg import RREFSubspace, kernel_of_columns
from .monomials import BiDegree, bidegrees_up_to_total, sub_bidegrees
from .quotient import QuotientRing, ring_for_family


class _Module:
    """Graded basis bookkeeping for a free module with given generator degrees."""

    def __init__(self, ring: QuotientRing, gens: list[BiDegree]):
        self.ring = ring
        self.gens = gens
        self._blocks: dict[BiDegree, tuple[list, int, list]] = {}

    def blocks(self, v: BiDegree):
        """Returns (blocks, total_dim, owners): blocks are (gen, w_rest, offset,
        dim); owners[pos] = (gen, w_rest, inner)."""
        got = self._blocks.get(v)
        if got is not None:
            return got
        blocks = []
        owners = []
        off = 0
        for gi, w in enumerate(self.gens):
            rest = sub_bidegrees(v, w)
            if rest[0] < 0 or rest[1] < 0:
                continue
            d = self.ring.dim(rest)
            if d:
                blocks.append((gi, rest, off, d))
                owners.extend((gi, rest, k) for k in range(d))
                off += d
        result = (blocks, off, owners)
        self._blocks[v] = result
        return result

    def offset_of_gen(self, v: BiDegree, gi: int) -> int | None:
        for g, _, off, _ in self.blocks(v)[0]:
            if g == gi:
                return off
        return None

    def multiply_by_var(self, x: int, v: BiDegree, vec: dict) -> dict:
        """Image in degree v + deg(x) of a degree-v element under variable x."""
        ring = self.ring
        fld = ring.field
        e = ring.var_bidegree(x)
        w_target = (v[0] + e[0], v[1] + e[1])
        _, _, owners = self.blocks(v)
        out: dict[int, object] = {}
        for pos, c in vec.items():
            gi, rest, inner = owners[pos]
            off = self.offset_of_gen(w_target, gi)
            for tpos, m in ring.mult_by_var(x, rest)[inner].items():
                idx = off + tpos
                val = fld.add(out.get(idx, fld.zero()), fld.mul(c, m))
                if fld.is_zero(val):
                    out.pop(idx, None)
                else:
                    out[idx] = val
        return out

    def multiply_by_monomial(self, mono, v: BiDegree, vec: dict) -> dict:
        """Image in degree v + deg(mono) of a degree-v element."""
        ring = self.ring
        fld = ring.field
        db = (sum(mono[:ring.num_p]), sum(mono[ring.num_p:]))
        w_target = (v[0] + db[0], v[1] + db[1])
        _, _, owners = self.blocks(v)
        out: dict[int, object] = {}
        for pos, c in vec.items():
            gi, rest, inner = owners[pos]
            off = self.offset_of_gen(w_target, gi)
            cols = ring.mult_by_monomial(mono, rest)
            for tpos, m in cols[inner].items():
                idx = off + tpos
                val = fld.add(out.get(idx, fld.zero()), fld.mul(c, m))
                if fld.is_zero(val):
                    out.pop(idx, None)
                else:
                    out[idx] = val
        return out


def resolve_k_over_quotient(f: RepFamily, max_i: int, max_total_degree: int,
                            fld: Field = QQ) -> BettiTable:
    """Betti table of the residue field over S/I, exact within the window
    i <= max_i, total degree <= max_total_degree."""
    ring = ring_for_family(f, fld)
    bidegs = [v for v in bidegrees_up_to_total(max_total_degree)]
    entries = {(0, (0, 0)): 1}

    module = _Module(ring, [(0, 0)])
    # kernel of the augmentation F_0 = R -> k
    kernels: dict[BiDegree, list[dict]] = {}
    for v in bidegs:
        if v == (0, 0):
            continue
        d = ring.dim(v)
        if d:
            kernels[v] = [{k: fld.one()} for k in range(d)]

    boundary = []
    for step in range(1, max_i + 1):
        new_gens: list[BiDegree] = []
        new_cols: list[dict] = []
        for v in bidegs:
            kvecs = kernels.get(v, [])
            if not kvecs:
                continue
            span = RREFSubspace(fld)
            for x in range(ring.nvars):
                e = ring.var_bidegree(x)
                v_prev = (v[0] - e[0], v[1] - e[1])
                for kv in kernels.get(v_prev, []):
                    span.insert(module.multiply_by_var(x, v_prev, kv))
            canon = RREFSubspace(fld)
            for kv in kvecs:
                canon.insert(kv)
            _, _, owners = module.blocks(v)
            for row_items in canon.canonical_rows():
                row = dict(row_items)
                if span.contains(row):
                    continue
                span.insert(row)
                for pos in row:
                    gi, rest, _ = owners[pos]
                    assert rest != (0, 0), \
                        f"unit entry in presentation at step {step}, degree {v}"
                new_gens.append(v)
                new_cols.append(row)
        for v in sorted(set(new_gens)):
            entries[(step, v)] = new_gens.count(v)
            if v[0] + v[1] == max_total_degree:
                # generators on the window edge: the next steps may have
                # syzygies just outside; the caller must widen to trust them
                boundary.append((step, v))
        next_module = _Module(ring, new_gens)
        if step == max_i:
            break
        # kernel of d_step: one column per (generator, quotient basis monomial)
        kernels = {}
        for v in bidegs:
            columns = []
            for w_h, col in zip(new_gens, new_cols):
                rest = sub_bidegrees(v, w_h)
                if rest[0] < 0 or rest[1] < 0 or ring.dim(rest) == 0:
                    continue
                for mono_idx in range(ring.dim(rest)):
                    mono = ring.monomial_label(rest, mono_idx)
                    columns.append(module.multiply_by_monomial(mono, w_h, col))
            if columns:
                raw = kernel_of_columns(columns, fld)
                kernels[v] = [
                    {pos: fld.of(c) for pos, c in kv.items()} for kv in raw
                ]
        module = next_module

    return BettiTable(str(f.kind.value), f.n, entries,
                      source="oracle-resolution", field=str(fld),
                      boundary_hits=boundary)
