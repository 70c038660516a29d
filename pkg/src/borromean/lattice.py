"""Integer lattices in Z^3 kept in Hermite normal form.

Used for the translation subgroups of the rotation-generated subgroups:
exact membership, axis spacings, and reduction to canonical residues.
"""

from __future__ import annotations

from dataclasses import dataclass


def _hnf(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form (row echelon over Z, positive pivots)."""
    mat = [list(r) for r in rows if any(r)]
    ncols = 3
    out: list[list[int]] = []
    col = 0
    while col < ncols and mat:
        live = [r for r in mat if r[col] != 0]
        if not live:
            col += 1
            continue
        # euclidean reduction within this column
        while True:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            done = True
            for r in live[1:]:
                q = r[col] // pivot[col]
                for j in range(ncols):
                    r[j] -= q * pivot[j]
                if r[col] != 0:
                    done = False
            live = [pivot] + [r for r in live[1:] if r[col] != 0]
            if done or len(live) == 1:
                break
        if pivot[col] < 0:
            for j in range(ncols):
                pivot[j] = -pivot[j]
        out.append(pivot)
        rest = [r for r in mat if r is not pivot and any(r)]
        mat = rest
        col += 1
    # reduce entries above each pivot
    for i in range(len(out) - 1, -1, -1):
        pcol = next(j for j in range(ncols) if out[i][j] != 0)
        for k in range(i):
            q = out[k][pcol] // out[i][pcol]
            for j in range(ncols):
                out[k][j] -= q * out[i][j]
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^3; basis rows are in Hermite normal form."""

    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_vectors(cls, vectors) -> "IntegerLattice":
        return cls(_hnf([list(v) for v in vectors]))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def reduce(self, v) -> tuple[int, ...]:
        """Unique residue of v in the fundamental cell of the lattice."""
        w = list(v)
        for row in self.basis:
            pcol = next(j for j in range(3) if row[j] != 0)
            q = w[pcol] // row[pcol]
            for j in range(3):
                w[j] -= q * row[j]
        return tuple(w)

    def axis_spacing(self, axis: int) -> int | None:
        """Smallest positive t with t*e_axis in the lattice, if any."""
        order = [i for i in range(3) if i != axis] + [axis]
        rows = [[v[order[0]], v[order[1]], v[order[2]]] for v in self.basis]
        h = _hnf(rows)
        for row in h:
            if row[0] == 0 and row[1] == 0 and row[2] != 0:
                return abs(row[2])
        return None

    def nearest(self, v) -> tuple[int, ...]:
        """A lattice vector near the real vector v.

        Babai rounding against the (possibly skewed) Hermite basis, then a
        local coefficient search; good enough that callers only lose a
        bounded amount of search depth, never correctness.
        """
        import itertools
        work = list(v)
        babai = [0, 0, 0]
        for row in reversed(self.basis):
            pcol = next(j for j in range(3) if row[j] != 0)
            c = round(work[pcol] / row[pcol])
            for j in range(3):
                work[j] -= c * row[j]
                babai[j] += c * row[j]
        best = tuple(babai)
        best_d = max(abs(b - x) for b, x in zip(best, v))
        for deltas in itertools.product((-2, -1, 0, 1, 2), repeat=len(self.basis)):
            cand = list(babai)
            for d, row in zip(deltas, self.basis):
                for j in range(3):
                    cand[j] += d * row[j]
            dist = max(abs(c - x) for c, x in zip(cand, v))
            if dist < best_d:
                best, best_d = tuple(cand), dist
        return best

    def plane_slice(self, axis: int) -> tuple[tuple[int, int], ...]:
        """Basis of the rank-<=2 sublattice with zero axis-coordinate,
        projected to the two remaining coordinates (in increasing order)."""
        keep = [i for i in range(3) if i != axis]
        order = [axis] + keep
        rows = [[v[order[0]], v[order[1]], v[order[2]]] for v in self.basis]
        h = _hnf(rows)
        return tuple((row[1], row[2]) for row in h if row[0] == 0)

    def to_json(self) -> dict:
        return {"basis": [list(r) for r in self.basis], "rank": self.rank}
