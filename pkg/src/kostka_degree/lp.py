"""Exact rational simplex (dense tableau, Bland's rule).

Only what the affine-hull computation needs: free variables, constraints of
the form ``a.x >= b`` or ``a.x = b``, and repeated maximization of different
objectives over the same feasible region.  Phase 1 runs once per system; every
later objective is warm-started from the stored feasible basis.
"""

from fractions import Fraction


class Infeasible(ValueError):
    pass


class Unbounded(ValueError):
    pass


_ZERO = Fraction(0)


def _pivot(rows, obj, basis, r, c):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        prow = [x / piv for x in prow]
        rows[r] = prow
    nz = [(j, x) for j, x in enumerate(prow) if x]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                for j, x in nz:
                    row[j] -= f * x
    f = obj[c]
    if f:
        for j, x in nz:
            obj[j] -= f * x
    basis[r] = c


def _run(rows, obj, basis, ncols, stop=None):
    """Maximize; ``obj`` holds reduced costs ``z_j - c_j`` and ``obj[-1]`` the value.

    ``stop(value)`` may end the search early at any feasible basis.
    """
    while True:
        if stop is not None and stop(obj[-1]):
            return
        c = next((j for j in range(ncols) if obj[j] < 0), None)
        if c is None:
            return
        best = None
        for i, row in enumerate(rows):
            a = row[c]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(rows, obj, basis, best[1], c)


class LinearSystem:
    """Feasible region ``{x in Q^n : a_k.x >= b_k or a_k.x = b_k}``.

    ``constraints`` is an iterable of ``(coeffs, rhs, rel)`` with ``rel`` in
    ``(">=", "=")``.  Raises ``Infeasible`` on construction if the region is empty.
    """

    def __init__(self, n, constraints):
        self.n = n
        cons = [(tuple(Fraction(a) for a in co), Fraction(b), rel) for co, b, rel in constraints]
        n_slack = sum(1 for _, _, rel in cons if rel == ">=")
        m = len(cons)
        ncols = 2 * n + n_slack
        rows = []
        s = 0
        for co, b, rel in cons:
            row = list(co) + [-a for a in co] + [_ZERO] * n_slack
            if rel == ">=":
                row[2 * n + s] = Fraction(-1)
                s += 1
            elif rel != "=":
                raise ValueError(f"bad relation {rel!r}")
            if b < 0:
                row = [-x for x in row]
                b = -b
            art = [_ZERO] * m
            art[len(rows)] = Fraction(1)
            rows.append(row + art + [b])
        total = ncols + m
        basis = list(range(ncols, total))
        # phase 1: maximize -sum(artificials)
        obj = [_ZERO] * (total + 1)
        for row in rows:
            for j in range(ncols):
                obj[j] -= row[j]
            obj[-1] -= row[-1]
        _run(rows, obj, basis, total)
        if obj[-1] != 0:
            raise Infeasible("constraint system is empty")
        # drive artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(rows):
            if basis[i] >= ncols:
                c = next((j for j in range(ncols) if rows[i][j] != 0), None)
                if c is None:
                    del rows[i]
                    del basis[i]
                    continue
                _pivot(rows, [_ZERO] * (total + 1), basis, i, c)
            i += 1
        self.rows = [row[:ncols] + [row[-1]] for row in rows]
        self.basis = basis
        self.ncols = ncols

    def _point(self, rows, basis):
        z = [_ZERO] * self.ncols
        for row, b in zip(rows, basis):
            z[b] = row[-1]
        n = self.n
        return tuple(z[j] - z[n + j] for j in range(n))

    def feasible_point(self):
        return self._point(self.rows, self.basis)

    def maximize(self, c, stop_above=None):
        """Maximize ``c.x``. Returns ``(value, x)``.

        With ``stop_above`` set, returns as soon as a feasible basis reaches a
        value strictly greater than it (the value is then a lower bound).
        """
        n = self.n
        rows = [list(r) for r in self.rows]
        basis = list(self.basis)
        cost = [Fraction(a) for a in c] + [-Fraction(a) for a in c] + [_ZERO] * (self.ncols - 2 * n)
        obj = [-x for x in cost] + [_ZERO]
        for row, b in zip(rows, basis):
            cb = cost[b]
            if cb:
                for j in range(self.ncols):
                    obj[j] += cb * row[j]
                obj[-1] += cb * row[-1]
        stop = None
        if stop_above is not None:
            bound = Fraction(stop_above)

            def stop(v):
                return v > bound

        _run(rows, obj, basis, self.ncols, stop)
        return obj[-1], self._point(rows, basis)
