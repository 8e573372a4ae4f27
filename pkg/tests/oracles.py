"""Independent brute-force oracles used to derive expected test values.

Everything here works on plain frozensets via explicit subset closure and
computes ranks with sympy (rationals) or a hand-rolled column-style
modular elimination, deliberately sharing no code with the package.
"""

import itertools

import sympy


def closure(facets):
    faces = set()
    for f in facets:
        f = tuple(sorted(set(f)))
        for k in range(len(f) + 1):
            faces.update(map(frozenset, itertools.combinations(f, k)))
    return faces


def faces_by_dim(faces):
    out = {}
    for f in faces:
        out.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for d in out:
        out[d].sort()
    return out


def boundary_matrix(fb, d):
    """Rows: (d-1)-faces, cols: d-faces; d=0 gives the augmentation row."""
    if d == 0:
        return sympy.Matrix([[1] * len(fb.get(0, []))])
    idx = {f: i for i, f in enumerate(fb.get(d - 1, []))}
    m = sympy.zeros(len(fb.get(d - 1, [])), len(fb.get(d, [])))
    for j, f in enumerate(fb.get(d, [])):
        for pos, v in enumerate(f):
            m[idx[tuple(x for x in f if x != v)], j] = (-1) ** pos
    return m


def rank_rational(m) -> int:
    return m.rank()


def rank_modular(m, p) -> int:
    """Column-style elimination mod p (distinct from the package's row
    elimination)."""
    cols = [[int(m[i, j]) % p for i in range(m.rows)] for j in range(m.cols)]
    rank = 0
    used_rows = set()
    for col in cols:
        pivot_row = next((i for i, x in enumerate(col)
                          if x and i not in used_rows), None)
        if pivot_row is None:
            continue
        inv = pow(col[pivot_row], p - 2, p)
        col = [x * inv % p for x in col]
        for other in cols:
            if other is not col and other[pivot_row]:
                factor = other[pivot_row]
                for i in range(len(other)):
                    other[i] = (other[i] - factor * col[i]) % p
        used_rows.add(pivot_row)
        rank += 1
    return rank


def betti_numbers(facets, p=None):
    """Reduced Betti numbers (beta_-1, ..., beta_top) by definition."""
    fb = faces_by_dim(closure(facets))
    top = max(fb)
    ranks = {}
    for d in range(0, top + 1):
        m = boundary_matrix(fb, d)
        if m.rows == 0 or m.cols == 0:
            ranks[d] = 0
        else:
            ranks[d] = rank_rational(m) if p is None else rank_modular(m, p)
    out = []
    for i in range(-1, top + 1):
        fi = 1 if i == -1 else len(fb.get(i, []))
        out.append(fi - ranks.get(i, 0) - ranks.get(i + 1, 0))
    return tuple(out)


def rank_by_minors(rows) -> int:
    """Rank as the largest k with a nonsingular k x k minor (tiny inputs)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    best = 0
    for k in range(1, min(m, n) + 1):
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                sub = sympy.Matrix([[rows[i][j] for j in ci] for i in ri])
                if sub.det() != 0:
                    best = k
                    break
            else:
                continue
            break
    return best


def connectivity_by_cuts(n, edges) -> int:
    """Vertex connectivity by exhausting candidate cut sets."""
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def connected(removed):
        left = [v for v in range(n) if v not in removed]
        if not left:
            return True
        seen = {left[0]}
        stack = [left[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(left)

    if all(len(adj[v]) == n - 1 for v in range(n)):
        return n - 1
    for k in range(0, n):
        for cut in itertools.combinations(range(n), k):
            if not connected(set(cut)):
                return k
    return n - 1
