#!/usr/bin/env python3
"""Regenerate the exceptional linear-group fixtures in fixtures/.

Every group produced here is re-validated by the Rust catalog loader
(order and orbit sizes on the natural module), so this script only has to
be deterministic, not trusted.

  SL2(5) < GL4(3)   : first (x, y) pair in SL2(9) (lexicographic search)
                      generating a group of order 120, written over F3
                      via the basis {1, i} of F9 = F3[i], i^2 = -1.
  M11 < GL5(3)      : M11 in its 3-transitive action on 12 points; the
                      permutation module F3^12 has a unique 6-dim
                      submodule C containing the all-ones vector 1, and
                      M11 acts on C/<1>.
  PSL2(11) < GL5(3) : restriction of the M11 module to a point stabiliser
                      in the 12-point action, extended by the scalar -1.
  M23 < GL11(2)     : M23 on 23 points acting on F2^23 / G23 where G23 is
                      the 12-dim submodule (binary Golay code).
"""
import itertools
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def cyc(cycles, n):
    img = list(range(n))
    for c in cycles:
        for i in range(len(c)):
            img[c[i] - 1] = c[(i + 1) % len(c)] - 1
    return tuple(img)


def comp(x, y):
    return tuple(y[x[i]] for i in range(len(x)))


def closure(gens, limit=None):
    n = len(gens[0])
    e = tuple(range(n))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = comp(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit and len(seen) > limit:
                        return seen
        frontier = nxt
    return seen


def order_of(x):
    e = tuple(range(len(x)))
    k, y = 1, x
    while y != e:
        y = comp(y, x)
        k += 1
    return k


# ---------------------------------------------------------------- F_p linear algebra
class Span:
    def __init__(self, p, n):
        self.p, self.n, self.rows = p, n, {}

    def reduce(self, v):
        p = self.p
        v = [a % p for a in v]
        for piv, r in self.rows.items():
            c = v[piv]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, r)]
        return v

    def add(self, v):
        p = self.p
        v = self.reduce(v)
        nz = [i for i, a in enumerate(v) if a]
        if not nz:
            return False
        piv = nz[0]
        inv = pow(v[piv], p - 2, p)
        v = [(a * inv) % p for a in v]
        for k in list(self.rows):
            r = self.rows[k]
            c = r[piv]
            if c:
                self.rows[k] = [(a - c * b) % p for a, b in zip(r, v)]
        self.rows[piv] = v
        return True

    def dim(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[k] for k in sorted(self.rows)]


def perm_vec(v, g):
    w = [0] * len(v)
    for i, a in enumerate(v):
        w[g[i]] = a
    return w


def spin(p, gens, v):
    s = Span(p, len(v))
    s.add(v)
    queue = [v]
    while queue:
        u = queue.pop()
        for g in gens:
            w = perm_vec(u, g)
            if s.add(w):
                queue.append(w)
    return s


def quotient_matrices(p, gens, sub_basis, quot_sub):
    """Matrices of the permutation-group gens on sub/quot_sub (row convention)."""
    n = len(sub_basis[0])
    q = Span(p, n)
    for b in quot_sub:
        q.add(b)
    # complement basis: sub_basis vectors independent modulo quot_sub
    comp_basis = []
    probe = Span(p, n)
    for b in quot_sub:
        probe.add(b)
    for b in sub_basis:
        if probe.add(b):
            comp_basis.append(b)
    d = len(comp_basis)
    # solve for coordinates of w modulo quot_sub in comp_basis
    full = quot_sub + comp_basis

    def coords(w):
        # brute-force linear solve via elimination on augmented system
        m = len(full)
        rows = [list(col) for col in zip(*full)]  # n x m
        aug = [rows[i] + [w[i] % p] for i in range(n)]
        piv_cols = []
        r = 0
        for c in range(m):
            pr = next((i for i in range(r, n) if aug[i][c] % p), None)
            if pr is None:
                continue
            aug[r], aug[pr] = aug[pr], aug[r]
            inv = pow(aug[r][c], p - 2, p)
            aug[r] = [(a * inv) % p for a in aug[r]]
            for i in range(n):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
            piv_cols.append(c)
            r += 1
        x = [0] * m
        for i, c in enumerate(piv_cols):
            x[c] = aug[i][m]
        return x[len(quot_sub):]

    mats = []
    for g in gens:
        mats.append([coords(perm_vec(b, g)) for b in comp_basis])
    assert all(len(r) == d for m in mats for r in m)
    return mats


def write_mgrp(name, comment, p, mats):
    dim = len(mats[0])
    lines = [f"# {line}" for line in comment.strip().splitlines()]
    lines += [f"dim {dim}", f"prime {p}"]
    for m in mats:
        lines.append("gen [" + ",".join("[" + ",".join(str(a) for a in row) + "]" for row in m) + "]")
    (OUT / name).write_text("\n".join(lines) + "\n")
    print("wrote", name)


def write_pgrp(name, comment, gens, order=None):
    n = len(gens[0])
    lines = [f"# {line}" for line in comment.strip().splitlines()]
    lines.append(f"degree {n}")
    if order:
        lines.append(f"order {order}")
    for g in gens:
        lines.append("gen [" + ",".join(str(i + 1) for i in g) + "]")
    (OUT / name).write_text("\n".join(lines) + "\n")
    print("wrote", name)


# ---------------------------------------------------------------- SL2(5) < GL4(3)
def sl25():
    # F9 elements as (a, b) = a + b*i with i^2 = -1
    F = [(a, b) for a in range(3) for b in range(3)]

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def add(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)

    def sub(x, y):
        return ((x[0] - y[0]) % 3, (x[1] - y[1]) % 3)

    one = (1, 0)
    mats = []
    for a, b, c, d in itertools.product(F, repeat=4):
        if sub(mul(a, d), mul(b, c)) == one:
            mats.append((a, b, c, d))

    def to4(m):
        a, b, c, d = m
        def blk(z):
            return [[z[0], z[1]], [(-z[1]) % 3, z[0]]]
        A, B, C, D = blk(a), blk(b), blk(c), blk(d)
        return [A[0] + B[0], A[1] + B[1], C[0] + D[0], C[1] + D[1]]

    def act(m4):
        # permutation of F3^4 (row vectors v -> vM), vectors indexed base 3
        img = []
        for v in range(81):
            x = [(v // 3 ** i) % 3 for i in range(4)]
            y = [sum(x[i] * m4[i][j] for i in range(4)) % 3 for j in range(4)]
            img.append(sum(y[j] * 3 ** j for j in range(4)))
        return tuple(img)

    perms = [act(to4(m)) for m in mats]
    orders = [order_of(x) for x in perms]
    for i in range(len(mats)):
        if orders[i] != 4:
            continue
        for j in range(len(mats)):
            if orders[j] != 6:
                continue
            if order_of(comp(perms[i], perms[j])) not in (5, 10):
                continue
            grp = closure([perms[i], perms[j]], 121)
            if len(grp) == 120:
                return [to4(mats[i]), to4(mats[j])]
    raise SystemExit("no SL2(5) found")


# ---------------------------------------------------------------- M11 / PSL2(11)
M12_GENS = [
    cyc([list(range(1, 12))], 12),
    cyc([(3, 7, 11, 8), (4, 10, 5, 6)], 12),
    cyc([(1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10)], 12),
]


def m11_on_12():
    """Deterministic search for a transitive M11 inside M12."""
    m12 = sorted(closure(M12_GENS))
    assert len(m12) == 95040
    inv = [x for x in m12 if order_of(x) == 2]
    ord4 = [x for x in m12 if order_of(x) == 4]
    for x in inv:
        for y in ord4:
            if order_of(comp(x, y)) != 11:
                continue
            orb = {0}
            stack = [0]
            while stack:
                u = stack.pop()
                for g in (x, y):
                    if g[u] not in orb:
                        orb.add(g[u])
                        stack.append(g[u])
            if len(orb) != 12:
                continue
            if len(closure([x, y], 7921)) == 7920:
                return [x, y]
    raise SystemExit("no transitive M11 found")


def m11_module(gens):
    p, n = 3, 12
    ones = [1] * n
    six = None
    # spin single vectors in lexicographic order until the 6-dim submodule appears
    for v in itertools.product(range(3), repeat=n):
        if not any(v):
            continue
        s = spin(p, gens, list(v))
        if s.dim() == 6 and not any(s.reduce(ones)):
            six = s
            break
    assert six is not None
    return quotient_matrices(p, gens, six.basis(), [ones])


def point_stabiliser_gens(gens, pt, want):
    elems = sorted(closure(gens))
    stab = [g for g in elems if g[pt] == pt]
    assert len(stab) == want
    chosen = []
    for g in stab:
        if g == tuple(range(len(g))):
            continue
        if chosen and len(closure(chosen, want)) == want:
            break
        if not chosen or g not in closure(chosen, want):
            chosen.append(g)
    assert len(closure(chosen)) == want
    return chosen


# ---------------------------------------------------------------- M23 < GL11(2)
def m23_module():
    gens = [
        cyc([list(range(1, 24))], 23),
        cyc([(3, 17, 10, 7, 9), (4, 13, 14, 19, 5), (8, 18, 11, 12, 23), (15, 20, 22, 21, 16)], 23),
    ]
    p, n = 2, 23
    # binary Golay code as the cyclic code with generator x^11+x^10+x^6+x^5+x^4+x^2+1
    # (or its reciprocal); pick the one invariant under both generators.
    for coeffs in ([1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1], [1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1]):
        s = Span(p, n)
        for shift in range(12):
            v = [0] * n
            for i, c in enumerate(coeffs):
                v[(i + shift) % n] = c
            s.add(v)
        if all(not any(s.reduce(perm_vec(b, g))) for b in s.basis() for g in gens):
            code = s.basis()
            full = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            return gens, quotient_matrices(p, gens, full, code)
    raise SystemExit("Golay code not invariant")


def main():
    OUT.mkdir(exist_ok=True)
    write_mgrp(
        "sl2_5_gl4_3.mgrp",
        "SL2(5) < GammaL2(9) < GL4(3); orbit sizes on F3^4: 1, 40, 40\n"
        "generated by tools/make_fixtures.py",
        3,
        sl25(),
    )
    m11 = m11_on_12()
    write_pgrp("m11_12.pgrp", "M11 in its transitive action on 12 points (subgroup of M12)\n"
               "generated by tools/make_fixtures.py", m11, order=7920)
    write_mgrp(
        "m11_gl5_3.mgrp",
        "M11 < GL5(3): quotient C/<1> of the 6-dim submodule C of the 12-point\n"
        "permutation module over F3; orbit sizes 1, 22, 220\n"
        "generated by tools/make_fixtures.py",
        3,
        m11_module(m11),
    )
    l211 = point_stabiliser_gens(m11, 0, 660)
    write_mgrp(
        "psl2_11_gl5_3.mgrp",
        "G = PSL2(11) x <-1> < GL5(3), PSL2(11) the point stabiliser of M11 in\n"
        "the 12-point action; orbit sizes 1, 22, 110, 110 (PSL2(11) alone: 1, 11,\n"
        "11, 55, 55, 110)\n"
        "generated by tools/make_fixtures.py",
        3,
        restrict(m11, l211) + [[[2 if i == j else 0 for j in range(5)] for i in range(5)]],
    )
    small_fixtures()
    gens23, mats23 = m23_module()
    write_pgrp("m23.pgrp", "M23 on 23 points", gens23, order=10200960)
    write_mgrp(
        "m23_gl11_2.mgrp",
        "M23 < GL11(2): F2^23 modulo the binary Golay code; orbit sizes 1, 23, 253, 1771\n"
        "generated by tools/make_fixtures.py",
        2,
        mats23,
    )


# ---------------------------------------------------------------- small fixtures
def vec_index(v):
    return sum(b << i for i, b in enumerate(v))


def affine_gens(mats, n):
    """Permutations of F2^n (vector v is point vec_index(v)) for v -> vM and v -> v + e_1."""
    vecs = [[(x >> i) & 1 for i in range(n)] for x in range(2 ** n)]
    gens = []
    for m in mats:
        gens.append(tuple(vec_index([sum(v[i] * m[i][j] for i in range(n)) % 2 for j in range(n)])
                          for v in vecs))
    gens.append(tuple(x ^ 1 for x in range(2 ** n)))
    return gens


def small_fixtures():
    write_pgrp("d10.pgrp", "D10 acting on 5 points", [cyc([(1, 2, 3, 4, 5)], 5), cyc([(2, 5), (3, 4)], 5)], order=10)
    write_pgrp("m11.pgrp", "M11 on 11 points", [cyc([tuple(range(1, 12))], 11),
                                                cyc([(3, 7, 11, 8), (4, 10, 5, 6)], 11)], order=7920)
    # GL3(2) = <x -> x + e_{i+1} transvections>, F8 multiplication is 7-cycle on nonzero vectors
    t1 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    c = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    write_pgrp("agl3_2.pgrp", "AGL3(2) = 2^3:SL3(2) acting on F2^3", affine_gens([t1, c], 3), order=1344)
    # F8 = F2[w]/(w^3 + w + 1): multiplication by w and the Frobenius map
    mul_w = [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    frob = [[1, 0, 0], [0, 0, 1], [0, 1, 1]]
    write_pgrp("agaml1_8.pgrp", "AGammaL1(8) = 2^3:7:3 acting on F8", affine_gens([mul_w, frob], 3), order=168)
    d10 = [cyc([(1, 2, 3, 4, 5)], 5), cyc([(2, 5), (3, 4)], 5)]
    wr = [cyc([(1, 2)], 10)]
    for g in d10:
        wr.append(tuple(2 * g[x // 2] + x % 2 for x in range(10)))
    write_pgrp("c2_wr_d10.pgrp", "C2 wr D10 acting on 10 points, blocks {1,2},{3,4},...", wr, order=320)
    # GL2(2) wr S3 < GL6(2): block-diagonal GL2(2) on the first block, block permutations
    def blockdiag(a):
        m = [[int(i == j) for j in range(6)] for i in range(6)]
        for i in range(2):
            for j in range(2):
                m[i][j] = a[i][j]
        return m

    def blockperm(pi):
        m = [[0] * 6 for _ in range(6)]
        for b in range(3):
            for i in range(2):
                m[2 * b + i][2 * pi[b] + i] = 1
        return m

    write_mgrp("gl2_2_wr_s3_gl6_2.mgrp",
               "GL2(2) wr S3 < GL6(2), imprimitive on V1 + V2 + V3 (coordinate pairs);\n"
               "orbit sizes 1, 9, 27, 27",
               2, [blockdiag([[1, 1], [0, 1]]), blockdiag([[0, 1], [1, 0]]),
                   blockperm([1, 0, 2]), blockperm([1, 2, 0])])


def restrict(m11, sub_gens):
    """Matrices for sub_gens on the same basis as the M11 module."""
    p, n = 3, 12
    ones = [1] * n
    for v in itertools.product(range(3), repeat=n):
        if not any(v):
            continue
        s = spin(p, m11, list(v))
        if s.dim() == 6 and not any(s.reduce(ones)):
            return quotient_matrices(p, sub_gens, s.basis(), [ones])
    raise SystemExit("unreachable")


if __name__ == "__main__":
    sys.exit(main())
